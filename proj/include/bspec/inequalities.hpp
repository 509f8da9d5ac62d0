#pragma once

// Concrete instances of the coefficient inequalities for low-degree functions
// on the cube. Each *_check returns an InequalityReport; see report.hpp.

#include <map>
#include <vector>

#include "bspec/cube.hpp"
#include "bspec/report.hpp"

namespace bspec {

inline constexpr double kMaxTensorEntries = 1e7;

/// (sum_S |fhat(S)|^(2d/(d+1)))^((d+1)/(2d)) with d the spectrum degree.
/// Degree 0 is read as d = 1 (the l1 norm).
double bh_lhs(const FourierSpectrum& s);

/// lhs = bh_lhs, rhs = sup norm. Not asserted against any constant.
InequalityReport bh_ratio(const FourierSpectrum& s);

/// Array indexed by (i_1, ..., i_d) in [n]^d, i_1 varying slowest.
struct Tensor {
  int n = 0;
  int d = 0;
  std::vector<double> entries;

  Tensor(int n, int d);
  Tensor(int n, int d, std::vector<double> entries);
};

/// lhs = l_{2d/(d+1)} norm of all entries; rhs = geometric mean over the
/// C(d, k) coordinate sets S of size k of the mixed norm
///   (sum_{i_S} (sum_{i_{S^c}} |a|^2)^(k/(k+1)))^((k+1)/(2k)).
InequalityReport blei_check(const Tensor& a, int k, double tol = kDefaultTolerance);

/// ||f||_2 <= (p-1)^(-d/2) ||f||_p for 1 < p <= 2, and <= e^d ||f||_1 at p = 1.
InequalityReport hypercontractivity_check(const BooleanFunction& f, double p,
                                          double tol = kDefaultTolerance);

/// ||T_rho f||_q <= ||f||_p for 1 < p <= q <= inf and |rho| <= sqrt((p-1)/(q-1)).
/// Outside that range the report is not asserted and carries outside_hypothesis = 1.
InequalityReport noise_contraction_check(const BooleanFunction& f, double p, double q, double rho,
                                         double tol = kDefaultTolerance);

/// sum_k f*(k) k^(-(d-1)/(2d)), f* the decreasing rearrangement of |fhat|.
double lorentz_norm(const FourierSpectrum& s);

/// bh_lhs(s) <= lorentz_norm(s); records lorentz_norm / sup as lorentz_ratio.
InequalityReport lorentz_dominance_check(const FourierSpectrum& s, double tol = kDefaultTolerance);

/// lhs = Var^2 / max_j Inf_j, rhs = d^4 e^(4d). Records the chain
/// Var <= sum_j Inf_j <= sqrt(max Inf) sum_j sqrt(Inf_j). Not asserted when
/// sup|f| > 1 (the bound is for [-1, 1]-valued f).
InequalityReport aa_ratio(const FourierSpectrum& s, double tol = kDefaultTolerance);

/// f with fhat(S) = alpha * signs[S] for every nonempty |S| <= d (n >= d).
/// Cross-checks the closed forms Var = alpha^2 sum_m C(n,m) and
/// Inf_j = alpha^2 sum_m C(n-1,m-1) against enumeration (closed_form_error),
/// then checks Var^2 / max Inf <= alpha^2 n sum_m C(n,m) <= d bh_lhs(f)^2.
InequalityReport aa_flat_case(int n, int d, double alpha, const std::map<Mask, int>& signs,
                              double tol = kDefaultTolerance);

struct RecursionBound {
  double log_value;
  double value;  // may be +inf
  int iterations;
};

/// base * prod exp(2 (d/(m+1) + m log d)) over d <- m = floor(sqrt(d / log d))
/// while d > 3.
RecursionBound recursion_upper_bound(long long d, double base);

}  // namespace bspec
