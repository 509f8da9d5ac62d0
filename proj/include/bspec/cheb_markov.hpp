#pragma once

// Univariate extremal-coefficient machinery: Chebyshev polynomials, Markov
// numbers and the Bernstein-type basis
//
//   psi_{d,m}(t) = ((1 + t) / 2)^m ((1 - t) / 2)^(d - m),   0 <= m <= d,
//
// in which Chebyshev coefficients are again extremal among polynomials
// bounded by 1 on [-1, 1].

#include <vector>

#include "bspec/exact.hpp"
#include "bspec/report.hpp"

namespace bspec {

inline constexpr int kMaxExactDegree = 40;
inline constexpr int kMaxPsiDegree = 25;
inline constexpr int kSupGridPoints = 4096;
inline constexpr double kMarkovTolerance = 1e-6;

/// Real polynomial in the monomial basis; coefficients()[m] multiplies t^m.
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(std::vector<double> coeffs);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coefficients() const { return coeffs_; }
  double coefficient(int m) const;
  double operator()(double t) const;

 private:
  std::vector<double> coeffs_;
};

/// Exact monomial coefficients of T_d (three-term recurrence). d <= 40.
std::vector<Int128> chebyshev_exact(int d);
UnivariatePoly chebyshev(int d);

/// M_{m,d}: |a_m(T_d)| if m = d (mod 2), else |a_m(T_{d-1})|.
Int128 markov_number(int m, int d);

/// Chebyshev-Lobatto sample points cos(k pi / (N - 1)), k = 0..N-1.
const std::vector<double>& sup_grid();
/// max |p| over sup_grid().
double grid_sup(const UnivariatePoly& p);

/// Checks |a_m| <= M_{m,d} sup|p| for every m; lhs/rhs describe the worst m.
InequalityReport markov_coefficient_check(const UnivariatePoly& p, int d,
                                          double tol = kMarkovTolerance);

double psi_basis(int d, int m, double t);

struct PsiExpansion {
  int d = 0;
  std::vector<double> a;  // a[n] multiplies psi_{d,n}

  double operator()(double t) const;
};

/// Coordinates of p in the psi_{d,.} basis by Lagrange interpolation at
/// t_m = cos(m pi / d). Requires deg p <= d and 1 <= d <= 25.
PsiExpansion psi_expand(const UnivariatePoly& p, int d);

/// a_n(T_d) = (-1)^(d-n) sum_{m=0}^{min(n, d-n)} 4^m C(d, 2m) C(d-2m, n-m).
Int128 cheb_psi_coeff(int n, int d);
/// The unsigned sum in cheb_psi_coeff.
Int128 cheb_psi_magnitude(int n, int d);

struct TwoBlockConstant {
  Rational exact;  // C(d,m)^{-1} sum_k 4^k C(d,2k) C(d-2k, m-k)
  double value;
  double cap;      // 2 d^m
};

/// Sharp constant bounding |L(x^m, y^{d-m})| / sup|Q| for 0 <= m <= d/2.
TwoBlockConstant two_block_constant(int m, int d);

struct GrowthPoint {
  int d;
  int argmax_m;
  double value;  // max_m M_{m,d}^{1/d}
};

/// Entries for d = 1..d_max.
std::vector<GrowthPoint> markov_growth_trace(int d_max);

}  // namespace bspec
