#pragma once

// Tetrahedral polynomials and their symmetric d-affine forms, restricted to
// two-block arguments L(x, ..., x, y, ..., y) with m copies of x.
//
// For a monomial x^S with |S| = k the form contributes
//
//   sum_{T subset S} w[k][|T|] x^T y^(S \ T),
//   w[k][j] = C(m, j) C(d - m, k - j) / (C(d, k) C(k, j)),
//
// i.e. the average over placements of S into the d slots (k slots carry the
// variables, the rest the affine constant 1).

#include <cstdint>
#include <span>
#include <vector>

#include "bspec/cube.hpp"
#include "bspec/exact.hpp"
#include "bspec/report.hpp"

namespace bspec {

inline constexpr double kCubeSlack = 1e-12;
inline constexpr int kMaxOracleDegree = 12;
inline constexpr int kMaxPairScanDimension = 10;

/// Q_f(x) = sum_S fhat(S) x^S on [-1, 1]^n. Non-owning.
class TetrahedralPoly {
 public:
  explicit TetrahedralPoly(const FourierSpectrum& s) : s_(&s) {}

  const FourierSpectrum& spectrum() const { return *s_; }
  int dimension() const { return s_->dimension(); }
  int degree() const { return s_->degree(); }

 private:
  const FourierSpectrum* s_;
};

/// Checks |x_i| <= 1 + 1e-12 and the length.
double eval_real(const TetrahedralPoly& q, std::span<const double> x);
/// Same sum at any real point (no range check); `level` < 0 means all levels.
double eval_unchecked(const TetrahedralPoly& q, std::span<const double> x, int level = -1);

/// |[i]| = A! / prod_v (count of v)! for an index map of arity A.
Int128 class_size(std::span<const int> index_map);

struct TwoBlockForm {
  int d = 0;
  int m = 0;
  std::vector<std::vector<Rational>> w;  // w[k][j], 0 <= j <= k <= d

  double weight(int k, int j) const { return w[k][j].to_double(); }
};

TwoBlockForm two_block_weights(int m, int d);

/// L_Q(x^m, y^(d-m)) via the weight table, O(|S|^2) per stored monomial.
double two_block_eval(const TetrahedralPoly& q, const TwoBlockForm& w,
                      std::span<const double> x, std::span<const double> y);

/// The same value from the sign-average polarization identity
///   E_xi[ sum_r (xi_1...xi_d / d!) (xi_1+...+xi_d)^(d-r) Q_r(sum_k xi_k z_k) ],
/// z_k = x for k <= m and y otherwise. Test oracle, d <= 12.
double two_block_oracle(const TetrahedralPoly& q, int m, int d, std::span<const double> x,
                        std::span<const double> y);
double two_block_oracle(const TetrahedralPoly& q, int m, std::span<const double> x,
                        std::span<const double> y);

struct PairMax {
  double value = 0.0;  // max |L(x^m, y^(d-m))| over vertex pairs
  Mask x_row = 0;
  Mask y_row = 0;      // lexicographically smallest (x, y) attaining it
};

/// Exhaustive scan over all 4^n vertex pairs, n <= 10.
PairMax two_block_vertex_max(const TetrahedralPoly& q, const TwoBlockForm& w);

/// max |L(x^m, y^(d-m))| <= 2 d^m sup|Q|, 0 <= m <= d/2.
InequalityReport two_block_bound_check(const TetrahedralPoly& q, int m,
                                       double tol = kDefaultTolerance);

/// For d-homogeneous q:
///   max |L(x^k, y^(d-k))| <= M_{k,d} d^d / (k^k (d-k)^(d-k)) k!(d-k)!/d! sup|Q|.
InequalityReport homogeneous_polarization_check(const TetrahedralPoly& q, int k,
                                                double tol = kDefaultTolerance);
/// The constant multiplying sup|Q| above (0^0 = 1).
double homogeneous_polarization_constant(int k, int d);

/// |[j1 + j2]| <= C(d, m) |[j1]| |[j2]| on random sorted index maps of
/// arities m and d - m, checked in exact arithmetic.
InequalityReport class_ratio_check(int m, int d, int trials, std::uint64_t seed);

}  // namespace bspec
