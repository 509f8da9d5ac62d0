#include "bspec/cheb_markov.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "bspec/errors.hpp"

namespace bspec {

namespace {

void check_exact_degree(int d) {
  if (d < 0) throw DomainError("degree must be non-negative");
  if (d > kMaxExactDegree)
    throw CapacityError("exact Chebyshev arithmetic is limited to d <= " +
                        std::to_string(kMaxExactDegree));
}

Int128 abs128(Int128 v) { return v < 0 ? -v : v; }

}  // namespace

UnivariatePoly::UnivariatePoly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  for (double c : coeffs_)
    if (!std::isfinite(c)) throw DomainError("polynomial coefficients must be finite");
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double UnivariatePoly::coefficient(int m) const {
  return (m >= 0 && m < static_cast<int>(coeffs_.size())) ? coeffs_[m] : 0.0;
}

double UnivariatePoly::operator()(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::vector<Int128> chebyshev_exact(int d) {
  check_exact_degree(d);
  std::vector<Int128> prev{1};
  if (d == 0) return prev;
  std::vector<Int128> cur{0, 1};
  for (int k = 1; k < d; ++k) {
    std::vector<Int128> next(cur.size() + 1, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] = checked_mul(2, cur[i]);
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] = checked_add(next[i], -prev[i]);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

UnivariatePoly chebyshev(int d) {
  const auto exact = chebyshev_exact(d);
  std::vector<double> coeffs(exact.size());
  std::transform(exact.begin(), exact.end(), coeffs.begin(), [](Int128 v) { return to_double(v); });
  return UnivariatePoly(std::move(coeffs));
}

Int128 markov_number(int m, int d) {
  check_exact_degree(d);
  if (m < 0 || m > d) throw DomainError("Markov number requires 0 <= m <= d");
  const int d_prime = ((d - m) % 2 == 0) ? d : d - 1;
  return abs128(chebyshev_exact(d_prime)[m]);
}

const std::vector<double>& sup_grid() {
  static const std::vector<double> grid = [] {
    std::vector<double> g(kSupGridPoints);
    const double step = std::numbers::pi / (kSupGridPoints - 1);
    for (int k = 0; k < kSupGridPoints; ++k) g[k] = std::cos(k * step);
    g.front() = 1.0;
    g.back() = -1.0;
    return g;
  }();
  return grid;
}

double grid_sup(const UnivariatePoly& p) {
  double best = 0.0;
  for (double t : sup_grid()) best = std::max(best, std::abs(p(t)));
  return best;
}

InequalityReport markov_coefficient_check(const UnivariatePoly& p, int d, double tol) {
  check_exact_degree(d);
  if (p.degree() > d) throw DomainError("polynomial degree exceeds d");
  const double sup = grid_sup(p);

  double worst_ratio = -1.0;
  int worst_m = 0;
  double worst_lhs = 0.0;
  double worst_rhs = 0.0;
  int attaining = 0;
  for (int m = 0; m <= d; ++m) {
    const double lhs = std::abs(p.coefficient(m));
    const double rhs = to_double(markov_number(m, d)) * sup;
    const double ratio = safe_ratio(lhs, rhs);
    if (ratio > worst_ratio) {
      worst_ratio = ratio;
      worst_m = m;
      worst_lhs = lhs;
      worst_rhs = rhs;
    }
  }
  for (int m = 0; m <= d; ++m) {
    const double ratio =
        safe_ratio(std::abs(p.coefficient(m)), to_double(markov_number(m, d)) * sup);
    if (worst_ratio > 0.0 && std::abs(ratio - worst_ratio) <= tol * worst_ratio) ++attaining;
  }

  InequalityReport r = make_report("markov_coefficient", worst_lhs, worst_rhs, tol);
  r.witness = "m=" + std::to_string(worst_m);
  r.params = {{"d", d}, {"m", worst_m}, {"sup", sup}, {"attaining_count", attaining}};
  return r;
}

double psi_basis(int d, int m, double t) {
  if (d < 0 || m < 0 || m > d) throw DomainError("psi basis requires 0 <= m <= d");
  return std::pow((1.0 + t) / 2.0, m) * std::pow((1.0 - t) / 2.0, d - m);
}

double PsiExpansion::operator()(double t) const {
  double acc = 0.0;
  for (int n = 0; n <= d; ++n) acc += a[n] * psi_basis(d, n, t);
  return acc;
}

PsiExpansion psi_expand(const UnivariatePoly& p, int d) {
  if (d < 1) throw DomainError("psi expansion requires d >= 1");
  if (d > kMaxPsiDegree)
    throw CapacityError("psi expansion is limited to d <= " + std::to_string(kMaxPsiDegree));
  if (p.degree() > d) throw DomainError("polynomial degree exceeds d");

  std::vector<double> nodes(d + 1);
  for (int m = 0; m <= d; ++m) nodes[m] = std::cos(m * std::numbers::pi / d);
  nodes.front() = 1.0;
  nodes.back() = -1.0;

  std::vector<long double> acc(d + 1, 0.0L);
  std::vector<long double> beta;
  for (int m = 0; m <= d; ++m) {
    // t - t_j = (1 - t_j) u - (1 + t_j) v with u = (1+t)/2, v = (1-t)/2, so the
    // node polynomial is a homogeneous form in (u, v); beta[n] is its u^n v^(d-n)
    // coefficient, built by one convolution per factor.
    beta.assign(1, 1.0L);
    long double denom = 1.0L;
    for (int j = 0; j <= d; ++j) {
      if (j == m) continue;
      const long double plus = 1.0L - nodes[j];
      const long double minus = -(1.0L + nodes[j]);
      std::vector<long double> next(beta.size() + 1, 0.0L);
      for (std::size_t n = 0; n < beta.size(); ++n) {
        next[n] += beta[n] * minus;
        next[n + 1] += beta[n] * plus;
      }
      beta = std::move(next);
      denom *= static_cast<long double>(nodes[m]) - nodes[j];
    }
    const long double weight = p(nodes[m]) / denom;
    for (int n = 0; n <= d; ++n) acc[n] += weight * beta[n];
  }

  PsiExpansion out;
  out.d = d;
  out.a.assign(acc.begin(), acc.end());
  return out;
}

Int128 cheb_psi_magnitude(int n, int d) {
  check_exact_degree(d);
  if (n < 0 || n > d) throw DomainError("psi coefficient requires 0 <= n <= d");
  Int128 sum = 0;
  Int128 four_pow = 1;
  for (int m = 0; m <= std::min(d - n, n); ++m) {
    sum = checked_add(sum, checked_mul(four_pow, checked_mul(binomial(d, 2 * m), binomial(d - 2 * m, n - m))));
    four_pow = checked_mul(four_pow, 4);
  }
  return sum;
}

Int128 cheb_psi_coeff(int n, int d) {
  const Int128 magnitude = cheb_psi_magnitude(n, d);
  return ((d - n) % 2 == 0) ? magnitude : -magnitude;
}

TwoBlockConstant two_block_constant(int m, int d) {
  if (m < 0 || 2 * m > d) throw DomainError("two-block constant requires 0 <= m <= d/2");
  check_exact_degree(d);
  TwoBlockConstant c{Rational(cheb_psi_magnitude(m, d), binomial(d, m)), 0.0, 0.0};
  c.value = c.exact.to_double();
  c.cap = 2.0 * std::pow(static_cast<double>(d), m);
  return c;
}

std::vector<GrowthPoint> markov_growth_trace(int d_max) {
  check_exact_degree(d_max);
  std::vector<GrowthPoint> trace;
  for (int d = 1; d <= d_max; ++d) {
    GrowthPoint best{d, 0, -1.0};
    for (int m = 0; m <= d; ++m) {
      const long double root =
          std::pow(static_cast<long double>(markov_number(m, d)), 1.0L / d);
      if (static_cast<double>(root) > best.value) best = {d, m, static_cast<double>(root)};
    }
    trace.push_back(best);
  }
  return trace;
}

}  // namespace bspec
