#include "bspec/polarization.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bspec/cheb_markov.hpp"
#include "bspec/errors.hpp"
#include "bspec/parallel.hpp"
#include "bspec/random.hpp"

namespace bspec {

namespace {

void check_point(const TetrahedralPoly& q, std::span<const double> x) {
  if (static_cast<int>(x.size()) != q.dimension())
    throw DomainError("point has " + std::to_string(x.size()) + " coordinates, expected " +
                      std::to_string(q.dimension()));
  for (double v : x)
    if (!(std::abs(v) <= 1.0 + kCubeSlack)) throw DomainError("coordinate outside [-1, 1]");
}

double monomial(Mask mask, std::span<const double> x) {
  double p = 1.0;
  for (; mask != 0; mask &= mask - 1) p *= x[std::countr_zero(mask)];
  return p;
}

std::vector<std::vector<double>> numeric_weights(const TwoBlockForm& w) {
  std::vector<std::vector<double>> out(w.d + 1);
  for (int k = 0; k <= w.d; ++k) {
    out[k].resize(k + 1);
    for (int j = 0; j <= k; ++j) out[k][j] = w.weight(k, j);
  }
  return out;
}

double int_pow(double base, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

double eval_unchecked(const TetrahedralPoly& q, std::span<const double> x, int level) {
  const auto coeffs = q.spectrum().coefficients();
  return pairwise_sum_range(0, coeffs.size(), [&](std::size_t i) {
    const auto& c = coeffs[i];
    if (level >= 0 && popcount(c.mask) != level) return 0.0;
    return c.value * monomial(c.mask, x);
  });
}

double eval_real(const TetrahedralPoly& q, std::span<const double> x) {
  check_point(q, x);
  return eval_unchecked(q, x);
}

Int128 class_size(std::span<const int> index_map) { return multinomial_class_size(index_map); }

TwoBlockForm two_block_weights(int m, int d) {
  if (d < 0 || m < 0 || m > d) throw DomainError("two-block weights require 0 <= m <= d");
  if (d > kMaxSparseDimension) throw CapacityError("two-block arity is limited to 64");
  TwoBlockForm form{d, m, {}};
  form.w.resize(d + 1);
  for (int k = 0; k <= d; ++k) {
    form.w[k].assign(k + 1, Rational());
    for (int j = std::max(0, k - (d - m)); j <= std::min(k, m); ++j)
      form.w[k][j] = Rational(checked_mul(binomial(m, j), binomial(d - m, k - j)),
                              checked_mul(binomial(d, k), binomial(k, j)));
  }
  return form;
}

double two_block_eval(const TetrahedralPoly& q, const TwoBlockForm& w, std::span<const double> x,
                      std::span<const double> y) {
  if (q.degree() > w.d) throw DomainError("form arity is below the polynomial degree");
  check_point(q, x);
  check_point(q, y);
  const auto weights = numeric_weights(w);
  const auto coeffs = q.spectrum().coefficients();
  std::vector<double> e;
  return pairwise_sum_range(0, coeffs.size(), [&](std::size_t idx) {
    const auto& c = coeffs[idx];
    // e[j] = sum over |T| = j of x^T y^(S \ T): coefficients of prod_{i in S} (y_i + x_i z).
    e.assign(1, 1.0);
    for (Mask rest = c.mask; rest != 0; rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      e.push_back(0.0);
      for (std::size_t j = e.size() - 1; j > 0; --j) e[j] = e[j] * y[i] + e[j - 1] * x[i];
      e[0] *= y[i];
    }
    const int k = popcount(c.mask);
    double s = 0.0;
    for (int j = 0; j <= k; ++j) s += weights[k][j] * e[j];
    return c.value * s;
  });
}

double two_block_oracle(const TetrahedralPoly& q, int m, int d, std::span<const double> x,
                        std::span<const double> y) {
  if (d < q.degree()) throw DomainError("oracle arity is below the polynomial degree");
  if (d > kMaxOracleDegree)
    throw CapacityError("oracle is limited to d <= " + std::to_string(kMaxOracleDegree));
  if (m < 0 || m > d) throw DomainError("oracle requires 0 <= m <= d");
  check_point(q, x);
  check_point(q, y);

  const std::size_t n = x.size();
  const double d_factorial = to_double(factorial(d));
  std::vector<double> point(n);
  double total = 0.0;
  for (Mask xi = 0; xi < (Mask{1} << d); ++xi) {
    std::fill(point.begin(), point.end(), 0.0);
    int sum = 0;
    int product = 1;
    for (int k = 0; k < d; ++k) {
      const int sign = ((xi >> k) & 1u) ? -1 : 1;
      const auto z = k < m ? x : y;
      for (std::size_t i = 0; i < n; ++i) point[i] += sign * z[i];
      sum += sign;
      product *= sign;
    }
    double inner = 0.0;
    for (int r = 0; r <= d; ++r) inner += int_pow(sum, d - r) * eval_unchecked(q, point, r);
    total += product * inner / d_factorial;
  }
  return std::ldexp(total, -d);
}

double two_block_oracle(const TetrahedralPoly& q, int m, std::span<const double> x,
                        std::span<const double> y) {
  return two_block_oracle(q, m, q.degree(), x, y);
}

PairMax two_block_vertex_max(const TetrahedralPoly& q, const TwoBlockForm& w) {
  const int n = q.dimension();
  if (n > kMaxPairScanDimension)
    throw CapacityError("vertex-pair scan is limited to n <= " +
                        std::to_string(kMaxPairScanDimension));
  if (q.degree() > w.d) throw DomainError("form arity is below the polynomial degree");
  const auto weights = numeric_weights(w);
  const auto coeffs = q.spectrum().coefficients();
  const std::size_t size = std::size_t{1} << n;

  // Fixed blocks over x, each keeping its first maximiser; merged in block order.
  constexpr std::size_t kGrain = 16;
  const std::size_t blocks = (size + kGrain - 1) / kGrain;
  std::vector<PairMax> partial(blocks);
  parallel_for(size, kGrain, [&](std::size_t begin, std::size_t end) {
    PairMax best{-1.0, 0, 0};
    std::vector<double> g(size);
    for (std::size_t xr = begin; xr < end; ++xr) {
      // Spectrum of y -> L(x^m, y^(d-m)) at this x.
      std::fill(g.begin(), g.end(), 0.0);
      for (const auto& c : coeffs) {
        const int k = popcount(c.mask);
        for (Mask u = c.mask;; u = (u - 1) & c.mask) {
          const Mask t = c.mask & ~u;
          g[u] += c.value * weights[k][popcount(t)] * character(xr, t);
          if (u == 0) break;
        }
      }
      walsh_hadamard_in_place(g);
      for (std::size_t yr = 0; yr < size; ++yr)
        if (std::abs(g[yr]) > best.value) best = {std::abs(g[yr]), xr, yr};
    }
    partial[begin / kGrain] = best;
  });
  PairMax best = partial.front();
  for (const auto& p : partial)
    if (p.value > best.value) best = p;
  return best;
}

namespace {

std::string pair_witness(const PairMax& p) {
  return "x_row=" + std::to_string(p.x_row) + ",y_row=" + std::to_string(p.y_row);
}

}  // namespace

InequalityReport two_block_bound_check(const TetrahedralPoly& q, int m, double tol) {
  const int d = q.degree();
  if (m < 0 || 2 * m > d) throw DomainError("two-block bound requires 0 <= m <= d/2");
  const PairMax best = two_block_vertex_max(q, two_block_weights(m, d));
  const double sup = sup_norm(inverse_transform(q.spectrum())).value;
  const double constant = 2.0 * std::pow(static_cast<double>(d), m);
  InequalityReport r = make_report("two_block_bound", best.value, constant * sup, tol);
  r.witness = pair_witness(best);
  r.params = {{"n", q.dimension()}, {"d", d}, {"m", m}, {"sup", sup}, {"constant", constant}};
  return r;
}

double homogeneous_polarization_constant(int k, int d) {
  if (k < 1 || k > d) throw DomainError("polarization constant requires 1 <= k <= d");
  // d^d / (k^k (d-k)^(d-k)) * k! (d-k)! / d!, in logs.
  auto xlogx = [](double v) { return v == 0.0 ? 0.0 : v * std::log(v); };
  const double log_c = xlogx(d) - xlogx(k) - xlogx(d - k) + std::lgamma(k + 1.0) +
                       std::lgamma(d - k + 1.0) - std::lgamma(d + 1.0);
  return to_double(markov_number(k, d)) * std::exp(log_c);
}

InequalityReport homogeneous_polarization_check(const TetrahedralPoly& q, int k, double tol) {
  const int d = q.degree();
  for (const auto& c : q.spectrum().coefficients())
    if (popcount(c.mask) != d) throw DomainError("polynomial is not homogeneous");
  if (k < 1 || k > d) throw DomainError("homogeneous polarization requires 1 <= k <= d");
  const PairMax best = two_block_vertex_max(q, two_block_weights(k, d));
  const double sup = sup_norm(inverse_transform(q.spectrum())).value;
  const double constant = homogeneous_polarization_constant(k, d);
  InequalityReport r = make_report("homogeneous_polarization", best.value, constant * sup, tol);
  r.witness = pair_witness(best);
  r.params = {{"n", q.dimension()}, {"d", d}, {"k", k}, {"sup", sup}, {"constant", constant}};
  return r;
}

InequalityReport class_ratio_check(int m, int d, int trials, std::uint64_t seed) {
  if (d < 1 || d > kMaxOracleDegree) throw DomainError("class ratio check requires 1 <= d <= 12");
  if (m < 0 || m > d) throw DomainError("class ratio check requires 0 <= m <= d");
  if (trials < 1) throw DomainError("trials must be positive");
  const Int128 bound = binomial(d, m);
  Rng rng(seed);

  bool all_pass = true;
  double worst = -1.0;
  std::string witness;
  std::vector<int> j1(m);
  std::vector<int> j2(d - m);
  for (int t = 0; t < trials; ++t) {
    // Entries in {0, ..., d}; 0 marks an affine (constant) slot.
    for (int& v : j1) v = rng.uniform_int(0, d);
    for (int& v : j2) v = rng.uniform_int(0, d);
    std::sort(j1.begin(), j1.end());
    std::sort(j2.begin(), j2.end());
    std::vector<int> joined(j1);
    joined.insert(joined.end(), j2.begin(), j2.end());
    std::sort(joined.begin(), joined.end());

    const Int128 whole = class_size(joined);
    const Int128 parts = checked_mul(class_size(j1), class_size(j2));
    if (whole > checked_mul(bound, parts)) all_pass = false;
    const double ratio = to_double(whole) / to_double(parts);
    if (ratio > worst) {
      worst = ratio;
      witness = "trial=" + std::to_string(t);
    }
  }

  InequalityReport r = make_report("class_ratio", worst, to_double(bound), 0.0);
  r.pass = all_pass;
  r.witness = witness;
  r.params = {{"m", m}, {"d", d}, {"trials", trials}};
  return r;
}

}  // namespace bspec
