#include "bspec/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bspec/errors.hpp"
#include "bspec/exact.hpp"
#include "bspec/parallel.hpp"

namespace bspec {

namespace {

int effective_degree(const FourierSpectrum& s) { return std::max(1, s.degree()); }

std::string row_witness(Mask row) { return "row=" + std::to_string(row); }

}  // namespace

double bh_lhs(const FourierSpectrum& s) {
  const int d = effective_degree(s);
  const double p = 2.0 * d / (d + 1.0);
  const auto coeffs = s.coefficients();
  const double sum = pairwise_sum_range(0, coeffs.size(), [&](std::size_t i) {
    return std::pow(std::abs(coeffs[i].value), p);
  });
  return std::pow(sum, 1.0 / p);
}

InequalityReport bh_ratio(const FourierSpectrum& s) {
  const SupNorm sup = sup_norm(inverse_transform(s));
  InequalityReport r = make_report("bh_ratio", bh_lhs(s), sup.value);
  r.asserted = false;
  r.witness = row_witness(sup.row);
  r.params = {{"n", s.dimension()}, {"d", s.degree()}};
  return r;
}

Tensor::Tensor(int n_, int d_) : Tensor(n_, d_, {}) {}

Tensor::Tensor(int n_, int d_, std::vector<double> entries_)
    : n(n_), d(d_), entries(std::move(entries_)) {
  if (n < 1 || d < 1) throw DomainError("tensor needs n >= 1 and d >= 1");
  const double count = std::pow(static_cast<double>(n), d);
  if (count > kMaxTensorEntries) throw CapacityError("tensor exceeds 1e7 entries");
  const std::size_t size = static_cast<std::size_t>(count);
  if (entries.empty()) entries.assign(size, 0.0);
  if (entries.size() != size) throw DomainError("tensor needs n^d entries");
  for (double v : entries)
    if (!std::isfinite(v)) throw DomainError("tensor entries must be finite");
}

InequalityReport blei_check(const Tensor& a, int k, double tol) {
  const int d = a.d;
  const int n = a.n;
  if (k < 1 || k > d) throw DomainError("block size k must satisfy 1 <= k <= d");
  const std::size_t size = a.entries.size();

  const double p = 2.0 * d / (d + 1.0);
  const double lhs = std::pow(
      pairwise_sum_range(0, size, [&](std::size_t i) { return std::pow(std::abs(a.entries[i]), p); }),
      1.0 / p);

  // Coordinate c (0-based, c = 0 slowest) has stride n^(d-1-c).
  std::vector<std::size_t> stride(d);
  for (int c = d - 1, s = 1; c >= 0; --c, s *= n) stride[c] = s;

  const double inner_exp = k / (k + 1.0);
  const double outer_exp = (k + 1.0) / (2.0 * k);
  double log_sum = 0.0;
  int subsets = 0;
  bool zero = false;
  std::vector<double> inner;
  for (Mask set = 0; set < (Mask{1} << d); ++set) {
    if (popcount(set) != k) continue;
    ++subsets;
    inner.assign(static_cast<std::size_t>(std::pow(static_cast<double>(n), k)), 0.0);
    for (std::size_t i = 0; i < size; ++i) {
      std::size_t outer = 0;
      for (int c = 0; c < d; ++c)
        if ((set >> c) & 1u) outer = outer * n + (i / stride[c]) % n;
      inner[outer] += a.entries[i] * a.entries[i];
    }
    const double mixed = std::pow(
        pairwise_sum_range(0, inner.size(), [&](std::size_t j) { return std::pow(inner[j], inner_exp); }),
        outer_exp);
    if (mixed == 0.0) zero = true;
    else log_sum += std::log(mixed);
  }
  const double rhs = zero ? 0.0 : std::exp(log_sum / subsets);

  InequalityReport r = make_report("blei", lhs, rhs, tol);
  r.params = {{"n", n}, {"d", d}, {"k", k}};
  return r;
}

InequalityReport hypercontractivity_check(const BooleanFunction& f, double p, double tol) {
  if (!(p >= 1.0 && p <= 2.0)) throw DomainError("hypercontractivity needs p in [1, 2]");
  const int d = walsh_transform(f).degree();
  const double lhs = p_norm(f, 2.0);
  const double rhs = p == 1.0 ? std::exp(static_cast<double>(d)) * p_norm(f, 1.0)
                              : std::pow(p - 1.0, -d / 2.0) * p_norm(f, p);
  InequalityReport r = make_report("hypercontractivity", lhs, rhs, tol);
  r.params = {{"n", f.dimension()}, {"d", d}, {"p", p}};
  return r;
}

InequalityReport noise_contraction_check(const BooleanFunction& f, double p, double q, double rho,
                                         double tol) {
  if (!(p > 1.0 && q >= p)) throw DomainError("noise contraction needs 1 < p <= q");
  double admissible;
  if (std::isinf(q)) admissible = std::isinf(p) ? 1.0 : 0.0;
  else admissible = std::sqrt((p - 1.0) / (q - 1.0));

  const BooleanFunction smoothed = inverse_transform(noise_operator(walsh_transform(f), rho));
  InequalityReport r = make_report("noise_contraction", p_norm(smoothed, q), p_norm(f, p), tol);
  r.params = {{"n", f.dimension()}, {"p", p}, {"q", q}, {"rho", rho}, {"rho_max", admissible}};
  if (std::abs(rho) > admissible * (1.0 + 1e-12)) {
    r.asserted = false;
    r.params["outside_hypothesis"] = 1;
  }
  return r;
}

double lorentz_norm(const FourierSpectrum& s) {
  const int d = effective_degree(s);
  std::vector<double> mags;
  mags.reserve(s.size());
  for (const auto& c : s.coefficients()) mags.push_back(std::abs(c.value));
  // Coefficients arrive in mask order, so a stable sort keeps mask order on ties.
  std::stable_sort(mags.begin(), mags.end(), std::greater<>());
  const double e = -(d - 1.0) / (2.0 * d);
  return pairwise_sum_range(0, mags.size(), [&](std::size_t i) {
    return mags[i] * std::pow(static_cast<double>(i + 1), e);
  });
}

InequalityReport lorentz_dominance_check(const FourierSpectrum& s, double tol) {
  const double lorentz = lorentz_norm(s);
  const double sup = sup_norm(inverse_transform(s)).value;
  InequalityReport r = make_report("lorentz_dominance", bh_lhs(s), lorentz, tol);
  r.params = {{"n", s.dimension()}, {"d", s.degree()}, {"lorentz_ratio", safe_ratio(lorentz, sup)}};
  return r;
}

InequalityReport aa_ratio(const FourierSpectrum& s, double tol) {
  const int d = s.degree();
  const double var = variance(s);
  const double sup = sup_norm(inverse_transform(s)).value;
  const double rhs = std::pow(static_cast<double>(d), 4) * std::exp(4.0 * d);

  if (var == 0.0) {
    InequalityReport r = make_report("aa_ratio", 0.0, rhs, tol);
    r.witness = "degenerate";
    r.params = {{"n", s.dimension()}, {"d", d}, {"degenerate", 1}, {"sup", sup}};
    return r;
  }

  const auto inf = influences(s);
  const MaxInfluence max_inf = max_influence(s);
  const double total = total_influence(s);
  const double sum_sqrt =
      pairwise_sum_range(0, inf.size(), [&](std::size_t j) { return std::sqrt(inf[j]); });
  const double chain_top = std::sqrt(max_inf.value) * sum_sqrt;
  const bool chain_ok = var <= total * (1.0 + 1e-12) && total <= chain_top * (1.0 + 1e-12);

  InequalityReport r = make_report("aa_ratio", var * var / max_inf.value, rhs, tol);
  r.witness = "j=" + std::to_string(max_inf.coordinate);
  r.params = {{"n", s.dimension()},       {"d", d},
              {"var", var},               {"max_inf", max_inf.value},
              {"total_inf", total},       {"sum_sqrt_inf", sum_sqrt},
              {"chain_top", chain_top},   {"chain_ok", chain_ok ? 1 : 0},
              {"sup", sup}};
  if (sup > 1.0 + 1e-12) {
    r.asserted = false;
    r.params["outside_hypothesis"] = 1;
  }
  return r;
}

InequalityReport aa_flat_case(int n, int d, double alpha, const std::map<Mask, int>& signs,
                              double tol) {
  if (d < 1 || d > n) throw DomainError("flat case needs 1 <= d <= n");
  BooleanFunction::check_dense_dimension(n);
  if (!std::isfinite(alpha) || alpha == 0.0) throw DomainError("alpha must be finite and nonzero");

  std::vector<Coefficient> coeffs;
  for (const auto& [mask, sign] : signs) {
    if (mask == 0 || (mask >> n) != 0 || popcount(mask) > d)
      throw DomainError("sign map has a subset outside 1 <= |S| <= d");
    if (sign != 1 && sign != -1) throw DomainError("signs must be +1 or -1");
    coeffs.push_back({mask, alpha * sign});
  }
  double count = 0.0;
  double per_coordinate = 0.0;
  for (int m = 1; m <= d; ++m) {
    count += to_double(binomial(n, m));
    per_coordinate += to_double(binomial(n - 1, m - 1));
  }
  if (static_cast<double>(coeffs.size()) != count)
    throw DomainError("sign map must cover every subset with 1 <= |S| <= d");

  const FourierSpectrum built(n, std::move(coeffs));
  const BooleanFunction f = inverse_transform(built);
  const FourierSpectrum s = walsh_transform(f);

  const double var_closed = alpha * alpha * count;
  const double inf_closed = alpha * alpha * per_coordinate;
  const double var = variance(s);
  double error = std::abs(var - var_closed);
  for (double v : influences(s)) error = std::max(error, std::abs(v - inf_closed));
  error /= var_closed;

  const double max_inf = max_influence(s).value;
  const double lhs = var * var / max_inf;
  const double middle = alpha * alpha * n * count;
  const double bh = bh_lhs(s);
  const double sup = sup_norm(f).value;

  InequalityReport r = make_report("aa_flat_case", lhs, d * bh * bh, tol);
  r.pass = r.pass && lhs <= middle * (1.0 + tol) && middle <= r.rhs * (1.0 + tol);
  r.params = {{"n", n},
              {"d", d},
              {"alpha", alpha},
              {"var_closed", var_closed},
              {"inf_closed", inf_closed},
              {"closed_form_error", error},
              {"chain_middle", middle},
              {"bh_ratio", safe_ratio(bh, sup)}};
  return r;
}

RecursionBound recursion_upper_bound(long long d, double base) {
  if (d < 3) throw DomainError("recursion bound needs d >= 3");
  if (!(base > 0.0)) throw DomainError("recursion base must be positive");
  double log_value = std::log(base);
  int iterations = 0;
  while (d > 3) {
    const double log_d = std::log(static_cast<double>(d));
    const long long m =
        std::max(1LL, static_cast<long long>(std::floor(std::sqrt(d / log_d))));
    log_value += 2.0 * (static_cast<double>(d) / (m + 1) + m * log_d);
    d = m;
    ++iterations;
  }
  const double value = log_value > std::log(std::numeric_limits<double>::max())
                           ? std::numeric_limits<double>::infinity()
                           : std::exp(log_value);
  return {log_value, value, iterations};
}

}  // namespace bspec
