#include "bspec/cube.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bspec/errors.hpp"
#include "bspec/parallel.hpp"

namespace bspec {

namespace {

constexpr std::size_t kParallelGrain = std::size_t{1} << 14;

void check_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(std::string(what) + " must be finite");
}

}  // namespace

void BooleanFunction::check_dense_dimension(int n) {
  if (n < 1) throw DomainError("dimension must be at least 1");
  if (n > kMaxDenseDimension)
    throw CapacityError("dense tables are limited to n <= " + std::to_string(kMaxDenseDimension) +
                        " (got n = " + std::to_string(n) + ")");
}

BooleanFunction::BooleanFunction(int n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  check_dense_dimension(n);
  if (values_.size() != (std::size_t{1} << n))
    throw DomainError("value table has " + std::to_string(values_.size()) +
                      " entries, expected 2^" + std::to_string(n));
  for (double v : values_) check_finite(v, "function values");
}

BooleanFunction BooleanFunction::constant(int n, double c) {
  check_dense_dimension(n);
  return BooleanFunction(n, std::vector<double>(std::size_t{1} << n, c));
}

FourierSpectrum::FourierSpectrum(int n) : n_(n) {
  if (n < 1 || n > kMaxSparseDimension)
    throw CapacityError("spectrum dimension must lie in [1, " +
                        std::to_string(kMaxSparseDimension) + "]");
}

FourierSpectrum::FourierSpectrum(int n, std::vector<Coefficient> coefficients)
    : FourierSpectrum(n) {
  const Mask limit = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::sort(coefficients.begin(), coefficients.end(),
            [](const Coefficient& a, const Coefficient& b) { return a.mask < b.mask; });
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const Coefficient& c = coefficients[i];
    if ((c.mask & ~limit) != 0) throw DomainError("subset mask does not fit in n bits");
    check_finite(c.value, "coefficients");
    if (i > 0 && coefficients[i - 1].mask == c.mask) throw DomainError("duplicate subset in spectrum");
    if (c.value == 0.0) continue;
    coeffs_.push_back(c);
    degree_ = std::max(degree_, popcount(c.mask));
  }
}

double FourierSpectrum::coefficient(Mask mask) const {
  auto it = std::lower_bound(coeffs_.begin(), coeffs_.end(), mask,
                             [](const Coefficient& c, Mask m) { return c.mask < m; });
  return (it != coeffs_.end() && it->mask == mask) ? it->value : 0.0;
}

FourierSpectrum FourierSpectrum::scaled(double factor) const {
  std::vector<Coefficient> out(coeffs_);
  for (auto& c : out) c.value *= factor;
  return FourierSpectrum(n_, std::move(out));
}

void walsh_hadamard_in_place(std::span<double> data) {
  const std::size_t size = data.size();
  if (size == 0 || (size & (size - 1)) != 0) throw DomainError("butterfly length must be a power of two");
  const std::size_t pairs = size / 2;
  for (std::size_t h = 1; h < size; h <<= 1) {
    const int shift = std::countr_zero(h);
    // Each butterfly touches its own pair, so any partition of the pair range
    // produces identical results.
    parallel_for(pairs, kParallelGrain, [&](std::size_t begin, std::size_t end) {
      for (std::size_t p = begin; p < end; ++p) {
        const std::size_t i = ((p >> shift) << (shift + 1)) | (p & (h - 1));
        const double a = data[i];
        const double b = data[i + h];
        data[i] = a + b;
        data[i + h] = a - b;
      }
    });
  }
}

FourierSpectrum walsh_transform(const BooleanFunction& f) {
  std::vector<double> work(f.values().begin(), f.values().end());
  walsh_hadamard_in_place(work);
  const double scale = std::ldexp(1.0, -f.dimension());
  std::vector<Coefficient> coeffs;
  for (std::size_t s = 0; s < work.size(); ++s) {
    const double v = work[s] * scale;
    if (std::abs(v) >= kCoefficientDropTolerance) coeffs.push_back({static_cast<Mask>(s), v});
  }
  return FourierSpectrum(f.dimension(), std::move(coeffs));
}

std::vector<double> dense_coefficients(const FourierSpectrum& s) {
  BooleanFunction::check_dense_dimension(s.dimension());
  std::vector<double> dense(std::size_t{1} << s.dimension(), 0.0);
  for (const auto& c : s.coefficients()) dense[c.mask] = c.value;
  return dense;
}

BooleanFunction inverse_transform(const FourierSpectrum& s) {
  std::vector<double> work = dense_coefficients(s);
  walsh_hadamard_in_place(work);
  return BooleanFunction(s.dimension(), std::move(work));
}

int degree(const FourierSpectrum& s) { return s.degree(); }

FourierSpectrum homogeneous_part(const FourierSpectrum& s, int level) {
  if (level < 0 || level > s.dimension())
    throw DomainError("level must lie in [0, n]");
  std::vector<Coefficient> out;
  for (const auto& c : s.coefficients())
    if (popcount(c.mask) == level) out.push_back(c);
  return FourierSpectrum(s.dimension(), std::move(out));
}

FourierSpectrum truncate_degree(const FourierSpectrum& s, int max_level) {
  if (max_level < 0) throw DomainError("degree bound must be non-negative");
  std::vector<Coefficient> out;
  for (const auto& c : s.coefficients())
    if (popcount(c.mask) <= max_level) out.push_back(c);
  return FourierSpectrum(s.dimension(), std::move(out));
}

SupNorm sup_norm(const BooleanFunction& f) {
  const auto values = f.values();
  const std::size_t blocks = (values.size() + kParallelGrain - 1) / kParallelGrain;
  std::vector<SupNorm> partial(blocks, SupNorm{-1.0, 0});
  parallel_for(values.size(), kParallelGrain, [&](std::size_t begin, std::size_t end) {
    SupNorm best{-1.0, 0};
    for (std::size_t r = begin; r < end; ++r) {
      const double a = std::abs(values[r]);
      if (a > best.value) best = {a, static_cast<Mask>(r)};
    }
    partial[begin / kParallelGrain] = best;
  });
  SupNorm best = partial.front();
  for (std::size_t b = 1; b < blocks; ++b)
    if (partial[b].value > best.value) best = partial[b];
  return best;
}

double p_norm(const BooleanFunction& f, double p) {
  if (std::isnan(p) || p < 1.0) throw DomainError("p-norm requires p >= 1");
  if (std::isinf(p)) return sup_norm(f).value;
  const auto values = f.values();
  const double scale = std::ldexp(1.0, -f.dimension());
  double total;
  if (p == 1.0) {
    total = deterministic_sum(values.size(), [&](std::size_t r) { return std::abs(values[r]); });
    return total * scale;
  }
  if (p == 2.0) {
    total = deterministic_sum(values.size(), [&](std::size_t r) { return values[r] * values[r]; });
    return std::sqrt(total * scale);
  }
  total = deterministic_sum(values.size(), [&](std::size_t r) { return std::pow(std::abs(values[r]), p); });
  return std::pow(total * scale, 1.0 / p);
}

double mean(const BooleanFunction& f) {
  const auto values = f.values();
  return deterministic_sum(values.size(), [&](std::size_t r) { return values[r]; }) *
         std::ldexp(1.0, -f.dimension());
}

FourierSpectrum noise_operator(const FourierSpectrum& s, double rho) {
  if (!std::isfinite(rho)) throw DomainError("noise parameter must be finite");
  std::vector<Coefficient> out;
  out.reserve(s.size());
  for (const auto& c : s.coefficients()) {
    const int level = popcount(c.mask);
    out.push_back({c.mask, c.value * (level == 0 ? 1.0 : std::pow(rho, level))});
  }
  return FourierSpectrum(s.dimension(), std::move(out));
}

double variance(const FourierSpectrum& s) {
  const auto cs = s.coefficients();
  return pairwise_sum_range(0, cs.size(), [&](std::size_t i) {
    return cs[i].mask == 0 ? 0.0 : cs[i].value * cs[i].value;
  });
}

double influence(const FourierSpectrum& s, int j) {
  if (j < 1 || j > s.dimension()) throw DomainError("coordinate out of range");
  const Mask bit = Mask{1} << (j - 1);
  const auto cs = s.coefficients();
  return pairwise_sum_range(0, cs.size(), [&](std::size_t i) {
    return (cs[i].mask & bit) ? cs[i].value * cs[i].value : 0.0;
  });
}

std::vector<double> influences(const FourierSpectrum& s) {
  std::vector<double> out(static_cast<std::size_t>(s.dimension()));
  for (int j = 1; j <= s.dimension(); ++j) out[j - 1] = influence(s, j);
  return out;
}

double total_influence(const FourierSpectrum& s) {
  const auto cs = s.coefficients();
  return pairwise_sum_range(0, cs.size(), [&](std::size_t i) {
    return popcount(cs[i].mask) * cs[i].value * cs[i].value;
  });
}

MaxInfluence max_influence(const FourierSpectrum& s) {
  MaxInfluence best{-1.0, 1};
  for (int j = 1; j <= s.dimension(); ++j) {
    const double v = influence(s, j);
    if (v > best.value) best = {v, j};
  }
  return best;
}

}  // namespace bspec
