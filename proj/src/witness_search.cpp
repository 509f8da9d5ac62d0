#include "bspec/witness_search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <tuple>

#include "bspec/cheb_markov.hpp"
#include "bspec/errors.hpp"
#include "bspec/exact.hpp"
#include "bspec/inequalities.hpp"
#include "bspec/io.hpp"
#include "bspec/random.hpp"

namespace bspec {

BooleanFunction majority(int d) {
  if (d < 1 || d % 2 == 0) throw DomainError("majority needs odd d >= 1");
  BooleanFunction::check_dense_dimension(d);
  return BooleanFunction::tabulate(d, [d](Mask row) { return d - 2 * popcount(row) > 0 ? 1.0 : -1.0; });
}

double majority_part_norm(int d, int m) {
  if (d < 1 || m < 1 || d % 2 == 0 || m % 2 == 0 || m > d)
    throw DomainError("majority part norm needs odd 1 <= m <= d");
  const long double value = static_cast<long double>(to_double(binomial((d - 1) / 2, (m - 1) / 2))) *
                            d / m * std::ldexp(1.0L, -(d - 1)) *
                            static_cast<long double>(to_double(binomial(d - 1, (d - 1) / 2)));
  return static_cast<double>(value);
}

InequalityReport homogeneous_part_ratio(const BooleanFunction& f, int m, double tol) {
  const FourierSpectrum s = walsh_transform(f);
  const int d = s.degree();
  if (m < 0 || m > d) throw DomainError("level m must satisfy 0 <= m <= degree");
  const SupNorm part = sup_norm(inverse_transform(homogeneous_part(s, m)));
  const double sup = sup_norm(f).value;
  const double markov = to_double(markov_number(m, d));
  InequalityReport r = make_report("homogeneous_part", part.value, markov * sup, tol);
  r.witness = "row=" + std::to_string(part.row);
  r.params = {{"n", f.dimension()},
              {"d", d},
              {"m", m},
              {"sup", sup},
              {"markov_constant", markov},
              {"rhs_growth", std::pow(1.0 + std::numbers::sqrt2, d) * sup}};
  return r;
}

FourierSpectrum random_spectrum(int n, int d, std::uint64_t seed, const LevelProfile& profile) {
  BooleanFunction::check_dense_dimension(n);
  if (d < 0 || d > n) throw DomainError("random spectrum needs 0 <= d <= n");
  std::vector<bool> allowed(d + 1, profile.levels.empty());
  for (int level : profile.levels) {
    if (level < 0 || level > d) throw DomainError("profile level outside 0..d");
    allowed[level] = true;
  }
  Rng rng(seed);
  std::vector<Coefficient> coeffs;
  for (Mask mask = 0; mask < (Mask{1} << n); ++mask) {
    const int level = popcount(mask);
    if (level > d || !allowed[level]) continue;
    const double v = profile.law == CoefficientLaw::Normal ? rng.normal() : rng.sign();
    coeffs.push_back({mask, v});
  }
  FourierSpectrum s(n, std::move(coeffs));
  if (profile.normalize && !s.empty()) {
    const double sup = sup_norm(inverse_transform(s)).value;
    if (sup > 0.0) s = s.scaled(1.0 / sup);
  }
  return s;
}

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::RandomRestart: return "random-restart";
    case Strategy::SignFlip: return "sign-flip-local-search";
    case Strategy::FlatSignExhaustive: return "flat-sign-exhaustive";
  }
  return "";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  for (Strategy s : {Strategy::RandomRestart, Strategy::SignFlip, Strategy::FlatSignExhaustive})
    if (strategy_name(s) == name) return s;
  return std::nullopt;
}

namespace {

double objective(const FourierSpectrum& s) {
  return safe_ratio(bh_lhs(s), sup_norm(inverse_transform(s)).value);
}

std::uint64_t restart_seed(std::uint64_t seed, std::uint64_t restart) {
  return splitmix64(seed ^ splitmix64(restart + 1));
}

class Incumbent {
 public:
  explicit Incumbent(Witness& w) : w_(w) {}

  /// Records evaluation number `iteration`; returns true on strict improvement.
  bool offer(long long iteration, double ratio) {
    w_.evaluations = iteration;
    if (!w_.trace.empty() && ratio <= w_.ratio) return false;
    w_.ratio = ratio;
    w_.trace.push_back({iteration, ratio});
    return true;
  }

 private:
  Witness& w_;
};

std::vector<Mask> search_masks(const SearchConfig& cfg) {
  std::vector<Mask> masks;
  for (Mask mask = 0; mask < (Mask{1} << cfg.n); ++mask) {
    const int level = popcount(mask);
    if (level == cfg.d || (!cfg.homogeneous_only && level < cfg.d)) masks.push_back(mask);
  }
  return masks;
}

FourierSpectrum signed_spectrum(int n, const std::vector<Mask>& masks, const std::vector<int>& signs) {
  std::vector<Coefficient> coeffs(masks.size());
  for (std::size_t i = 0; i < masks.size(); ++i) coeffs[i] = {masks[i], static_cast<double>(signs[i])};
  return FourierSpectrum(n, std::move(coeffs));
}

/// Value table of a +-1 pattern, kept exact (integer sums) under single flips.
class SignTable {
 public:
  SignTable(int n, const std::vector<Mask>& masks, const std::vector<int>& signs)
      : masks_(masks) {
    const BooleanFunction f = inverse_transform(signed_spectrum(n, masks, signs));
    values_.assign(f.values().begin(), f.values().end());
  }

  double sup() const {
    double best = 0.0;
    for (double v : values_) best = std::max(best, std::abs(v));
    return best;
  }

  /// Sup after flipping coefficient i (current sign `sign`), without applying it.
  double sup_after_flip(std::size_t i, int sign) const {
    const Mask s = masks_[i];
    double best = 0.0;
    for (std::size_t r = 0; r < values_.size(); ++r)
      best = std::max(best, std::abs(values_[r] - 2.0 * sign * character(r, s)));
    return best;
  }

  void flip(std::size_t i, int sign) {
    const Mask s = masks_[i];
    for (std::size_t r = 0; r < values_.size(); ++r) values_[r] -= 2.0 * sign * character(r, s);
  }

 private:
  const std::vector<Mask>& masks_;
  std::vector<double> values_;
};

void run_random_restart(const SearchConfig& cfg, Witness& w) {
  LevelProfile profile;
  if (cfg.homogeneous_only) profile.levels = {cfg.d};
  Incumbent inc(w);
  for (long long it = 1; it <= cfg.iterations; ++it) {
    FourierSpectrum s = random_spectrum(cfg.n, cfg.d, restart_seed(cfg.seed, it - 1), profile);
    if (inc.offer(it, objective(s))) w.spectrum = std::move(s);
  }
}

void run_sign_flip(const SearchConfig& cfg, Witness& w) {
  const auto masks = search_masks(cfg);
  const std::size_t count = masks.size();
  std::vector<int> signs(count);
  const double lhs = bh_lhs(signed_spectrum(cfg.n, masks, std::vector<int>(count, 1)));
  Incumbent inc(w);
  long long it = 0;
  for (std::uint64_t restart = 0; it < cfg.iterations; ++restart) {
    Rng rng(cfg.seed, restart);
    for (int& s : signs) s = rng.sign();
    SignTable table(cfg.n, masks, signs);
    double current = lhs / table.sup();
    if (inc.offer(++it, current)) w.spectrum = signed_spectrum(cfg.n, masks, signs);

    // First-improvement sweep; a full cycle without improvement restarts.
    std::size_t since_improvement = 0;
    for (std::size_t i = 0; since_improvement < count && it < cfg.iterations; i = (i + 1) % count) {
      const double candidate = lhs / table.sup_after_flip(i, signs[i]);
      ++it;
      if (candidate > current) {
        table.flip(i, signs[i]);
        signs[i] = -signs[i];
        current = candidate;
        since_improvement = 0;
        if (inc.offer(it, current)) w.spectrum = signed_spectrum(cfg.n, masks, signs);
      } else {
        ++since_improvement;
        w.evaluations = it;
      }
    }
  }
}

void run_exhaustive(const SearchConfig& cfg, Witness& w) {
  const auto masks = search_masks(cfg);
  const std::size_t count = masks.size();
  if (count > static_cast<std::size_t>(kMaxExhaustiveCoefficients))
    throw CapacityError("flat-sign-exhaustive needs at most 20 coefficients, have " +
                        std::to_string(count));
  std::vector<int> signs(count, 1);
  const double lhs = bh_lhs(signed_spectrum(cfg.n, masks, signs));
  SignTable table(cfg.n, masks, signs);
  Incumbent inc(w);
  const long long patterns = 1LL << count;
  const long long budget = std::min(patterns, cfg.iterations);
  if (inc.offer(1, lhs / table.sup())) w.spectrum = signed_spectrum(cfg.n, masks, signs);
  // Gray-code order: step g flips coefficient ctz(g).
  for (long long g = 1; g < budget; ++g) {
    const std::size_t i = std::countr_zero(static_cast<unsigned long long>(g));
    table.flip(i, signs[i]);
    signs[i] = -signs[i];
    if (inc.offer(g + 1, lhs / table.sup())) w.spectrum = signed_spectrum(cfg.n, masks, signs);
  }
  w.exhausted = budget == patterns;
}

}  // namespace

Witness search_bh_witness(const SearchConfig& cfg) {
  BooleanFunction::check_dense_dimension(cfg.n);
  if (cfg.d < 1 || cfg.d > cfg.n) throw DomainError("search needs 1 <= d <= n");
  if (cfg.iterations < 1) throw DomainError("search budget must be at least 1");

  Witness w;
  w.rng = std::string(kRngName);
  switch (cfg.strategy) {
    case Strategy::RandomRestart: run_random_restart(cfg, w); break;
    case Strategy::SignFlip: run_sign_flip(cfg, w); break;
    case Strategy::FlatSignExhaustive: run_exhaustive(cfg, w); break;
  }
  return w;
}

namespace {

std::pair<double, int> max_part_ratio(const FourierSpectrum& s) {
  const double sup = sup_norm(inverse_transform(s)).value;
  std::pair<double, int> best{-1.0, 0};
  for (int m = 0; m <= s.degree(); ++m) {
    const double r = safe_ratio(sup_norm(inverse_transform(homogeneous_part(s, m))).value, sup);
    if (r > best.first) best = {r, m};
  }
  return best;
}

}  // namespace

std::vector<RatioRow> ratio_table(const std::vector<int>& d_range, const std::vector<int>& n_range,
                                  const SearchConfig& cfg) {
  std::vector<RatioRow> rows;
  for (int d : d_range) {
    for (int n : n_range) {
      if (n < d) continue;
      SearchConfig c = cfg;
      c.n = n;
      c.d = d;
      const Witness w = search_bh_witness(c);
      const auto [part, m] = max_part_ratio(w.spectrum);
      rows.push_back({d, n, "search", w.ratio, part, m});
    }
    if (d % 2 == 1 && d <= kMaxDenseDimension) {
      const FourierSpectrum s = walsh_transform(majority(d));
      const auto [part, m] = max_part_ratio(s);
      rows.push_back({d, d, "majority", objective(s), part, m});
    }
  }
  std::sort(rows.begin(), rows.end(), [](const RatioRow& a, const RatioRow& b) {
    return std::tie(a.d, a.n, a.source) < std::tie(b.d, b.n, b.source);
  });
  return rows;
}

void write_ratio_csv(std::ostream& out, const std::vector<RatioRow>& rows) {
  out << "d,n,source,bh_ratio,part_ratio,part_m\n";
  for (const auto& r : rows)
    out << r.d << ',' << r.n << ',' << r.source << ',' << io::format_double(r.bh_ratio) << ','
        << io::format_double(r.part_ratio) << ',' << r.part_m << '\n';
}

}  // namespace bspec
