#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>

#include "bspec/cheb_markov.hpp"
#include "bspec/cli.hpp"
#include "bspec/errors.hpp"
#include "bspec/inequalities.hpp"
#include "bspec/io.hpp"
#include "bspec/polarization.hpp"
#include "bspec/random.hpp"

namespace bspec::cli {

namespace {

using Reports = std::vector<InequalityReport>;

// Every suite draws from its own family of substreams so that "all" repeats
// the individual suites exactly.
Rng trial_rng(const SuiteConfig& cfg, std::uint64_t suite, std::uint64_t trial) {
  return Rng(cfg.seed, (suite << 32) | trial);
}

std::uint64_t trial_seed(const SuiteConfig& cfg, std::uint64_t suite, std::uint64_t trial) {
  return trial_rng(cfg, suite, trial).engine()();
}

InequalityReport threshold(std::string name, double measured, double limit) {
  return make_report(std::move(name), measured, limit, 0.0);
}

UnivariatePoly random_poly(Rng& rng, int d) {
  std::vector<double> c(d + 1);
  for (double& v : c) v = rng.normal();
  return UnivariatePoly(std::move(c));
}

std::vector<double> random_point(Rng& rng, int n) {
  std::vector<double> x(n);
  for (double& v : x) v = rng.uniform(-1.0, 1.0);
  return x;
}

void fourier_suite(const SuiteConfig& cfg, Reports& out) {
  const int n = std::clamp(cfg.n, 1, 16);
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng = trial_rng(cfg, 1, t);
    std::vector<double> values(std::size_t{1} << n);
    for (double& v : values) v = rng.normal();
    const BooleanFunction f(n, values);
    const FourierSpectrum s = walsh_transform(f);
    const BooleanFunction back = inverse_transform(s);
    double err = 0.0;
    double energy = 0.0;
    for (std::size_t r = 0; r < values.size(); ++r) {
      err = std::max(err, std::abs(back[r] - values[r]));
      energy += values[r] * values[r];
    }
    energy /= static_cast<double>(values.size());
    double coeff_energy = 0.0;
    for (const auto& c : s.coefficients()) coeff_energy += c.value * c.value;

    auto roundtrip = threshold("fourier_roundtrip", err, 1e-12);
    auto parseval = threshold("parseval", std::abs(coeff_energy - energy) / energy, 1e-9);

    const double r1 = rng.uniform(-1.0, 1.0);
    const double r2 = rng.uniform(-1.0, 1.0);
    const FourierSpectrum twice = noise_operator(noise_operator(s, r1), r2);
    const FourierSpectrum once = noise_operator(s, r1 * r2);
    double diff = 0.0;
    for (const auto& c : once.coefficients()) diff = std::max(diff, std::abs(c.value - twice.coefficient(c.mask)));
    auto semigroup = threshold("noise_semigroup", diff, 1e-12);

    for (auto* r : {&roundtrip, &parseval, &semigroup}) {
      r->params = {{"n", n}, {"trial", t}};
      out.push_back(std::move(*r));
    }
  }
}

void hyper_suite(const SuiteConfig& cfg, Reports& out) {
  const int n = std::clamp(cfg.n, 1, 16);
  const int d = std::clamp(cfg.d, 0, n);
  for (int t = 0; t < cfg.trials; ++t) {
    const BooleanFunction f = inverse_transform(random_spectrum(n, d, trial_seed(cfg, 2, t)));
    for (double p : {1.0, 4.0 / 3.0, 1.5, 2.0}) out.push_back(hypercontractivity_check(f, p, cfg.tol));
    out.push_back(noise_contraction_check(f, 2.0, 4.0, 1.0 / std::sqrt(3.0), cfg.tol));
  }
}

void blei_suite(const SuiteConfig& cfg, Reports& out) {
  const int n = std::clamp(cfg.n, 1, 4);
  const int d = std::clamp(cfg.d, 1, 4);
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng = trial_rng(cfg, 3, t);
    Tensor a(n, d);
    for (double& v : a.entries) v = rng.normal();
    for (int k = 1; k <= d; ++k) out.push_back(blei_check(a, k, cfg.tol));
  }
}

void polarization_suite(const SuiteConfig& cfg, Reports& out) {
  const int n = std::clamp(cfg.n, 1, 6);
  const int d = std::clamp(cfg.d, 1, n);
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng = trial_rng(cfg, 4, t);
    const FourierSpectrum s = random_spectrum(n, d, rng.engine()());
    const TetrahedralPoly q(s);
    for (int m = 0; 2 * m <= q.degree(); ++m) out.push_back(two_block_bound_check(q, m, cfg.tol));

    const FourierSpectrum h = random_spectrum(n, d, rng.engine()(), {{d}});
    const TetrahedralPoly qh(h);
    for (int k = 1; k <= d; ++k) out.push_back(homogeneous_polarization_check(qh, k, cfg.tol));

    if (d <= kMaxOracleDegree) {
      const int m = rng.uniform_int(0, q.degree());
      const auto x = random_point(rng, n);
      const auto y = random_point(rng, n);
      const double fast = two_block_eval(q, two_block_weights(m, q.degree()), x, y);
      const double slow = two_block_oracle(q, m, x, y);
      auto r = threshold("two_block_oracle", std::abs(fast - slow), 1e-9);
      r.params = {{"n", n}, {"d", q.degree()}, {"m", m}, {"trial", t}};
      out.push_back(std::move(r));
    }
  }
  const int dc = std::min(d, kMaxOracleDegree);
  for (int m = 0; m <= dc; ++m)
    out.push_back(class_ratio_check(m, dc, std::max(cfg.trials, 1) * 10, trial_seed(cfg, 4, 1000 + m)));
}

void markov_suite(const SuiteConfig& cfg, Reports& out) {
  const int d = std::clamp(cfg.d, 0, kMaxExactDegree);
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng = trial_rng(cfg, 5, t);
    out.push_back(markov_coefficient_check(random_poly(rng, d), d));
  }
  auto cheb = markov_coefficient_check(chebyshev(d), d);
  cheb.name = "markov_chebyshev";
  out.push_back(cheb);

  if (d >= 1) {
    const double leading = to_double(markov_number(d, d));
    auto r = make_report("markov_leading", leading, std::ldexp(1.0, d - 1), 0.0);
    r.pass = leading == std::ldexp(1.0, d - 1);
    r.params = {{"d", d}};
    out.push_back(std::move(r));

    double top = 0.0;
    for (const auto& g : markov_growth_trace(d)) top = std::max(top, g.value);
    auto growth = make_report("markov_growth", top, 1.0 + std::numbers::sqrt2, 0.0);
    growth.params = {{"d_max", d}};
    out.push_back(std::move(growth));
  }
}

void psi_suite(const SuiteConfig& cfg, Reports& out) {
  const int d = std::clamp(cfg.d, 1, kMaxPsiDegree);
  for (int k = 1; k <= d; ++k) {
    const PsiExpansion e = psi_expand(chebyshev(k), k);
    double err = 0.0;
    bool signs = true;
    for (int n = 0; n <= k; ++n) {
      const double exact = to_double(cheb_psi_coeff(n, k));
      err = std::max(err, std::abs(e.a[n] - exact) / std::abs(exact));
      signs = signs && std::signbit(e.a[n]) == std::signbit(exact);
    }
    auto r = threshold("psi_chebyshev", err, 1e-6);
    r.pass = r.pass && signs;
    r.params = {{"d", k}};
    out.push_back(std::move(r));
  }
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng = trial_rng(cfg, 6, t);
    const UnivariatePoly raw = random_poly(rng, d);
    const double sup = grid_sup(raw);
    std::vector<double> c(raw.coefficients());
    for (double& v : c) v /= sup;
    const PsiExpansion e = psi_expand(UnivariatePoly(c), d);
    double worst = 0.0;
    int at = 0;
    for (int n = 0; n <= d; ++n) {
      const double ratio = std::abs(e.a[n]) / to_double(cheb_psi_magnitude(n, d));
      if (ratio > worst) {
        worst = ratio;
        at = n;
      }
    }
    auto r = make_report("psi_extremality", worst, 1.0, kMarkovTolerance);
    r.witness = "n=" + std::to_string(at);
    r.params = {{"d", d}, {"trial", t}};
    out.push_back(std::move(r));
  }
}

void lorentz_suite(const SuiteConfig& cfg, Reports& out) {
  const int n = std::clamp(cfg.n, 1, 16);
  const int d = std::clamp(cfg.d, 1, n);
  for (int t = 0; t < cfg.trials; ++t)
    out.push_back(lorentz_dominance_check(random_spectrum(n, d, trial_seed(cfg, 7, t)), cfg.tol));
}

void aa_suite(const SuiteConfig& cfg, Reports& out) {
  const int n = std::clamp(cfg.n, 1, 16);
  const int d = std::clamp(cfg.d, 1, n);
  for (int t = 0; t < cfg.trials; ++t) {
    LevelProfile profile;
    profile.normalize = true;
    out.push_back(aa_ratio(random_spectrum(n, d, trial_seed(cfg, 8, t), profile), cfg.tol));
  }
  const int nf = std::min(n, 5);
  const int df = std::min(d, 2);
  for (int t = 0; t < cfg.trials; ++t) {
    Rng rng = trial_rng(cfg, 8, 1000 + t);
    std::map<Mask, int> signs;
    for (Mask s = 1; s < (Mask{1} << nf); ++s)
      if (popcount(s) <= df) signs[s] = rng.sign();
    auto r = aa_flat_case(nf, df, 1.0, signs, cfg.tol);
    r.pass = r.pass && r.params["closed_form_error"] <= 1e-12;
    out.push_back(std::move(r));
  }
}

struct Suite {
  const char* name;
  void (*fn)(const SuiteConfig&, Reports&);
};

constexpr Suite kSuites[] = {
    {"fourier", fourier_suite}, {"hyper", hyper_suite},   {"blei", blei_suite},
    {"polarization", polarization_suite}, {"markov", markov_suite}, {"psi", psi_suite},
    {"lorentz", lorentz_suite}, {"aa", aa_suite},
};

}  // namespace

std::size_t SuiteResult::failed() const {
  return static_cast<std::size_t>(
      std::count_if(reports.begin(), reports.end(), [](const InequalityReport& r) { return r.failed(); }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : kSuites) v.emplace_back(s.name);
    v.emplace_back("all");
    return v;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (cfg.trials < 0) throw DomainError("trials must be non-negative");
  SuiteResult result{name, cfg, {}, 0.0};
  const auto start = std::chrono::steady_clock::now();
  bool found = false;
  for (const auto& s : kSuites) {
    if (name == "all" || name == s.name) {
      s.fn(cfg, result.reports);
      found = true;
    }
  }
  if (!found) throw DomainError("unknown suite \"" + name + "\"");
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

nlohmann::json suite_to_json(const SuiteResult& r) {
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& rep : r.reports) reports.push_back(io::report_to_json(rep));
  return {{"suite", r.suite},
          {"seed", r.config.seed},
          {"config", {{"n", r.config.n}, {"d", r.config.d}, {"trials", r.config.trials}, {"tol", r.config.tol}}},
          {"counts", {{"total", r.reports.size()}, {"passed", r.passed()}, {"failed", r.failed()}}},
          {"reports", std::move(reports)}};
}

nlohmann::json witness_to_json(const Witness& w, const SearchConfig& cfg) {
  nlohmann::json trace = nlohmann::json::array();
  for (const auto& p : w.trace) trace.push_back({{"iteration", p.iteration}, {"best", p.best}});
  return {{"objective", w.objective},
          {"ratio", w.ratio},
          {"strategy", strategy_name(cfg.strategy)},
          {"n", cfg.n},
          {"d", cfg.d},
          {"seed", cfg.seed},
          {"iterations", cfg.iterations},
          {"homogeneous_only", cfg.homogeneous_only},
          {"evaluations", w.evaluations},
          {"exhausted", w.exhausted},
          {"rng", w.rng},
          {"trace", std::move(trace)},
          {"spectrum", io::spectrum_to_json(w.spectrum)}};
}

}  // namespace bspec::cli
