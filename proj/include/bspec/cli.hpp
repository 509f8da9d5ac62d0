#pragma once

// Command-line front end: spectrum, synth, bh, verify, search, cheb.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error,
// 3 capacity exceeded.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "bspec/report.hpp"
#include "bspec/witness_search.hpp"

namespace bspec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapacity = 3;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SuiteConfig {
  int n = 5;
  int d = 4;
  std::uint64_t seed = 1;
  int trials = 20;
  double tol = kDefaultTolerance;
};

struct SuiteResult {
  std::string suite;
  SuiteConfig config;
  std::vector<InequalityReport> reports;
  double wall_seconds = 0.0;

  std::size_t failed() const;
  std::size_t passed() const { return reports.size() - failed(); }
};

/// fourier, hyper, blei, polarization, markov, psi, lorentz, aa, all.
const std::vector<std::string>& suite_names();

/// Throws DomainError for an unknown suite.
SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg);

/// Deterministic JSON (no timing).
nlohmann::json suite_to_json(const SuiteResult& r);
nlohmann::json witness_to_json(const Witness& w, const SearchConfig& cfg);

}  // namespace bspec::cli
