#pragma once

// Structured test functions and searches for large coefficient-to-sup ratios.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bspec/cube.hpp"
#include "bspec/report.hpp"

namespace bspec {

/// sign(x_1 + ... + x_d) on {-1,+1}^d, d odd.
BooleanFunction majority(int d);

/// sup|(Maj_d)_m| = C((d-1)/2, (m-1)/2) (d/m) 2^(-(d-1)) C(d-1, (d-1)/2), d and m odd.
double majority_part_norm(int d, int m);

/// lhs = sup|f_m|, rhs = M_{m,d} sup|f| (d = degree of f). Also records the
/// (1 + sqrt 2)^d sup|f| bound as rhs_growth.
InequalityReport homogeneous_part_ratio(const BooleanFunction& f, int m,
                                        double tol = kDefaultTolerance);

enum class CoefficientLaw { Normal, FlatSign };

struct LevelProfile {
  std::vector<int> levels;  // empty = all levels 0..d
  CoefficientLaw law = CoefficientLaw::Normal;
  bool normalize = false;   // scale to sup norm 1
};

/// Independent draws for every mask with |S| <= d in an allowed level, in
/// ascending mask order.
FourierSpectrum random_spectrum(int n, int d, std::uint64_t seed, const LevelProfile& profile = {});

enum class Strategy { RandomRestart, SignFlip, FlatSignExhaustive };

std::string_view strategy_name(Strategy s);
/// Accepts "random-restart", "sign-flip-local-search", "flat-sign-exhaustive".
std::optional<Strategy> parse_strategy(std::string_view name);

struct SearchConfig {
  int n = 4;
  int d = 2;
  Strategy strategy = Strategy::RandomRestart;
  long long iterations = 1000;  // objective evaluations
  std::uint64_t seed = 1;
  bool homogeneous_only = true;  // level d only; otherwise levels 0..d
};

struct TracePoint {
  long long iteration;  // 1-based evaluation index at which the incumbent improved
  double best;
};

struct Witness {
  FourierSpectrum spectrum{1};
  double ratio = 0.0;
  std::string objective = "bh_ratio";
  std::vector<TracePoint> trace;
  std::string rng;
  long long evaluations = 0;
  bool exhausted = false;  // flat-sign-exhaustive covered every pattern
};

inline constexpr int kMaxExhaustiveCoefficients = 20;

/// Maximises bh_ratio. Incumbents only change on strict improvement, and a
/// larger budget extends the same evaluation sequence.
Witness search_bh_witness(const SearchConfig& cfg);

struct RatioRow {
  int d;
  int n;
  std::string source;  // "search" or "majority"
  double bh_ratio;
  double part_ratio;   // max_m sup|f_m| / sup|f|
  int part_m;
};

/// One search row per n >= d, plus a majority row (n = d) for odd d; sorted
/// by (d, n, source).
std::vector<RatioRow> ratio_table(const std::vector<int>& d_range, const std::vector<int>& n_range,
                                  const SearchConfig& cfg);
void write_ratio_csv(std::ostream& out, const std::vector<RatioRow>& rows);

}  // namespace bspec
