#pragma once

// Seeded generator with independent substreams.
//
// Engine: std::mt19937_64. Substream k of seed s is seeded with
// splitmix64(s ^ splitmix64(k)), so restarts and trials never share state.

#include <cstdint>
#include <random>
#include <string_view>

namespace bspec {

inline constexpr std::string_view kRngName =
    "mt19937_64 seeded by splitmix64(seed ^ splitmix64(stream))";

std::uint64_t splitmix64(std::uint64_t x);

class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  Rng substream(std::uint64_t stream) const { return Rng(seed_, stream_key(stream)); }

  double normal() { return normal_(engine_); }
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  int sign() { return (engine_() >> 63) != 0 ? -1 : 1; }
  bool coin() { return (engine_() >> 63) != 0; }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::uint64_t stream_key(std::uint64_t stream) const;

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
};

}  // namespace bspec
