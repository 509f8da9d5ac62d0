#include "bspec/random.hpp"

namespace bspec {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), engine_(splitmix64(seed ^ splitmix64(stream))) {}

std::uint64_t Rng::stream_key(std::uint64_t stream) const {
  // Nested substreams stay distinct from top-level ones.
  return splitmix64(stream_ + 0x632be59bd9b4e019ULL) ^ stream;
}

}  // namespace bspec
