#pragma once

// Deterministic fan-out for the enumeration kernels.
//
// Work over an index range is always split into the same blocks no matter how
// many workers run, and per-block partial results are combined in a fixed
// pairwise tree. Output is therefore bit-identical for any thread count.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace bspec {

/// Caps the number of worker threads used by library kernels (0 = hardware).
void set_max_threads(unsigned count);
unsigned max_threads();

namespace detail {
void run_blocks(std::size_t block_count,
                const std::function<void(std::size_t)>& body);
}  // namespace detail

/// Calls body(begin, end) on consecutive blocks of `grain` indices covering
/// [0, size). Blocks may run concurrently; each block is visited exactly once.
template <class Body>
void parallel_for(std::size_t size, std::size_t grain, Body&& body) {
  if (size == 0) return;
  grain = std::max<std::size_t>(grain, 1);
  const std::size_t blocks = (size + grain - 1) / grain;
  if (blocks == 1) {
    body(std::size_t{0}, size);
    return;
  }
  detail::run_blocks(blocks, [&](std::size_t b) {
    const std::size_t begin = b * grain;
    body(begin, std::min(size, begin + grain));
  });
}

/// Pairwise (cascade) summation of term(i) for i in [begin, end).
template <class Term>
double pairwise_sum_range(std::size_t begin, std::size_t end, const Term& term) {
  constexpr std::size_t kLeaf = 16;
  if (end - begin <= kLeaf) {
    double s = 0.0;
    for (std::size_t i = begin; i < end; ++i) s += term(i);
    return s;
  }
  const std::size_t mid = begin + (end - begin) / 2;
  return pairwise_sum_range(begin, mid, term) + pairwise_sum_range(mid, end, term);
}

inline double pairwise_sum(std::span<const double> xs) {
  return pairwise_sum_range(0, xs.size(), [&](std::size_t i) { return xs[i]; });
}

/// Sum of term(i) over [0, size) with a fixed block decomposition: blocks are
/// summed pairwise (possibly in parallel), then block sums are summed pairwise.
template <class Term>
double deterministic_sum(std::size_t size, const Term& term) {
  constexpr std::size_t kBlock = std::size_t{1} << 14;
  if (size <= kBlock) return pairwise_sum_range(0, size, term);
  const std::size_t blocks = (size + kBlock - 1) / kBlock;
  std::vector<double> partial(blocks, 0.0);
  parallel_for(size, kBlock, [&](std::size_t begin, std::size_t end) {
    partial[begin / kBlock] = pairwise_sum_range(begin, end, term);
  });
  return pairwise_sum(partial);
}

}  // namespace bspec
