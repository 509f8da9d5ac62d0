#include "bspec/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace bspec {

namespace {
std::atomic<unsigned> g_max_threads{0};
}  // namespace

void set_max_threads(unsigned count) { g_max_threads.store(count); }

unsigned max_threads() {
  const unsigned cap = g_max_threads.load();
  if (cap != 0) return cap;
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace detail {

void run_blocks(std::size_t block_count,
                const std::function<void(std::size_t)>& body) {
  const std::size_t workers =
      std::min<std::size_t>(max_threads(), block_count);
  if (workers <= 1) {
    for (std::size_t b = 0; b < block_count; ++b) body(b);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t b = next.fetch_add(1);
      if (b >= block_count) return;
      try {
        body(b);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(block_count);
        return;
      }
    }
  };

  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace detail
}  // namespace bspec
