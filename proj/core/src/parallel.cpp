#include "swarm/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace swarm {

unsigned resolve_thread_count(unsigned requested) {
  if (requested > 0) {
    return requested;
  }
  if (const char* env = std::getenv("SWARMCTL_THREADS")) {
    const long parsed = std::strtol(env, nullptr, 10);
    if (parsed > 0) {
      return static_cast<unsigned>(parsed);
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

void parallel_for_blocks(std::size_t block_count, unsigned threads,
                         const std::function<void(std::size_t)>& fn) {
  if (block_count == 0) {
    return;
  }
  threads = std::min<std::size_t>(std::max(threads, 1u), block_count);
  if (threads == 1) {
    for (std::size_t b = 0; b < block_count; ++b) {
      fn(b);
    }
    return;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t b = next.fetch_add(1);
      if (b >= block_count || failed.load()) {
        return;
      }
      try {
        fn(b);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) {
          first_error = std::current_exception();
        }
        failed.store(true);
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned i = 0; i < threads; ++i) {
    pool.emplace_back(worker);
  }
  for (auto& th : pool) {
    th.join();
  }
  if (first_error) {
    std::rethrow_exception(first_error);
  }
}

}  // namespace swarm
