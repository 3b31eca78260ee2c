#include "magnusforest/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace magnusforest {

int resolve_thread_count(bool parallel_enabled) {
  if (!parallel_enabled) return 1;
  int count = static_cast<int>(std::thread::hardware_concurrency());
  if (count < 1) count = 1;
  if (const char* cap = std::getenv("MAGNUS_FOREST_THREADS")) {
    const int limit = std::atoi(cap);
    if (limit >= 1 && limit < count) count = limit;
  }
  return count;
}

void parallel_fill(std::size_t count, int threads, const std::function<void(std::size_t)>& fill) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fill(i);
    return;
  }
  std::vector<std::thread> workers;
  const std::size_t n_workers = std::min<std::size_t>(threads, count);
  std::atomic<std::size_t> next{0};
  for (std::size_t w = 0; w < n_workers; ++w)
    workers.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fill(i);
    });
  for (auto& worker : workers) worker.join();
}

}  // namespace magnusforest
