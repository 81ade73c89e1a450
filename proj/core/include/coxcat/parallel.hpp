// Minimal deterministic parallel-for: results are written into caller-indexed
// slots, so the merge order never depends on scheduling.  COXCAT_THREADS caps
// the worker count.
#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace coxcat {

inline int worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("COXCAT_THREADS")) {
    long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && (unsigned)cap < hw) hw = (unsigned)cap;
  }
  return (int)hw;
}

template <typename Fn>
void parallel_for(int n, Fn&& fn) {
  int workers = std::min(worker_count(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&]() {
      while (true) {
        int i = next.fetch_add(1);
        if (i >= n || failed.load()) return;
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
          return;
        }
      }
    });
  for (auto& th : pool) th.join();
  if (failed.load() && error) std::rethrow_exception(error);
}

}  // namespace coxcat
