#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace petfam {

// Run fn(0..n-1) across a small thread pool.  jobs <= 0 means one
// thread per hardware core.  The first exception wins and is rethrown
// on the calling thread.
inline void parallel_for(int jobs, long n, const std::function<void(long)>& fn) {
  if (jobs <= 0) jobs = (int)std::thread::hardware_concurrency();
  if (jobs < 1) jobs = 1;
  if (jobs == 1 || n <= 1) {
    for (long i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<long> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (!failed.load()) {
      long i = next.fetch_add(1);
      if (i >= n) break;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true);
        break;
      }
    }
  };
  std::vector<std::thread> pool;
  int count = (int)std::min<long>(jobs, n);
  for (int t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace petfam
