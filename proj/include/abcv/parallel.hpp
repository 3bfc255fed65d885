// parallel.hpp -- indexed parallel map with deterministic merge order.
// Callers own the thread budget; workers never spawn further threads.

#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace abcv {

template <class R, class F>
std::vector<R> parallel_map(std::size_t n, unsigned threads, F&& fn) {
  if (threads < 1) threads = 1;
  std::vector<R> out(n);
  if (threads == 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr eptr;
  std::mutex emu;
  auto worker = [&] {
    std::size_t i;
    while (!failed.load(std::memory_order_relaxed) &&
           (i = next.fetch_add(1)) < n) {
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lk(emu);
        if (!eptr) eptr = std::current_exception();
        failed.store(true);
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t + 1 < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (eptr) std::rethrow_exception(eptr);
  return out;
}

}  // namespace abcv
