#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace hcd {

// Runs body(i) for i in [0, count) on up to `workers` threads. Tasks are
// pulled in index order. If any task throws, the exception of the lowest
// failing index is rethrown after all threads join.
inline void parallel_for(unsigned workers, std::size_t count,
                         const std::function<void(std::size_t)>& body) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto loop = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  std::vector<std::thread> threads;
  threads.reserve(n);
  for (unsigned k = 0; k < n; ++k) threads.emplace_back(loop);
  for (auto& th : threads) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace hcd
