#include "alphakit/parallel.hpp"

#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace alphakit {

int max_threads() {
  static const int cached = [] {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    const char* env = std::getenv("ALPHAKIT_THREADS");
    if (env != nullptr) {
      long v = std::strtol(env, nullptr, 10);
      if (v > 0 && v < static_cast<long>(hw)) return static_cast<int>(v);
      if (v > 0) return static_cast<int>(v);
      // 0 or unparsable means auto
    }
    return static_cast<int>(hw);
  }();
  return cached;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  if (n == 0) return;
  std::size_t threads = static_cast<std::size_t>(max_threads());
  if (threads > n) threads = n;
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }

  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      const std::size_t lo = t * n / threads;
      const std::size_t hi = (t + 1) * n / threads;
      for (std::size_t i = lo; i < hi; ++i) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace alphakit
