#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace ainfty {

inline int thread_count() {
  if (const char* s = std::getenv("AINFTY_THREADS")) {
    int n = std::atoi(s);
    if (n > 0) return n;
  }
  unsigned h = std::thread::hardware_concurrency();
  return h ? int(h) : 1;
}

// f(index, worker)
inline void parallel_for(size_t n, const std::function<void(size_t, int)>& f) {
  int T = std::min<size_t>(thread_count(), std::max<size_t>(n, 1));
  if (T <= 1) {
    for (size_t i = 0; i < n; ++i) f(i, 0);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> th;
  for (int w = 0; w < T; ++w)
    th.emplace_back([&, w] {
      for (size_t i; (i = next.fetch_add(1)) < n;) f(i, w);
    });
  for (auto& t : th) t.join();
}

}  // namespace ainfty
