#include "bicross/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <atomic>

namespace bicross {

std::optional<size_t> scan_first_failure_serial(size_t count,
                                                const std::function<bool(size_t)>& ok) {
  for (size_t i = 0; i < count; ++i)
    if (!ok(i)) return i;
  return std::nullopt;
}

std::optional<size_t> scan_first_failure(size_t count,
                                         const std::function<bool(size_t)>& ok) {
#ifdef _OPENMP
  if (count >= 256 && omp_get_max_threads() > 1) {
    std::atomic<size_t> first_bad{count};
#pragma omp parallel for schedule(dynamic, 64)
    for (long long i = 0; i < static_cast<long long>(count); ++i) {
      size_t idx = static_cast<size_t>(i);
      if (idx >= first_bad.load(std::memory_order_relaxed)) continue;
      if (!ok(idx)) {
        size_t cur = first_bad.load(std::memory_order_relaxed);
        while (idx < cur &&
               !first_bad.compare_exchange_weak(cur, idx, std::memory_order_relaxed)) {
        }
      }
    }
    size_t bad = first_bad.load();
    if (bad < count) return bad;
    return std::nullopt;
  }
#endif
  return scan_first_failure_serial(count, ok);
}

}  // namespace bicross
