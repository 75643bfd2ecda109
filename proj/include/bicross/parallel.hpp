#pragma once

#include "bicross/vec.hpp"

#include <functional>
#include <optional>

namespace bicross {

/// Scans indices 0..count over a pure predicate and returns the smallest
/// failing index, if any. The parallel variant splits the range across
/// OpenMP threads; because the predicate is pure and the smallest index
/// wins, parallel and serial scans always agree.
std::optional<size_t> scan_first_failure(size_t count,
                                         const std::function<bool(size_t)>& ok);
std::optional<size_t> scan_first_failure_serial(size_t count,
                                                const std::function<bool(size_t)>& ok);

}  // namespace bicross
