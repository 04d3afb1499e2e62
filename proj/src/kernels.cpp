#include "symrig/kernels.hpp"

#include <atomic>
#include <exception>
#include <limits>
#include <vector>

#include <omp.h>

namespace symrig {

int max_threads() { return omp_get_max_threads(); }

void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body, Execution exec) {
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::optional<std::size_t> first_match(std::size_t count, const std::function<bool(std::size_t)>& pred,
                                       Execution exec) {
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < count; ++i) {
      if (pred(i)) return i;
    }
    return std::nullopt;
  }
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> best{kNone};
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 64)
  for (long long i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (idx >= best.load(std::memory_order_relaxed)) continue;
    if (pred(idx)) {
      std::size_t cur = best.load();
      while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
      }
    }
  }
  if (best.load() == kNone) return std::nullopt;
  return best.load();
}

}  // namespace symrig
