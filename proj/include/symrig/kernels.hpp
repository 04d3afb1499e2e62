#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace symrig {

// Every data-parallel loop in the library goes through these two primitives.
// The Serial path is the reference; the Parallel path (OpenMP) must produce
// identical results, which the kernel tests check.
enum class Execution { Serial, Parallel };

// Runs body(i) for i in [0, count). Bodies must only write to slot i of
// caller-owned storage. If any body throws, the exception from the lowest
// index is rethrown after the loop.
void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body, Execution exec);

// Smallest i in [0, count) with pred(i), or nullopt.
std::optional<std::size_t> first_match(std::size_t count, const std::function<bool(std::size_t)>& pred,
                                       Execution exec);

int max_threads();

}  // namespace symrig
