#pragma once

#include <cstddef>
#include <functional>

namespace tfa {

/// Worker cap for parallel_for; 0 means hardware concurrency.
void set_worker_count(std::size_t workers);
std::size_t worker_count();

/// Runs body(i) for i in [0, n) over contiguous chunks. Each index must
/// write only to its own preallocated slot. Nested calls run serially.
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &body);

} // namespace tfa
