#pragma once

#include <cstddef>
#include <functional>

namespace spanbicat {

// Runs fn(0..n-1) on up to `jobs` threads. The first exception is rethrown.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn);

}  // namespace spanbicat
