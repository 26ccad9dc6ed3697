#ifndef CSZI_PARALLEL_HPP
#define CSZI_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace cszi {

/// Thread budget for one call. 0 means "resolve from CSZI_THREADS, else hardware".
struct Exec {
    unsigned threads = 0;
    unsigned resolved() const noexcept;
};

/// Name of the environment variable capping the worker count.
inline constexpr const char *kThreadsEnv = "CSZI_THREADS";

/// Splits [0, n) into contiguous ranges and runs `body(begin, end)` on each.
void parallel_for(std::size_t n, const Exec &exec, const std::function<void(std::size_t, std::size_t)> &body,
                  std::size_t min_grain = 4096);

}  // namespace cszi

#endif
