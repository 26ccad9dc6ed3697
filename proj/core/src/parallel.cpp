#include "cszi/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace cszi {

unsigned Exec::resolved() const noexcept {
    if (threads > 0) return threads;
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char *env = std::getenv(kThreadsEnv)) {
        char *end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && cap > 0) hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
    }
    return hw;
}

void parallel_for(std::size_t n, const Exec &exec, const std::function<void(std::size_t, std::size_t)> &body,
                  std::size_t min_grain) {
    if (n == 0) return;
    const std::size_t grain = std::max<std::size_t>(min_grain, 1);
    const std::size_t workers = std::min<std::size_t>(exec.resolved(), (n + grain - 1) / grain);
    if (workers <= 1) {
        body(0, n);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    pool.reserve(workers - 1);
    const std::size_t per = (n + workers - 1) / workers;
    for (std::size_t w = 1; w < workers; ++w) {
        const std::size_t b = std::min(n, w * per), e = std::min(n, b + per);
        pool.emplace_back([&, w, b, e] {
            try {
                body(b, e);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    try {
        body(0, std::min(n, per));
    } catch (...) {
        errors[0] = std::current_exception();
    }
    for (auto &t : pool) t.join();
    for (auto &e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace cszi
