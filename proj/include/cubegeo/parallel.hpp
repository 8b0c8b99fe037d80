#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace cubegeo {

// Default worker count: CUBEGEO_JOBS if set and positive, else 1.
inline int default_jobs() {
    if (const char* env = std::getenv("CUBEGEO_JOBS")) {
        try {
            int jobs = std::stoi(env);
            if (jobs > 0) {
                return jobs;
            }
        } catch (const std::exception&) {
        }
    }
    return 1;
}

// Evaluates fn(first), ..., fn(first + count - 1) on up to `jobs` threads and
// returns the results in index order. Workers only write their own slots, so
// the output does not depend on scheduling. The lowest-index exception, if
// any, is rethrown after all workers finish.
template <class Fn>
auto parallel_map(std::uint64_t first, std::uint64_t count, int jobs, Fn&& fn) {
    using Result = decltype(fn(first));
    std::vector<std::optional<Result>> slots(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::uint64_t> next{0};

    auto worker = [&] {
        for (std::uint64_t i = next++; i < count; i = next++) {
            try {
                slots[i].emplace(fn(first + i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const auto threads = static_cast<std::uint64_t>(jobs < 1 ? 1 : jobs);
    if (threads == 1 || count < 2) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::uint64_t t = 0; t < std::min(threads, count); ++t) {
            pool.emplace_back(worker);
        }
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    std::vector<Result> out;
    out.reserve(count);
    for (auto& s : slots) {
        out.push_back(std::move(*s));
    }
    return out;
}

} // namespace cubegeo
