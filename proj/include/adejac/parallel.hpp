#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace adejac {

// ADE_JACOBIAN_THREADS caps internal parallelism.  Returns nullopt when the
// variable is unset, and rejects garbage so the CLI can turn it into a usage
// error instead of silently running single-threaded.
inline std::optional<int> thread_cap_from_env()
{
    const char* raw = std::getenv("ADE_JACOBIAN_THREADS");
    if (raw == nullptr)
        return std::nullopt;
    std::string s(raw);
    if (s.empty() || s.size() > 6)
        return -1;
    for (char c : s)
        if (c < '0' || c > '9')
            return -1;
    int value = std::atoi(s.c_str());
    if (value < 1)
        return -1;
    return value;
}

inline int worker_count()
{
    auto cap = thread_cap_from_env();
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1)
        hw = 1;
    if (cap.has_value() && *cap >= 1)
        return *cap < 64 ? *cap : 64;
    return hw < 64 ? hw : 64;
}

// Number of chunks a range of length n is split into.
inline int chunk_count(std::int64_t n)
{
    int workers = worker_count();
    if (workers > n)
        workers = static_cast<int>(n);
    return workers < 1 ? 1 : workers;
}

// Static partition of [0, n) over the worker threads.  The body receives
// (chunk, begin, end); each worker only writes to its own chunk slot, so
// results are deterministic regardless of scheduling; callers merge in
// chunk order.
template <class Body>
void parallel_for(std::int64_t n, const Body& body)
{
    if (n <= 0)
        return;
    int workers = chunk_count(n);
    if (workers <= 1) {
        body(0, std::int64_t{0}, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) {
        std::int64_t begin = n * t / workers;
        std::int64_t end = n * (t + 1) / workers;
        pool.emplace_back([&body, t, begin, end] { body(t, begin, end); });
    }
    for (auto& th : pool)
        th.join();
}

} // namespace adejac
