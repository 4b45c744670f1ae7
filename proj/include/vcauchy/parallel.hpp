#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace vcauchy {

namespace detail {

template <class R>
std::vector<R> unwrap(std::vector<std::optional<R>>& slots)
{
    std::vector<R> out;
    out.reserve(slots.size());
    for (auto& s : slots)
        out.push_back(std::move(*s));
    return out;
}

} // namespace detail

/// Maps fn over items on up to `threads` worker threads. Results come back in
/// input order, so any later reduction is deterministic. The first exception
/// thrown by a worker is rethrown on the caller's thread.
template <class T, class Fn>
auto parallel_map(const std::vector<T>& items, Fn&& fn, unsigned threads)
    -> std::vector<decltype(fn(items.front()))>
{
    using R = decltype(fn(items.front()));
    std::vector<std::optional<R>> results(items.size());
    const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(items.size(), 1));
    if (workers == 1) {
        for (std::size_t i = 0; i < items.size(); ++i)
            results[i].emplace(fn(items[i]));
        return detail::unwrap(results);
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < items.size(); i += workers)
                    results[i].emplace(fn(items[i]));
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& t : pool)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return detail::unwrap(results);
}

} // namespace vcauchy
