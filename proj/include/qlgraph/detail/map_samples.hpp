#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "qlgraph/error.hpp"

namespace qlgraph {

namespace detail {

[[noreturn]] void rethrow_with_sample(std::exception_ptr error, std::size_t sample);

}  // namespace detail

template <class T, class Fn>
std::vector<T> map_samples(std::size_t n, Fn&& fn, unsigned threads) {
    std::vector<T> results(n);
    std::vector<std::exception_ptr> errors(n);
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                results[i] = fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (errors[i]) detail::rethrow_with_sample(errors[i], i);
    }
    return results;
}

}  // namespace qlgraph
