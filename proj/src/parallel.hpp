#ifndef rankgraph_parallel_hpp
#define rankgraph_parallel_hpp

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace rankgraph::detail {

// Runs fn(i) for i in [0, count) on up to `threads` threads, strided.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    threads = std::max(1u, static_cast<unsigned>(std::min<std::size_t>(threads, count)));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        workers.emplace_back([&fn, t, threads, count] {
            for (std::size_t i = t; i < count; i += threads) fn(i);
        });
    }
}

}

#endif /* rankgraph_parallel_hpp */
