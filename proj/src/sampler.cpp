#include "rankgraph/sampler.hpp"

#include <algorithm>

#include "rankgraph/counter_rng.hpp"
#include "parallel.hpp"

namespace rankgraph {

namespace {

// Collects edges for ranks [first, last), 1-based.
std::vector<NodePair> draw_range(const RankModel& model, std::span<const double> P, std::uint64_t key,
                                 Rank first, Rank last) {
    std::vector<NodePair> edges;
    auto order = model.order();
    for (Rank r = first; r < last; ++r) {
        const double p = P[r - 1];
        // P is non-increasing
        if (p <= 0.0) break;
        const NodePair pair = order[r - 1];
        if (counter_rng::to_unit(counter_rng::hash(key, pair.u, pair.v)) < p) {
            edges.push_back(pair);
        }
    }
    return edges;
}

}

GraphSampler::GraphSampler(const RankModel& model, const ProbabilityProfile& profile)
    : model_(model), profile_(profile) {
    if (model.pair_count() != profile.pair_count()) {
        throw ValidationError("rank model has " + std::to_string(model.pair_count()) +
                              " pairs but probability profile has " + std::to_string(profile.pair_count()));
    }
}

Seed GraphSampler::run_seed(Seed seed_stream, std::uint64_t index) {
    return counter_rng::hash(counter_rng::stream_key(counter_rng::RunSeed, seed_stream), index);
}

Graph GraphSampler::generate(Seed sample_seed, unsigned threads) const {
    const std::uint64_t key = counter_rng::stream_key(counter_rng::EdgeDraw, sample_seed);
    const Rank L = model_.pair_count();
    auto P = profile_.probabilities();

    threads = std::max(1u, threads);
    std::vector<std::vector<NodePair>> parts(threads);
    const Rank chunk = (L + threads - 1) / threads;
    detail::parallel_for(threads, threads, [&](std::size_t t) {
        const Rank first = 1 + t * chunk;
        const Rank last = std::min<Rank>(L + 1, first + chunk);
        if (first < last) parts[t] = draw_range(model_, P, key, first, last);
    });

    std::vector<NodePair> edges;
    for (auto& part : parts) {
        edges.insert(edges.end(), part.begin(), part.end());
    }
    return Graph(model_.node_count(), std::move(edges));
}

std::vector<Graph> GraphSampler::generate_batch(std::size_t count, Seed seed_stream, unsigned threads) const {
    if (count < 1) {
        throw ValidationError("batch size must be at least 1");
    }
    std::vector<Graph> graphs(count);
    detail::parallel_for(count, threads, [&](std::size_t i) {
        graphs[i] = generate(run_seed(seed_stream, i));
    });
    return graphs;
}

}
