#include "rankgraph/rank_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rankgraph/counter_rng.hpp"

namespace rankgraph {

namespace {

struct Keyed {
    double cost;
    std::uint64_t tie;
    NodePair pair;
};

}

RankModel::RankModel(std::uint32_t n, std::vector<NodePair> order, Seed tie_seed)
    : n_(n), tie_seed_(tie_seed), order_(std::move(order)) {
    rank_index_.assign(order_.size(), 0);
    for (std::size_t i = 0; i < order_.size(); ++i) {
        const NodePair& p = order_[i];
        if (p.u >= p.v || p.v >= n_) {
            throw InvalidPairError(p, n_);
        }
        Rank& slot = rank_index_[triangular_index(n_, p)];
        if (slot != 0) {
            throw ValidationError("pair " + p.str() + " appears twice in rank order");
        }
        slot = i + 1;
    }
    display_order_.resize(n_);
    std::iota(display_order_.begin(), display_order_.end(), NodeId{0});
}

RankModel RankModel::from_cost(std::uint32_t n, const CostFunction& cost,
                               SortDirection direction, Seed tie_seed) {
    if (n < 2) {
        throw ValidationError("rank model needs at least 2 nodes, got " + std::to_string(n));
    }
    const std::uint64_t key = counter_rng::stream_key(counter_rng::TieBreak, tie_seed);

    std::vector<Keyed> keyed;
    keyed.reserve(rankgraph::pair_count(n));
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            double c = cost(u, v);
            if (!std::isfinite(c)) {
                throw NonFiniteCostError(NodePair{u, v});
            }
            if (direction == SortDirection::Descending) {
                c = -c;
            }
            keyed.push_back(Keyed{c, counter_rng::hash(key, u, v), NodePair{u, v}});
        }
    }
    // (u,v) is the last key only to make the order total when two tie keys collide
    std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
        if (a.cost != b.cost) return a.cost < b.cost;
        if (a.tie != b.tie) return a.tie < b.tie;
        return a.pair < b.pair;
    });

    std::vector<NodePair> order;
    order.reserve(keyed.size());
    for (const Keyed& k : keyed) {
        order.push_back(k.pair);
    }
    return RankModel(n, std::move(order), tie_seed);
}

RankModel RankModel::from_order(std::uint32_t n, std::vector<NodePair> order, Seed tie_seed) {
    if (n < 2) {
        throw ValidationError("rank model needs at least 2 nodes, got " + std::to_string(n));
    }
    if (order.size() != rankgraph::pair_count(n)) {
        throw ValidationError("rank order lists " + std::to_string(order.size()) + " pairs, expected " +
                              std::to_string(rankgraph::pair_count(n)));
    }
    return RankModel(n, std::move(order), tie_seed);
}

NodePair RankModel::at(Rank r) const {
    if (r < 1 || r > order_.size()) {
        throw std::out_of_range("rank " + std::to_string(r) + " outside [1," + std::to_string(order_.size()) + "]");
    }
    return order_[r - 1];
}

Rank RankModel::rank_of(NodePair pair) const {
    if (pair.u >= pair.v || pair.v >= n_) {
        throw InvalidPairError(pair, n_);
    }
    return rank_index_[triangular_index(n_, pair)];
}

std::vector<Rank> RankModel::rank_matrix() const {
    std::vector<Rank> m(static_cast<std::size_t>(n_) * n_, 0);
    for (std::size_t i = 0; i < order_.size(); ++i) {
        const NodePair& p = order_[i];
        m[static_cast<std::size_t>(p.u) * n_ + p.v] = i + 1;
        m[static_cast<std::size_t>(p.v) * n_ + p.u] = i + 1;
    }
    return m;
}

void RankModel::set_display_order(std::vector<NodeId> order) {
    if (order.size() != n_) {
        throw ValidationError("display order must list all " + std::to_string(n_) + " nodes");
    }
    std::vector<bool> seen(n_, false);
    for (NodeId v : order) {
        if (v >= n_ || seen[v]) {
            throw ValidationError("display order is not a permutation of the nodes");
        }
        seen[v] = true;
    }
    display_order_ = std::move(order);
}

}
