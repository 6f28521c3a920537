#ifndef rankgraph_rank_model_hpp
#define rankgraph_rank_model_hpp

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "rankgraph/types.hpp"

namespace rankgraph {

/// Cost of connecting u and v (u < v). Must be deterministic and finite.
using CostFunction = std::function<double(NodeId u, NodeId v)>;

enum class SortDirection { Ascending, Descending };

/*
 * A total order over all n(n-1)/2 unordered node pairs. Rank 1 is the pair
 * most likely to be connected. Immutable once built.
 */
class RankModel {
public:
    /*
     * Sorts all pairs by cost. Equal costs are ordered by a per-pair 64-bit
     * key drawn from (tie_seed, u, v), so unequal costs are never reordered
     * and the result is reproducible.
     */
    static RankModel from_cost(std::uint32_t n, const CostFunction& cost,
                               SortDirection direction = SortDirection::Ascending,
                               Seed tie_seed = 0);

    /// Takes an explicit order; must list every pair exactly once.
    static RankModel from_order(std::uint32_t n, std::vector<NodePair> order, Seed tie_seed = 0);

    std::uint32_t node_count() const { return n_; }
    std::uint64_t pair_count() const { return order_.size(); }
    Seed tie_seed() const { return tie_seed_; }

    /// Pair at 1-based rank r.
    NodePair at(Rank r) const;
    Rank rank_of(NodePair pair) const;
    std::span<const NodePair> order() const { return order_; }

    /*
     * n x n symmetric matrix of ranks in row-major order; the diagonal holds 0.
     */
    std::vector<Rank> rank_matrix() const;

    // Node order used when rendering matrices (e.g. sorted by latent
    // position). Identity unless a structure sets it.
    std::span<const NodeId> display_order() const { return display_order_; }
    void set_display_order(std::vector<NodeId> order);

private:
    RankModel(std::uint32_t n, std::vector<NodePair> order, Seed tie_seed);

    std::uint32_t n_ = 0;
    Seed tie_seed_ = 0;
    std::vector<NodePair> order_;
    // triangular_index(pair) -> 1-based rank
    std::vector<Rank> rank_index_;
    std::vector<NodeId> display_order_;
};

}

#endif /* rankgraph_rank_model_hpp */
