#ifndef rankgraph_tree_embedding_hpp
#define rankgraph_tree_embedding_hpp

#include <cstdint>
#include <vector>

#include "rankgraph/types.hpp"

namespace rankgraph {

/*
 * Nodes placed on a complete k-ary tree stored in heap order: position p has
 * parent (p-1)/k and children k*p+1 .. k*p+k. Heights count from the bottom,
 * h = tree_height() - depth, so the root has the full height and the deepest
 * occupied level has 0.
 */
class TreeEmbedding {
public:
    enum class Placement { AllPositions, LeavesOnly };

    /// Nodes 0..n-1 on heap positions 0..n-1 (a complete tree of size n).
    static TreeEmbedding on_all_positions(std::uint32_t n, std::uint32_t arity);

    /// Smallest full tree with at least n leaves; nodes on the leftmost n leaves.
    static TreeEmbedding on_leaves(std::uint32_t n, std::uint32_t arity);

    std::uint32_t node_count() const { return static_cast<std::uint32_t>(position_.size()); }
    std::uint32_t arity() const { return arity_; }
    Placement placement() const { return placement_; }

    std::uint64_t position(NodeId u) const { return position_[u]; }
    std::uint32_t depth(NodeId u) const { return depth_of(position_[u]); }
    std::uint32_t height(NodeId u) const { return tree_height_ - depth(u); }
    std::uint32_t tree_height() const { return tree_height_; }

    /// Number of tree edges between the positions of u and v.
    std::uint32_t distance(NodeId u, NodeId v) const;
    /// True if u's position is a proper ancestor of v's.
    bool is_ancestor(NodeId u, NodeId v) const;

private:
    TreeEmbedding(std::uint32_t arity, Placement placement, std::vector<std::uint64_t> positions);

    std::uint32_t depth_of(std::uint64_t pos) const;
    std::uint64_t parent(std::uint64_t pos) const { return (pos - 1) / arity_; }

    std::uint32_t arity_;
    Placement placement_;
    std::uint32_t tree_height_ = 0;
    std::vector<std::uint64_t> position_;
    // first heap position of each level
    std::vector<std::uint64_t> level_start_;
};

}

#endif /* rankgraph_tree_embedding_hpp */
