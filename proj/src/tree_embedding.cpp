#include "rankgraph/tree_embedding.hpp"

#include <algorithm>
#include <string>

namespace rankgraph {

TreeEmbedding::TreeEmbedding(std::uint32_t arity, Placement placement, std::vector<std::uint64_t> positions)
    : arity_(arity), placement_(placement), position_(std::move(positions)) {
    const std::uint64_t last = position_.empty() ? 0 : *std::max_element(position_.begin(), position_.end());
    std::uint64_t start = 0;
    std::uint64_t width = 1;
    while (start <= last) {
        level_start_.push_back(start);
        start += width;
        width *= arity_;
    }
    level_start_.push_back(start);
    tree_height_ = depth_of(last);
}

TreeEmbedding TreeEmbedding::on_all_positions(std::uint32_t n, std::uint32_t arity) {
    if (arity < 2) throw ValidationError("tree arity must be at least 2");
    if (n < 1) throw ValidationError("tree embedding needs at least one node");
    std::vector<std::uint64_t> pos(n);
    for (std::uint32_t i = 0; i < n; ++i) pos[i] = i;
    return TreeEmbedding(arity, Placement::AllPositions, std::move(pos));
}

TreeEmbedding TreeEmbedding::on_leaves(std::uint32_t n, std::uint32_t arity) {
    if (arity < 2) throw ValidationError("tree arity must be at least 2");
    if (n < 1) throw ValidationError("tree embedding needs at least one node");
    std::uint64_t first_leaf = 0;
    std::uint64_t leaves = 1;
    while (leaves < n) {
        first_leaf += leaves;
        leaves *= arity;
    }
    std::vector<std::uint64_t> pos(n);
    for (std::uint32_t i = 0; i < n; ++i) pos[i] = first_leaf + i;
    return TreeEmbedding(arity, Placement::LeavesOnly, std::move(pos));
}

std::uint32_t TreeEmbedding::depth_of(std::uint64_t pos) const {
    auto it = std::upper_bound(level_start_.begin(), level_start_.end(), pos);
    return static_cast<std::uint32_t>(it - level_start_.begin() - 1);
}

std::uint32_t TreeEmbedding::distance(NodeId u, NodeId v) const {
    std::uint64_t a = position_[u];
    std::uint64_t b = position_[v];
    std::uint32_t da = depth_of(a);
    std::uint32_t db = depth_of(b);
    std::uint32_t steps = 0;
    while (da > db) { a = parent(a); --da; ++steps; }
    while (db > da) { b = parent(b); --db; ++steps; }
    while (a != b) {
        a = parent(a);
        b = parent(b);
        steps += 2;
    }
    return steps;
}

bool TreeEmbedding::is_ancestor(NodeId u, NodeId v) const {
    const std::uint64_t a = position_[u];
    std::uint64_t b = position_[v];
    std::uint32_t da = depth_of(a);
    std::uint32_t db = depth_of(b);
    if (da >= db) return false;
    while (db > da) { b = parent(b); --db; }
    return a == b;
}

}
