#include "rankgraph/graph.hpp"

#include <algorithm>

namespace rankgraph {

Graph::Graph(std::uint32_t node_count, std::vector<NodePair> edges)
    : n_(node_count), edges_(std::move(edges)), adjacency_(node_count) {
    for (NodePair& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u == e.v || e.v >= n_) {
            throw InvalidPairError(e, n_);
        }
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
        throw ValidationError("duplicate edge " + dup->str());
    }
    for (const NodePair& e : edges_) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& adj : adjacency_) {
        std::sort(adj.begin(), adj.end());
    }
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    if (u >= n_ || v >= n_) return false;
    const auto& adj = adjacency_[u];
    return std::binary_search(adj.begin(), adj.end(), v);
}

}
