#ifndef rankgraph_graph_hpp
#define rankgraph_graph_hpp

#include <cstdint>
#include <span>
#include <vector>

#include "rankgraph/types.hpp"

namespace rankgraph {

/*
 * Simple undirected graph. Edges are kept sorted and unique; adjacency lists
 * are sorted by neighbor id.
 */
class Graph {
public:
    Graph() = default;
    /// Pairs may be given in any order and orientation; self-loops and
    /// duplicates are rejected.
    Graph(std::uint32_t node_count, std::vector<NodePair> edges);

    std::uint32_t node_count() const { return n_; }
    std::uint64_t edge_count() const { return edges_.size(); }
    std::span<const NodePair> edges() const { return edges_; }
    std::span<const NodeId> neighbors(NodeId u) const { return adjacency_[u]; }
    std::size_t degree(NodeId u) const { return adjacency_[u].size(); }
    bool has_edge(NodeId u, NodeId v) const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

private:
    std::uint32_t n_ = 0;
    std::vector<NodePair> edges_;
    std::vector<std::vector<NodeId>> adjacency_;
};

}

#endif /* rankgraph_graph_hpp */
