#ifndef rankgraph_metrics_hpp
#define rankgraph_metrics_hpp

#include <span>
#include <vector>

#include "rankgraph/graph.hpp"

namespace rankgraph::metrics {

/// Triangles through u over possible neighbour pairs; 0 when degree < 2.
std::vector<double> local_clustering(const Graph& g);

/// Mean of local_clustering over all nodes.
double clustering_coefficient(const Graph& g);

/*
 * Nodes of the largest connected component, sorted. Among equally large
 * components the one holding the smallest node id wins.
 */
std::vector<NodeId> largest_component(const Graph& g);

/// Mean BFS distance over unordered pairs of `component`, which must be
/// connected. 0 for fewer than 2 nodes.
double mean_distance(const Graph& g, std::span<const NodeId> component);

struct PathSummary {
    double gcc_fraction = 0.0;
    double mean_distance = 0.0;
    double delta_hat = 0.0;
};

/*
 * Short-path score: 0 if the largest component holds at most 90% of the
 * nodes, else 1 / (1 + max(0, d - 2)) with d the mean distance inside it.
 */
double delta_hat_from(double gcc_fraction, double mean_distance);
PathSummary path_summary(const Graph& g);
double delta_hat(const Graph& g);

/// Spearman rank correlation with average ranks for ties; NaN if either
/// input is constant.
double spearman(std::span<const double> x, std::span<const double> y);

}

#endif /* rankgraph_metrics_hpp */
