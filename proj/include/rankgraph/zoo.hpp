#ifndef rankgraph_zoo_hpp
#define rankgraph_zoo_hpp

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rankgraph/perlin.hpp"
#include "rankgraph/rank_model.hpp"
#include "rankgraph/tree_embedding.hpp"

namespace rankgraph {

/*
 * Latent node coordinates, one row of `dimension` values per node.
 */
class Positions {
public:
    Positions(std::uint32_t node_count, std::uint32_t dimension, std::vector<double> coords);
    static Positions from_rows(const std::vector<std::vector<double>>& rows);
    /// Independent uniform coordinates in [0,1)^d.
    static Positions uniform(std::uint32_t node_count, std::uint32_t dimension, Seed seed);

    std::uint32_t node_count() const { return n_; }
    std::uint32_t dimension() const { return d_; }
    std::span<const double> row(NodeId u) const { return {coords_.data() + static_cast<std::size_t>(u) * d_, d_}; }

private:
    std::uint32_t n_;
    std::uint32_t d_;
    std::vector<double> coords_;
};

enum class DistanceMetric {
    Euclidean,
    // rows are (longitude, latitude) in degrees; distance is the central angle in radians
    Haversine,
};

double distance(std::span<const double> a, std::span<const double> b, DistanceMetric metric);

/*
 * Block memberships per node. Single-membership vectors are the special case
 * of one block per node.
 */
class BlockAffiliation {
public:
    explicit BlockAffiliation(std::vector<std::vector<std::uint32_t>> memberships);
    static BlockAffiliation single(std::span<const std::uint32_t> block_of);
    /// Node i in block floor(i * count / n).
    static BlockAffiliation equal_consecutive(std::uint32_t n, std::uint32_t count);
    /*
     * Ring of `count` communities: the node axis is cut into `count` equal
     * segments and community c holds segments c and c+1 (mod count). Every
     * node is in exactly two communities and each community shares half its
     * members with each neighbouring community.
     */
    static BlockAffiliation overlapping_ring(std::uint32_t n, std::uint32_t count);

    std::uint32_t node_count() const { return static_cast<std::uint32_t>(memberships_.size()); }
    std::span<const std::uint32_t> blocks_of(NodeId u) const { return memberships_[u]; }
    bool share_block(NodeId u, NodeId v) const;

private:
    // sorted, unique
    std::vector<std::vector<std::uint32_t>> memberships_;
};

enum class WsVariant {
    // min(v-u, n-(v-u)) <= k/2: each node linked to k/2 ring neighbours per side
    Ring,
    // (v-u) mod (n-k/2) < k/2, exactly as the formula is printed
    Literal,
};

namespace zoo {

RankModel erdos_renyi(std::uint32_t n, Seed tie_seed);

/// Ascending by distance; display order by first coordinate.
RankModel spatial(const Positions& positions, Seed tie_seed, DistanceMetric metric = DistanceMetric::Euclidean);

/// Pairs sharing at least one block first.
RankModel blocks(const BlockAffiliation& affiliation, Seed tie_seed);
RankModel blocks_assortative(std::uint32_t n, std::uint32_t block_count, Seed tie_seed);
RankModel blocks_overlapping(std::uint32_t n, std::uint32_t block_count, Seed tie_seed);

/// ceil(2m/n) + 1: a clique of that size gives its members the mean degree.
std::uint32_t clique_size(std::uint32_t n, double m);
RankModel disconnected_cliques(std::uint32_t n, double m, Seed tie_seed);

/// cost u + v
RankModel nested(std::uint32_t n, Seed tie_seed);
/// cost u * n + v
RankModel star(std::uint32_t n, Seed tie_seed);

/*
 * Soft core: d(W_u,W_v) * d(W_u,c) * d(W_v,c), ascending. The center c
 * defaults to the zero vector.
 */
RankModel core_periphery(const Positions& positions, Seed tie_seed,
                         std::optional<std::vector<double>> center = std::nullopt,
                         DistanceMetric metric = DistanceMetric::Euclidean);

/*
 * Cost at pixel (u,v) of an n x n fractal Perlin image. The base layer spans
 * `base_frequency` noise periods across the image.
 */
double perlin_cost(const PerlinNoise& noise, std::uint32_t n, NodeId u, NodeId v, unsigned octaves,
                   double base_frequency);
RankModel perlin(std::uint32_t n, unsigned octaves, Seed noise_seed, Seed tie_seed, double base_frequency = 4.0);

/// Leaves of the smallest complete binary tree with >= n leaves; cost is tree distance.
RankModel fractal_leaves(std::uint32_t n, Seed tie_seed);
/// Heap-ordered complete binary tree of size n; cost is tree distance.
RankModel fractal_root(std::uint32_t n, Seed tie_seed);

/*
 * Ternary heap-ordered tree. Ancestor pairs cost
 *   min(h_u, h_v) + h(T) - max(h_u, h_v)
 * and other pairs cost (d - 2) + h_u at equal heights, d + h(T) otherwise,
 * with d the tree distance.
 */
double fractal_hierarchy_cost(const TreeEmbedding& tree, NodeId u, NodeId v);
RankModel fractal_hierarchy(std::uint32_t n, Seed tie_seed);

double watts_strogatz_cost(std::uint32_t n, std::uint32_t k, WsVariant variant, NodeId u, NodeId v);
RankModel watts_strogatz(std::uint32_t n, std::uint32_t k, Seed tie_seed, WsVariant variant = WsVariant::Ring);

/*
 * Attribute-driven spatial rank: distance + penalty when the labels differ
 * (e.g. airports ranked by distance, same-country pairs favoured).
 */
RankModel labeled_spatial(const Positions& positions, std::span<const std::uint32_t> labels, double penalty,
                          Seed tie_seed, DistanceMetric metric = DistanceMetric::Euclidean);

/*
 * Named structure plus its parameters.
 */
struct ZooParams {
    std::uint32_t dimension = 1;
    std::optional<Positions> positions;
    std::optional<BlockAffiliation> affiliation;
    std::optional<std::uint32_t> block_count;
    unsigned octaves = 2;
    double perlin_frequency = 4.0;
    std::uint32_t k = 10;
    WsVariant ws_variant = WsVariant::Ring;
    double m = 0.0;
    DistanceMetric metric = DistanceMetric::Euclidean;
    std::optional<std::vector<double>> center;
    std::vector<std::uint32_t> labels;
    double penalty = 1.0;
    std::optional<CostFunction> custom_cost;
    SortDirection custom_direction = SortDirection::Ascending;
    // randomness of the structure itself (positions, noise field)
    Seed structure_seed = 0;
    Seed tie_seed = 0;
};

struct ZooSpec {
    std::string name;
    ZooParams params;
};

struct ZooEntry {
    std::string name;
    std::string description;
};

/// Structures known to build(), in display order.
const std::vector<ZooEntry>& catalog();
bool is_known(const std::string& name);

/// Throws ValidationError for unknown names or inconsistent parameters.
RankModel build(const ZooSpec& spec, std::uint32_t n);

}
}

#endif /* rankgraph_zoo_hpp */
