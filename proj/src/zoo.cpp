#include "rankgraph/zoo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "rankgraph/counter_rng.hpp"

namespace rankgraph {

Positions::Positions(std::uint32_t node_count, std::uint32_t dimension, std::vector<double> coords)
    : n_(node_count), d_(dimension), coords_(std::move(coords)) {
    if (d_ < 1) throw ValidationError("positions need at least one dimension");
    if (coords_.size() != static_cast<std::size_t>(n_) * d_) {
        throw ValidationError("positions hold " + std::to_string(coords_.size()) + " values, expected " +
                              std::to_string(static_cast<std::size_t>(n_) * d_));
    }
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (!std::isfinite(coords_[i])) {
            throw ValidationError("position of node " + std::to_string(i / d_) + " is not finite");
        }
    }
}

Positions Positions::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) throw ValidationError("positions are empty");
    const std::size_t d = rows.front().size();
    std::vector<double> coords;
    coords.reserve(rows.size() * d);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != d) {
            throw ValidationError("position row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                                  " columns, expected " + std::to_string(d));
        }
        coords.insert(coords.end(), rows[i].begin(), rows[i].end());
    }
    return Positions(static_cast<std::uint32_t>(rows.size()), static_cast<std::uint32_t>(d), std::move(coords));
}

Positions Positions::uniform(std::uint32_t node_count, std::uint32_t dimension, Seed seed) {
    const std::uint64_t key = counter_rng::stream_key(counter_rng::Position, seed);
    std::vector<double> coords(static_cast<std::size_t>(node_count) * dimension);
    for (std::uint32_t i = 0; i < node_count; ++i) {
        for (std::uint32_t j = 0; j < dimension; ++j) {
            coords[static_cast<std::size_t>(i) * dimension + j] = counter_rng::to_unit(counter_rng::hash(key, i, j));
        }
    }
    return Positions(node_count, dimension, std::move(coords));
}

double distance(std::span<const double> a, std::span<const double> b, DistanceMetric metric) {
    if (metric == DistanceMetric::Haversine) {
        if (a.size() != 2 || b.size() != 2) {
            throw ValidationError("haversine distance needs (longitude, latitude) positions");
        }
        constexpr double deg = std::numbers::pi / 180.0;
        const double dlat = (b[1] - a[1]) * deg;
        const double dlon = (b[0] - a[0]) * deg;
        const double h = std::sin(dlat / 2) * std::sin(dlat / 2) +
                         std::cos(a[1] * deg) * std::cos(b[1] * deg) * std::sin(dlon / 2) * std::sin(dlon / 2);
        return 2.0 * std::asin(std::min(1.0, std::sqrt(h)));
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double diff = a[i] - b[i];
        sum += diff * diff;
    }
    return std::sqrt(sum);
}

BlockAffiliation::BlockAffiliation(std::vector<std::vector<std::uint32_t>> memberships)
    : memberships_(std::move(memberships)) {
    for (std::size_t u = 0; u < memberships_.size(); ++u) {
        auto& m = memberships_[u];
        if (m.empty()) {
            throw ValidationError("node " + std::to_string(u) + " has no block affiliation");
        }
        std::sort(m.begin(), m.end());
        m.erase(std::unique(m.begin(), m.end()), m.end());
    }
}

BlockAffiliation BlockAffiliation::single(std::span<const std::uint32_t> block_of) {
    std::vector<std::vector<std::uint32_t>> m;
    m.reserve(block_of.size());
    for (std::uint32_t b : block_of) m.push_back({b});
    return BlockAffiliation(std::move(m));
}

BlockAffiliation BlockAffiliation::equal_consecutive(std::uint32_t n, std::uint32_t count) {
    if (count < 1 || count > n) {
        throw ValidationError("block count must lie in [1, n], got " + std::to_string(count));
    }
    std::vector<std::uint32_t> b(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        b[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(i) * count / n);
    }
    return single(b);
}

BlockAffiliation BlockAffiliation::overlapping_ring(std::uint32_t n, std::uint32_t count) {
    if (count < 2 || count > n) {
        throw ValidationError("overlapping blocks need a community count in [2, n], got " + std::to_string(count));
    }
    std::vector<std::vector<std::uint32_t>> m(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        const auto segment = static_cast<std::uint32_t>(static_cast<std::uint64_t>(i) * count / n);
        m[i] = {segment, (segment + count - 1) % count};
    }
    return BlockAffiliation(std::move(m));
}

bool BlockAffiliation::share_block(NodeId u, NodeId v) const {
    const auto& a = memberships_[u];
    const auto& b = memberships_[v];
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return true;
        if (*i < *j) ++i; else ++j;
    }
    return false;
}

namespace zoo {

namespace {

void require_nodes(std::uint32_t n) {
    if (n < 2) throw ValidationError("structures need at least 2 nodes, got " + std::to_string(n));
}

std::vector<NodeId> order_by_first_coordinate(const Positions& positions) {
    std::vector<NodeId> order(positions.node_count());
    std::iota(order.begin(), order.end(), NodeId{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](NodeId a, NodeId b) { return positions.row(a)[0] < positions.row(b)[0]; });
    return order;
}

std::vector<NodeId> order_by_first_block(const BlockAffiliation& affiliation) {
    std::vector<NodeId> order(affiliation.node_count());
    std::iota(order.begin(), order.end(), NodeId{0});
    std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        return affiliation.blocks_of(a).front() < affiliation.blocks_of(b).front();
    });
    return order;
}

}

RankModel erdos_renyi(std::uint32_t n, Seed tie_seed) {
    require_nodes(n);
    return RankModel::from_cost(n, [](NodeId, NodeId) { return 0.0; }, SortDirection::Ascending, tie_seed);
}

RankModel spatial(const Positions& positions, Seed tie_seed, DistanceMetric metric) {
    require_nodes(positions.node_count());
    auto model = RankModel::from_cost(
        positions.node_count(),
        [&](NodeId u, NodeId v) { return distance(positions.row(u), positions.row(v), metric); },
        SortDirection::Ascending, tie_seed);
    model.set_display_order(order_by_first_coordinate(positions));
    return model;
}

RankModel blocks(const BlockAffiliation& affiliation, Seed tie_seed) {
    require_nodes(affiliation.node_count());
    auto model = RankModel::from_cost(
        affiliation.node_count(),
        [&](NodeId u, NodeId v) { return affiliation.share_block(u, v) ? 0.0 : 1.0; },
        SortDirection::Ascending, tie_seed);
    model.set_display_order(order_by_first_block(affiliation));
    return model;
}

RankModel blocks_assortative(std::uint32_t n, std::uint32_t block_count, Seed tie_seed) {
    return blocks(BlockAffiliation::equal_consecutive(n, block_count), tie_seed);
}

RankModel blocks_overlapping(std::uint32_t n, std::uint32_t block_count, Seed tie_seed) {
    return blocks(BlockAffiliation::overlapping_ring(n, block_count), tie_seed);
}

std::uint32_t clique_size(std::uint32_t n, double m) {
    require_nodes(n);
    if (!(m >= 0.0) || m > static_cast<double>(pair_count(n))) {
        throw InfeasibleDensityError("edge count " + std::to_string(m) + " is outside [0, " +
                                     std::to_string(pair_count(n)) + "]");
    }
    const double mean_degree = 2.0 * m / n;
    const double size = std::ceil(mean_degree) + 1.0;
    return static_cast<std::uint32_t>(std::min<double>(size, n));
}

RankModel disconnected_cliques(std::uint32_t n, double m, Seed tie_seed) {
    const std::uint32_t size = clique_size(n, m);
    // floor(n/size) full cliques; leftover nodes share one extra block
    std::vector<std::uint32_t> block_of(n);
    for (std::uint32_t i = 0; i < n; ++i) block_of[i] = i / size;
    return blocks(BlockAffiliation::single(block_of), tie_seed);
}

RankModel nested(std::uint32_t n, Seed tie_seed) {
    require_nodes(n);
    // 1-based indices shift every cost by 2, which leaves the order unchanged
    return RankModel::from_cost(
        n, [](NodeId u, NodeId v) { return static_cast<double>(u) + static_cast<double>(v); },
        SortDirection::Ascending, tie_seed);
}

RankModel star(std::uint32_t n, Seed tie_seed) {
    require_nodes(n);
    return RankModel::from_cost(
        n, [n](NodeId u, NodeId v) { return static_cast<double>(u) * n + static_cast<double>(v); },
        SortDirection::Ascending, tie_seed);
}

RankModel core_periphery(const Positions& positions, Seed tie_seed, std::optional<std::vector<double>> center,
                         DistanceMetric metric) {
    require_nodes(positions.node_count());
    std::vector<double> c = center.value_or(std::vector<double>(positions.dimension(), 0.0));
    if (c.size() != positions.dimension()) {
        throw ValidationError("core center has " + std::to_string(c.size()) + " coordinates, positions have " +
                              std::to_string(positions.dimension()));
    }
    std::vector<double> to_center(positions.node_count());
    for (NodeId u = 0; u < positions.node_count(); ++u) {
        to_center[u] = distance(positions.row(u), c, metric);
    }
    auto model = RankModel::from_cost(
        positions.node_count(),
        [&](NodeId u, NodeId v) {
            return distance(positions.row(u), positions.row(v), metric) * to_center[u] * to_center[v];
        },
        SortDirection::Ascending, tie_seed);
    model.set_display_order(order_by_first_coordinate(positions));
    return model;
}

double perlin_cost(const PerlinNoise& noise, std::uint32_t n, NodeId u, NodeId v, unsigned octaves,
                   double base_frequency) {
    const double scale = base_frequency / n;
    return noise.fractal((u + 0.5) * scale, (v + 0.5) * scale, octaves);
}

RankModel perlin(std::uint32_t n, unsigned octaves, Seed noise_seed, Seed tie_seed, double base_frequency) {
    require_nodes(n);
    if (octaves < 1) throw ValidationError("perlin noise needs at least one octave");
    if (!(base_frequency > 0.0) || !std::isfinite(base_frequency)) {
        throw ValidationError("perlin base frequency must be positive");
    }
    const PerlinNoise noise(noise_seed);
    return RankModel::from_cost(
        n, [&](NodeId u, NodeId v) { return perlin_cost(noise, n, u, v, octaves, base_frequency); },
        SortDirection::Ascending, tie_seed);
}

RankModel fractal_leaves(std::uint32_t n, Seed tie_seed) {
    require_nodes(n);
    const auto tree = TreeEmbedding::on_leaves(n, 2);
    return RankModel::from_cost(
        n, [&](NodeId u, NodeId v) { return static_cast<double>(tree.distance(u, v)); },
        SortDirection::Ascending, tie_seed);
}

RankModel fractal_root(std::uint32_t n, Seed tie_seed) {
    require_nodes(n);
    const auto tree = TreeEmbedding::on_all_positions(n, 2);
    return RankModel::from_cost(
        n, [&](NodeId u, NodeId v) { return static_cast<double>(tree.distance(u, v)); },
        SortDirection::Ascending, tie_seed);
}

double fractal_hierarchy_cost(const TreeEmbedding& tree, NodeId u, NodeId v) {
    const int hu = static_cast<int>(tree.height(u));
    const int hv = static_cast<int>(tree.height(v));
    const int h_tree = static_cast<int>(tree.tree_height());
    if (tree.is_ancestor(u, v) || tree.is_ancestor(v, u)) {
        return std::min(hu, hv) + h_tree - std::max(hu, hv);
    }
    const int d = static_cast<int>(tree.distance(u, v));
    if (hu == hv) {
        return (d - 2) + hu;
    }
    return d + h_tree;
}

RankModel fractal_hierarchy(std::uint32_t n, Seed tie_seed) {
    require_nodes(n);
    const auto tree = TreeEmbedding::on_all_positions(n, 3);
    return RankModel::from_cost(
        n, [&](NodeId u, NodeId v) { return fractal_hierarchy_cost(tree, u, v); },
        SortDirection::Ascending, tie_seed);
}

double watts_strogatz_cost(std::uint32_t n, std::uint32_t k, WsVariant variant, NodeId u, NodeId v) {
    if (u > v) std::swap(u, v);
    const std::uint32_t gap = v - u;
    const std::uint32_t half = k / 2;
    if (variant == WsVariant::Literal) {
        return gap % (n - half) < half ? 0.0 : 1.0;
    }
    return std::min(gap, n - gap) <= half ? 0.0 : 1.0;
}

RankModel watts_strogatz(std::uint32_t n, std::uint32_t k, Seed tie_seed, WsVariant variant) {
    require_nodes(n);
    if (k % 2 != 0 || k < 2 || k >= n) {
        throw ValidationError("Watts-Strogatz mean degree k must be even with 2 <= k < n, got k=" +
                              std::to_string(k));
    }
    return RankModel::from_cost(
        n, [=](NodeId u, NodeId v) { return watts_strogatz_cost(n, k, variant, u, v); },
        SortDirection::Ascending, tie_seed);
}

RankModel labeled_spatial(const Positions& positions, std::span<const std::uint32_t> labels, double penalty,
                          Seed tie_seed, DistanceMetric metric) {
    require_nodes(positions.node_count());
    if (labels.size() != positions.node_count()) {
        throw ValidationError("got " + std::to_string(labels.size()) + " labels for " +
                              std::to_string(positions.node_count()) + " positioned nodes");
    }
    if (!std::isfinite(penalty)) throw ValidationError("label penalty must be finite");
    auto model = RankModel::from_cost(
        positions.node_count(),
        [&](NodeId u, NodeId v) {
            const double d = distance(positions.row(u), positions.row(v), metric);
            return labels[u] == labels[v] ? d : d + penalty;
        },
        SortDirection::Ascending, tie_seed);
    model.set_display_order(order_by_first_coordinate(positions));
    return model;
}

const std::vector<ZooEntry>& catalog() {
    static const std::vector<ZooEntry> entries = {
        {"er", "all pairs tied; uniform random order (Erdos-Renyi baseline)"},
        {"spatial", "distance between latent positions (uniform in [0,1]^d or --positions)"},
        {"blocks_assortative", "same block first (--blocks equal consecutive blocks or --affiliations)"},
        {"blocks_overlapping", "ring of communities, each node in two, sharing half with each neighbour"},
        {"disconnected_cliques", "assortative blocks sized so that the m edges fill disjoint cliques"},
        {"nested", "cost u + v"},
        {"star", "cost u * n + v; hubs are the low ids"},
        {"core_periphery", "product of pair distance and both distances to the center"},
        {"perlin", "fractal Perlin noise image over the adjacency matrix (--octaves)"},
        {"fractal_leaves", "distance between leaves of a complete binary tree"},
        {"fractal_root", "distance between nodes of a heap-ordered binary tree"},
        {"fractal_hierarchy", "ternary tree; root-to-leaf and sibling-leaf pairs first"},
        {"watts_strogatz", "ring lattice with k/2 neighbours per side (--k, --ws-variant)"},
        {"attributes", "distance + penalty when labels differ (--positions, --labels, --penalty)"},
        {"custom", "externally computed costs (--cost-csv with rows u,v,cost)"},
    };
    return entries;
}

bool is_known(const std::string& name) {
    const auto& entries = catalog();
    return std::any_of(entries.begin(), entries.end(), [&](const ZooEntry& e) { return e.name == name; });
}

RankModel build(const ZooSpec& spec, std::uint32_t n) {
    require_nodes(n);
    const ZooParams& p = spec.params;
    const std::string& name = spec.name;

    auto positions = [&]() -> Positions {
        if (p.positions) {
            if (p.positions->node_count() != n) {
                throw ValidationError("positions list " + std::to_string(p.positions->node_count()) +
                                      " nodes but n=" + std::to_string(n));
            }
            return *p.positions;
        }
        if (p.dimension < 1) throw ValidationError("dimension must be at least 1");
        return Positions::uniform(n, p.dimension, p.structure_seed);
    };
    auto block_count = [&]() {
        return p.block_count.value_or(static_cast<std::uint32_t>(std::ceil(std::sqrt(static_cast<double>(n)))));
    };
    auto check_affiliation = [&](const BlockAffiliation& a) {
        if (a.node_count() != n) {
            throw ValidationError("affiliations cover " + std::to_string(a.node_count()) + " nodes but n=" +
                                  std::to_string(n));
        }
    };

    if (name == "er") return erdos_renyi(n, p.tie_seed);
    if (name == "spatial") return spatial(positions(), p.tie_seed, p.metric);
    if (name == "blocks_assortative" || name == "blocks_overlapping") {
        if (p.affiliation) {
            check_affiliation(*p.affiliation);
            return blocks(*p.affiliation, p.tie_seed);
        }
        return name == "blocks_assortative" ? blocks_assortative(n, block_count(), p.tie_seed)
                                            : blocks_overlapping(n, block_count(), p.tie_seed);
    }
    if (name == "disconnected_cliques") return disconnected_cliques(n, p.m, p.tie_seed);
    if (name == "nested") return nested(n, p.tie_seed);
    if (name == "star") return star(n, p.tie_seed);
    if (name == "core_periphery") return core_periphery(positions(), p.tie_seed, p.center, p.metric);
    if (name == "perlin") return perlin(n, p.octaves, p.structure_seed, p.tie_seed, p.perlin_frequency);
    if (name == "fractal_leaves") return fractal_leaves(n, p.tie_seed);
    if (name == "fractal_root") return fractal_root(n, p.tie_seed);
    if (name == "fractal_hierarchy") return fractal_hierarchy(n, p.tie_seed);
    if (name == "watts_strogatz") return watts_strogatz(n, p.k, p.tie_seed, p.ws_variant);
    if (name == "attributes") {
        if (!p.positions || p.labels.empty()) {
            throw ValidationError("structure 'attributes' needs positions and labels");
        }
        if (p.positions->node_count() != n) {
            throw ValidationError("positions list " + std::to_string(p.positions->node_count()) +
                                  " nodes but n=" + std::to_string(n));
        }
        return labeled_spatial(*p.positions, p.labels, p.penalty, p.tie_seed, p.metric);
    }
    if (name == "custom") {
        if (!p.custom_cost) throw ValidationError("structure 'custom' needs a cost table");
        return RankModel::from_cost(n, *p.custom_cost, p.custom_direction, p.tie_seed);
    }

    std::string known;
    for (const auto& e : catalog()) {
        known += (known.empty() ? "" : ", ") + e.name;
    }
    throw ValidationError("unknown structure '" + name + "'; available: " + known);
}

}
}
