#include "rankgraph/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace rankgraph::metrics {

std::vector<double> local_clustering(const Graph& g) {
    const std::uint32_t n = g.node_count();
    std::vector<double> cc(n, 0.0);
    std::vector<char> mark(n, 0);
    for (NodeId u = 0; u < n; ++u) {
        auto nb = g.neighbors(u);
        const std::size_t k = nb.size();
        if (k < 2) continue;
        for (NodeId w : nb) mark[w] = 1;
        std::uint64_t links = 0;
        for (NodeId w : nb) {
            for (NodeId x : g.neighbors(w)) {
                links += mark[x];
            }
        }
        for (NodeId w : nb) mark[w] = 0;
        // each link among neighbours was seen from both ends
        cc[u] = static_cast<double>(links) / (static_cast<double>(k) * (k - 1));
    }
    return cc;
}

double clustering_coefficient(const Graph& g) {
    if (g.node_count() == 0) return 0.0;
    const auto cc = local_clustering(g);
    return std::accumulate(cc.begin(), cc.end(), 0.0) / cc.size();
}

std::vector<NodeId> largest_component(const Graph& g) {
    const std::uint32_t n = g.node_count();
    std::vector<char> seen(n, 0);
    std::vector<NodeId> best;
    std::vector<NodeId> current;
    for (NodeId s = 0; s < n; ++s) {
        if (seen[s]) continue;
        current.clear();
        current.push_back(s);
        seen[s] = 1;
        for (std::size_t head = 0; head < current.size(); ++head) {
            for (NodeId w : g.neighbors(current[head])) {
                if (!seen[w]) {
                    seen[w] = 1;
                    current.push_back(w);
                }
            }
        }
        // strict: earlier components (smaller minimum id) win ties
        if (current.size() > best.size()) best = current;
    }
    std::sort(best.begin(), best.end());
    return best;
}

double mean_distance(const Graph& g, std::span<const NodeId> component) {
    const std::size_t size = component.size();
    if (size < 2) return 0.0;
    constexpr std::uint32_t unseen = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> dist(g.node_count(), unseen);
    std::vector<NodeId> queue;
    queue.reserve(size);
    std::uint64_t total = 0;
    std::uint64_t reached = 0;
    for (NodeId s : component) {
        queue.clear();
        queue.push_back(s);
        dist[s] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const NodeId x = queue[head];
            for (NodeId w : g.neighbors(x)) {
                if (dist[w] == unseen) {
                    dist[w] = dist[x] + 1;
                    total += dist[w];
                    queue.push_back(w);
                }
            }
        }
        reached += queue.size() - 1;
        for (NodeId x : queue) dist[x] = unseen;
    }
    if (reached != size * (size - 1)) {
        throw ValidationError("mean_distance: node set is not a connected component");
    }
    // every unordered pair was counted from both ends
    return static_cast<double>(total) / static_cast<double>(reached);
}

double delta_hat_from(double gcc_fraction, double mean_distance) {
    if (gcc_fraction <= 0.9) return 0.0;
    return 1.0 / (1.0 + std::max(0.0, mean_distance - 2.0));
}

PathSummary path_summary(const Graph& g) {
    PathSummary s;
    if (g.node_count() == 0) return s;
    const auto gcc = largest_component(g);
    s.gcc_fraction = static_cast<double>(gcc.size()) / g.node_count();
    s.mean_distance = mean_distance(g, gcc);
    s.delta_hat = delta_hat_from(s.gcc_fraction, s.mean_distance);
    return s;
}

double delta_hat(const Graph& g) {
    return path_summary(g).delta_hat;
}

namespace {

std::vector<double> average_ranks(std::span<const double> x) {
    std::vector<std::size_t> idx(x.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    std::vector<double> rank(x.size());
    for (std::size_t i = 0; i < idx.size();) {
        std::size_t j = i;
        while (j + 1 < idx.size() && x[idx[j + 1]] == x[idx[i]]) ++j;
        const double r = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t t = i; t <= j; ++t) rank[idx[t]] = r;
        i = j + 1;
    }
    return rank;
}

}

double spearman(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw ValidationError("spearman: inputs differ in length");
    const std::size_t n = x.size();
    if (n < 2) return std::numeric_limits<double>::quiet_NaN();
    const auto rx = average_ranks(x);
    const auto ry = average_ranks(y);
    const double mean = (n + 1) / 2.0;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = rx[i] - mean;
        const double b = ry[i] - mean;
        sxy += a * b;
        sxx += a * a;
        syy += b * b;
    }
    if (sxx == 0.0 || syy == 0.0) return std::numeric_limits<double>::quiet_NaN();
    return sxy / std::sqrt(sxx * syy);
}

}
