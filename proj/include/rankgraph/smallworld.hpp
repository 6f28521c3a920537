#ifndef rankgraph_smallworld_hpp
#define rankgraph_smallworld_hpp

#include <string>
#include <vector>

#include "rankgraph/graph.hpp"
#include "rankgraph/metrics.hpp"
#include "rankgraph/rank_model.hpp"
#include "rankgraph/zoo.hpp"

namespace rankgraph {

/// Metrics of one epsilon, averaged over replicate graphs.
struct MetricRow {
    double epsilon = 0.0;
    double cc_mean = 0.0;
    double cc_std = 0.0;
    double delta_hat_mean = 0.0;
    double delta_hat_std = 0.0;
    double gcc_fraction_mean = 0.0;
    double mean_distance_mean = 0.0;
    std::size_t runs = 0;
};

struct ProfileResult {
    std::string structure;
    std::uint32_t n = 0;
    double m = 0.0;
    // ordered by strictly increasing epsilon
    std::vector<MetricRow> rows;
};

/// {0, 1e-3, 10^-2.5, 1e-2, 10^-1.5, 1e-1, 10^-0.5, 1}
std::vector<double> default_epsilon_grid();

struct ProfileOptions {
    std::vector<double> epsilons = default_epsilon_grid();
    std::size_t runs = 5;
    Seed sample_seed = 0;
    unsigned threads = 1;
};

struct GraphMetrics {
    double cc = 0.0;
    metrics::PathSummary paths;
};

GraphMetrics measure(const Graph& g);

/*
 * For each epsilon: build the probability profile, sample `runs` graphs and
 * average clustering and the short-path score. Run seeds are derived from
 * (sample_seed, epsilon index, run), so the result does not depend on threads.
 */
ProfileResult smallworld_profile(const RankModel& model, const std::string& structure, double m,
                                 const ProfileOptions& options);

ProfileResult smallworld_profile(const zoo::ZooSpec& spec, std::uint32_t n, double m, const ProfileOptions& options);

}

#endif /* rankgraph_smallworld_hpp */
