#include "rankgraph/smallworld.hpp"

#include <cmath>

#include "rankgraph/counter_rng.hpp"
#include "rankgraph/probability_profile.hpp"
#include "rankgraph/sampler.hpp"
#include "parallel.hpp"

namespace rankgraph {

namespace {

struct MeanStd {
    double mean = 0.0;
    double std = 0.0;
};

MeanStd summarize(const std::vector<double>& xs) {
    MeanStd s;
    for (double x : xs) s.mean += x;
    s.mean /= xs.size();
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs) ss += (x - s.mean) * (x - s.mean);
        s.std = std::sqrt(ss / (xs.size() - 1));
    }
    return s;
}

}

std::vector<double> default_epsilon_grid() {
    return {0.0, 1e-3, std::pow(10.0, -2.5), 1e-2, std::pow(10.0, -1.5), 1e-1, std::pow(10.0, -0.5), 1.0};
}

GraphMetrics measure(const Graph& g) {
    return GraphMetrics{metrics::clustering_coefficient(g), metrics::path_summary(g)};
}

ProfileResult smallworld_profile(const RankModel& model, const std::string& structure, double m,
                                 const ProfileOptions& options) {
    if (options.runs < 1) throw ValidationError("profiles need at least one run per epsilon");
    if (options.epsilons.empty()) throw ValidationError("epsilon grid is empty");
    for (std::size_t i = 0; i < options.epsilons.size(); ++i) {
        const double e = options.epsilons[i];
        if (!(e >= 0.0 && e <= 1.0)) {
            throw ValidationError("epsilon " + std::to_string(e) + " outside [0,1]");
        }
        if (i > 0 && !(e > options.epsilons[i - 1])) {
            throw ValidationError("epsilon grid must be strictly increasing");
        }
    }

    ProfileResult result;
    result.structure = structure;
    result.n = model.node_count();
    result.m = m;

    const std::uint64_t key = counter_rng::stream_key(counter_rng::RunSeed, options.sample_seed);
    for (std::size_t ei = 0; ei < options.epsilons.size(); ++ei) {
        const double eps = options.epsilons[ei];
        const auto profile = ProbabilityProfile::build(model.pair_count(), m, eps);
        const GraphSampler sampler(model, profile);
        const Seed stream = counter_rng::hash(key, ei);

        std::vector<GraphMetrics> per_run(options.runs);
        detail::parallel_for(options.runs, options.threads, [&](std::size_t run) {
            per_run[run] = measure(sampler.generate(GraphSampler::run_seed(stream, run)));
        });

        std::vector<double> cc, dh;
        MetricRow row;
        row.epsilon = eps;
        row.runs = options.runs;
        for (const auto& r : per_run) {
            cc.push_back(r.cc);
            dh.push_back(r.paths.delta_hat);
            row.gcc_fraction_mean += r.paths.gcc_fraction / options.runs;
            row.mean_distance_mean += r.paths.mean_distance / options.runs;
        }
        const auto cs = summarize(cc);
        const auto ds = summarize(dh);
        row.cc_mean = cs.mean;
        row.cc_std = cs.std;
        row.delta_hat_mean = ds.mean;
        row.delta_hat_std = ds.std;
        result.rows.push_back(row);
    }
    return result;
}

ProfileResult smallworld_profile(const zoo::ZooSpec& spec, std::uint32_t n, double m, const ProfileOptions& options) {
    return smallworld_profile(zoo::build(spec, n), spec.name, m, options);
}

}
