#ifndef rankgraph_sampler_hpp
#define rankgraph_sampler_hpp

#include <cstdint>
#include <vector>

#include "rankgraph/graph.hpp"
#include "rankgraph/probability_profile.hpp"
#include "rankgraph/rank_model.hpp"

namespace rankgraph {

/*
 * Random graph model: a rank order plus a probability per rank. The pair at
 * rank r becomes an edge independently with probability P(r). The draw for
 * pair (u,v) depends only on (sample_seed, u, v).
 *
 * Holds references; the model and profile must outlive the sampler.
 */
class GraphSampler {
public:
    GraphSampler(const RankModel& model, const ProbabilityProfile& profile);

    /// `threads` > 1 splits the rank range; the result is identical for any value.
    Graph generate(Seed sample_seed, unsigned threads = 1) const;

    /// `count` graphs with per-run seeds derived from `seed_stream`.
    std::vector<Graph> generate_batch(std::size_t count, Seed seed_stream, unsigned threads = 1) const;

    /// Seed used for run `index` of a batch.
    static Seed run_seed(Seed seed_stream, std::uint64_t index);

    const RankModel& model() const { return model_; }
    const ProbabilityProfile& profile() const { return profile_; }

private:
    const RankModel& model_;
    const ProbabilityProfile& profile_;
};

}

#endif /* rankgraph_sampler_hpp */
