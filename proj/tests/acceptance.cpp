// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "oracles.hpp"
#include "rankgraph/io.hpp"
#include "rankgraph/metrics.hpp"
#include "rankgraph/sampler.hpp"
#include "rankgraph/smallworld.hpp"
#include "rankgraph/zoo.hpp"

using namespace rankgraph;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

struct RandomProfile {
    std::uint64_t L;
    double m;
    double eps;
};

std::vector<RandomProfile> random_profiles() {
    std::mt19937_64 rng(1234567);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<RandomProfile> out;
    for (int i = 0; i < 100; ++i) {
        const std::uint32_t n = 2 + static_cast<std::uint32_t>(rng() % 199);
        const std::uint64_t L = pair_count(n);
        const double m = std::floor(unit(rng) * (L + 1));
        double eps = unit(rng);
        if (i == 0) eps = 0.0;
        if (i == 1) eps = 1.0;
        out.push_back({L, std::min(m, static_cast<double>(L)), eps});
    }
    return out;
}

Outcome probability_mass() {
    double worst = 0.0;
    for (const auto& rp : random_profiles()) {
        const auto p = ProbabilityProfile::build(rp.L, rp.m, rp.eps);
        const double err = std::fabs(static_cast<double>(p.expected_edges()) - rp.m);
        worst = std::max(worst, rp.m > 0 ? err / rp.m : err);
    }
    return {worst <= 1e-9, "max relative error " + fmt(worst)};
}

Outcome limit_cases() {
    bool ok = true;
    for (auto [n, m] : {std::pair<std::uint32_t, double>{6, 3}, {50, 100}, {128, 512}, {512, 128}, {30, 435}}) {
        const auto model = zoo::spatial(Positions::uniform(n, 2, n), 1);
        const auto step = ProbabilityProfile::build(model.pair_count(), m, 0.0);
        for (Rank r = 1; r <= model.pair_count(); ++r) ok &= step[r] == (r <= m ? 1.0 : 0.0);
        const Graph g = GraphSampler(model, step).generate(99);
        ok &= g.edge_count() == static_cast<std::uint64_t>(m);
        for (Rank r = 1; r <= static_cast<Rank>(m); ++r) ok &= g.has_edge(model.at(r).u, model.at(r).v);

        const auto flat = ProbabilityProfile::build(model.pair_count(), m, 1.0);
        const double expected = m / static_cast<double>(model.pair_count());
        for (double p : flat.probabilities()) ok &= p == expected;
    }
    return {ok, ok ? "step and uniform profiles exact" : "mismatch"};
}

Outcome weight_mapping() {
    bool ok = epsilon_to_weight(0.5) == 1.0;
    double prev = INFINITY;
    double worst_ratio = 0.0;
    for (int i = 1; i <= 1000; ++i) {
        const double eps = i / 1001.0;
        const double b = epsilon_to_weight(eps);
        ok &= b < prev;
        prev = b;
        // continuity: shrinking the step 100-fold shrinks the change about 100-fold
        const double wide = std::fabs(epsilon_to_weight(eps + 1e-7) - b);
        const double narrow = std::fabs(epsilon_to_weight(eps + 1e-9) - b);
        worst_ratio = std::max(worst_ratio, narrow / wide);
    }
    ok &= worst_ratio < 0.02;
    return {ok, "b(0.5)=" + fmt(epsilon_to_weight(0.5)) + ", strictly decreasing on 1000 points, max step ratio " +
                    fmt(worst_ratio)};
}

Outcome monotone_profiles() {
    double worst = -INFINITY;
    for (const auto& rp : random_profiles()) {
        const auto p = ProbabilityProfile::build(rp.L, rp.m, rp.eps);
        for (Rank r = 1; r < rp.L; ++r) worst = std::max(worst, p[r + 1] - p[r]);
    }
    return {worst <= 1e-12, "max P(r+1)-P(r) " + fmt(worst)};
}

Outcome binomial_concentration() {
    const auto model = zoo::nested(128, 0);
    const auto profile = ProbabilityProfile::build(model.pair_count(), 512, 0.5);
    double var = 0.0;
    for (double p : profile.probabilities()) var += p * (1 - p);
    double total = 0.0;
    for (const auto& g : GraphSampler(model, profile).generate_batch(200, 2024)) total += g.edge_count();
    const double mean = total / 200;
    const double z = std::fabs(mean - 512) / std::sqrt(var);
    return {z <= 3.0, "mean " + fmt(mean) + ", sigma " + fmt(std::sqrt(var)) + ", |z| " + fmt(z)};
}

Outcome metric_oracles() {
    std::mt19937_64 rng(4242);
    int mismatches = 0;
    for (int i = 0; i < 50; ++i) {
        const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng() % 30);
        const double p = std::uniform_real_distribution<double>(0.0, 0.5)(rng);
        const Graph g = oracle::random_graph(n, p, rng);
        const auto stats = oracle::largest_component_stats(g);
        const auto gcc = metrics::largest_component(g);
        if (metrics::clustering_coefficient(g) != oracle::clustering(g)) ++mismatches;
        if (gcc.size() != stats.size || metrics::mean_distance(g, gcc) != stats.mean_distance) ++mismatches;
    }
    return {mismatches == 0, std::to_string(mismatches) + " mismatches on 50 graphs"};
}

Outcome delta_hat_anchors() {
    bool ok = true;
    for (std::uint32_t n : {2u, 3u, 10u, 1000u}) {
        std::vector<NodePair> e;
        for (NodeId v = 1; v < n; ++v) e.push_back({0, v});
        ok &= metrics::delta_hat(Graph(n, e)) == 1.0;
    }
    std::mt19937_64 rng(7);
    int checked = 0;
    while (checked < 50) {
        const std::uint32_t n = 10 + static_cast<std::uint32_t>(rng() % 200);
        const Graph g = oracle::random_graph(n, 1.2 / n, rng);
        const auto s = metrics::path_summary(g);
        if (s.gcc_fraction > 0.9) continue;
        ok &= s.delta_hat == 0.0;
        ++checked;
    }
    // exactly 90% in the giant component
    std::vector<NodePair> e;
    for (NodeId v = 1; v < 9; ++v) e.push_back({0, v});
    ok &= metrics::delta_hat(Graph(10, e)) == 0.0;
    return {ok, ok ? "star -> 1, gcc <= 0.9 -> 0" : "mismatch"};
}

Outcome watts_strogatz() {
    ProfileOptions opt;
    opt.runs = 5;
    opt.sample_seed = 1;
    const auto res = smallworld_profile(zoo::watts_strogatz(1000, 10, 1), "watts_strogatz", 5000, opt);
    const auto& base = res.rows.front();
    bool found = false;
    std::string witness = "none";
    for (const auto& row : res.rows) {
        if (row.delta_hat_mean >= 5 * base.delta_hat_mean && row.cc_mean >= 0.7 * base.cc_mean) {
            found = true;
            witness = "eps " + fmt(row.epsilon) + ": cc " + fmt(row.cc_mean) + ", delta " + fmt(row.delta_hat_mean);
            break;
        }
    }
    const bool ok = base.cc_mean >= 0.6 && base.delta_hat_mean <= 0.1 && found;
    return {ok, "eps 0: cc " + fmt(base.cc_mean) + ", delta " + fmt(base.delta_hat_mean) + "; " + witness};
}

std::vector<double> low_epsilons() {
    std::vector<double> out;
    for (double e : default_epsilon_grid()) {
        if (e <= 1e-2) out.push_back(e);
    }
    return out;
}

Outcome zoo_signatures() {
    ProfileOptions opt;
    opt.epsilons = low_epsilons();
    opt.runs = 5;
    opt.sample_seed = 3;
    bool ok = true;
    std::string detail;
    for (const std::string name : {"fractal_hierarchy", "star"}) {
        const auto res = smallworld_profile(zoo::ZooSpec{name, {}}, 1000, 5000, opt);
        double best_delta = 0.0;
        double best_cc = 0.0;
        bool hit = false;
        for (const auto& row : res.rows) {
            if (row.delta_hat_mean >= 0.5 && row.cc_mean >= 0.3 && !hit) {
                hit = true;
                best_delta = row.delta_hat_mean;
                best_cc = row.cc_mean;
            }
        }
        ok &= hit;
        detail += name + (hit ? " delta " + fmt(best_delta) + " cc " + fmt(best_cc) : " not reached") + "; ";
    }
    opt.epsilons = {0.0};
    for (const std::string name : {"nested", "perlin"}) {
        const auto res = smallworld_profile(zoo::ZooSpec{name, {}}, 1000, 5000, opt);
        const auto& row = res.rows.front();
        ok &= row.delta_hat_mean == 0.0;
        detail += name + " eps 0 delta " + fmt(row.delta_hat_mean) + " gcc " + fmt(row.gcc_fraction_mean) + "; ";
    }
    return {ok, detail};
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i] / n;
        my += y[i] / n;
    }
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

// Same n and m as the zoo profiles.
Outcome degree_clustering() {
    const std::uint32_t n = 1000;
    const double m = 5000;
    const auto model = zoo::fractal_hierarchy(n, 0);
    bool ok = true;
    std::string detail;
    for (double eps : default_epsilon_grid()) {
        if (eps > 0.1) continue;
        const auto profile = ProbabilityProfile::build(model.pair_count(), m, eps);
        const GraphSampler sampler(model, profile);
        double worst = -INFINITY;
        double worst_pearson = -INFINITY;
        for (const auto& g : sampler.generate_batch(5, 11)) {
            std::vector<double> degree(n);
            for (NodeId u = 0; u < n; ++u) degree[u] = static_cast<double>(g.degree(u));
            const auto cc = metrics::local_clustering(g);
            const double rho = metrics::spearman(degree, cc);
            worst = std::isnan(rho) ? INFINITY : std::max(worst, rho);
            worst_pearson = std::max(worst_pearson, pearson(degree, cc));
        }
        ok &= worst < 0.0;
        detail += "eps " + fmt(eps) + " max spearman " + fmt(worst) + " (pearson " + fmt(worst_pearson) + "); ";
    }
    return {ok, detail};
}

int run_cli(const fs::path& dir, const std::string& args) {
    const std::string cmd = "cd '" + dir.string() + "' && '" RANKGRAPH_CLI "' " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome reproducibility() {
    bool ok = true;
    const auto model = zoo::spatial(Positions::uniform(300, 2, 5), 6);
    const auto profile = ProbabilityProfile::build(model.pair_count(), 1500, 0.2);
    const GraphSampler sampler(model, profile);
    const io::EdgeListHeader header{"spatial", 1500, 0.2, 6, 8};
    const std::string a = io::edge_list(sampler.generate(8, 1), header);
    ok &= a == io::edge_list(sampler.generate(8, 1), header);
    ok &= a == io::edge_list(sampler.generate(8, 4), header);

    ProfileOptions opt;
    opt.epsilons = {0.0, 0.01, 1.0};
    opt.runs = 3;
    opt.sample_seed = 9;
    const zoo::ZooSpec spec{"perlin", {}};
    const std::string csv1 = io::smallworld_csv(smallworld_profile(spec, 200, 800, opt));
    opt.threads = 4;
    ok &= csv1 == io::smallworld_csv(smallworld_profile(spec, 200, 800, opt));

    const fs::path dir = fs::temp_directory_path() / "rankgraph_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const std::string gen = "generate --structure blocks_overlapping --n 200 --k 8 --epsilon 0.05 --seed 12";
    ok &= run_cli(dir, gen + " --out a.edges") == 0;
    ok &= run_cli(dir, gen + " --out b.edges --threads 4") == 0;
    ok &= run_cli(dir, "generate --config a.edges.manifest.json --out c.edges") == 0;
    const std::string sw = "smallworld --structure star --n 200 --m 800 --runs 2 --seed 5";
    ok &= run_cli(dir, sw + " --out s1.csv") == 0;
    ok &= run_cli(dir, sw + " --out s2.csv --threads 4") == 0;
    if (ok) {
        const std::string ea = io::read_file(dir / "a.edges");
        ok &= ea == io::read_file(dir / "b.edges") && ea == io::read_file(dir / "c.edges");
        ok &= io::read_file(dir / "s1.csv") == io::read_file(dir / "s2.csv");
    }
    return {ok, ok ? "edge lists and CSVs identical across runs, threads and manifest replay" : "outputs differ"};
}

}

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> check;
        double budget_seconds;
    };
    const std::vector<Criterion> criteria = {
        {"probability mass exactness", probability_mass, 10},
        {"limit-case fidelity", limit_cases, 0},
        {"weight mapping", weight_mapping, 0},
        {"monotone profile", monotone_profiles, 0},
        {"binomial concentration", binomial_concentration, 30},
        {"metric oracles", metric_oracles, 0},
        {"short-path score anchors", delta_hat_anchors, 0},
        {"Watts-Strogatz small world", watts_strogatz, 300},
        {"zoo profile signatures", zoo_signatures, 600},
        {"fractal hierarchy degree-clustering anticorrelation", degree_clustering, 0},
        {"reproducibility", reproducibility, 0},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i].check();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criteria[i].budget_seconds > 0 && secs > criteria[i].budget_seconds) {
            out.pass = false;
            out.detail += " (over the " + fmt(criteria[i].budget_seconds) + " s budget)";
        }
        failures += !out.pass;
        std::printf("%s %2zu %s: %s [%.2f s]\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                    out.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
