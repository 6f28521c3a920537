#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rankgraph/io.hpp"
#include "rankgraph/sampler.hpp"
#include "rankgraph/smallworld.hpp"
#include "rankgraph/zoo.hpp"

using namespace rankgraph;
namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitRuntime = 3;

struct RunConfig {
    std::string command;
    std::string structure;
    bool all = false;
    std::optional<std::uint32_t> n;
    std::optional<double> m;
    std::optional<double> k;
    std::optional<double> density;
    std::vector<double> epsilon;
    Seed seed = 0;
    std::optional<Seed> tie_seed;
    std::optional<Seed> sample_seed;
    std::optional<Seed> structure_seed;
    std::uint32_t dimension = 1;
    std::optional<std::uint32_t> blocks;
    unsigned octaves = 2;
    double frequency = 4.0;
    std::optional<std::uint32_t> ws_k;
    std::string ws_variant = "ring";
    std::vector<double> center;
    std::string positions;
    std::string affiliations;
    std::string labels;
    std::string cost_csv;
    double penalty = 1.0;
    bool haversine = false;
    bool descending = false;
    std::size_t count = 1;
    std::size_t runs = 5;
    unsigned threads = 1;
    std::string out;
    std::string format;
    std::string config;
};

// Everything a command needs after validation.
struct Resolved {
    std::uint32_t n = 0;
    std::optional<double> m;
    std::vector<double> epsilons;
    Seed tie_seed = 0;
    Seed sample_seed = 0;
    Seed structure_seed = 0;
    zoo::ZooParams params;
};

struct Output {
    fs::path path;
    std::string content;
};

std::string dashed(std::string key) {
    for (auto& c : key) {
        if (c == '_') c = '-';
    }
    return key;
}

std::string json_scalar(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_float()) return io::format_double(v.get<double>());
    if (v.is_number()) return v.dump();
    throw ValidationError("config values must be numbers, strings, booleans or arrays of those");
}

// Feeds config-file values into options the command line left unset.
void apply_config_file(CLI::App& sub, const std::string& path) {
    Json doc;
    try {
        doc = Json::parse(io::read_file(path));
    } catch (const Json::parse_error& e) {
        throw ValidationError(path + ": " + e.what());
    }
    if (!doc.is_object()) throw ValidationError(path + ": expected a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (key == "command") {
            if (value != sub.get_name()) {
                throw ValidationError(path + ": config is for command '" + json_scalar(value) + "', not '" +
                                      sub.get_name() + "'");
            }
            continue;
        }
        if (key == "config") continue;
        CLI::Option* opt = sub.get_option_no_throw("--" + dashed(key));
        if (opt == nullptr) throw ValidationError(path + ": unknown key '" + key + "'");
        if (opt->count() > 0) continue;
        std::vector<std::string> results;
        if (value.is_array()) {
            for (const auto& x : value) results.push_back(json_scalar(x));
        } else if (value.is_boolean()) {
            if (!value.get<bool>()) continue;
            results.push_back("true");
        } else {
            results.push_back(json_scalar(value));
        }
        opt->add_result(results);
        opt->run_callback();
    }
}

double resolve_m(const RunConfig& cfg, std::uint32_t n) {
    const int given = cfg.m.has_value() + cfg.k.has_value() + cfg.density.has_value();
    if (given != 1) throw ValidationError("give exactly one of --m, --k, --density");
    const double L = static_cast<double>(pair_count(n));
    double m;
    if (cfg.m) {
        m = *cfg.m;
    } else if (cfg.k) {
        m = n * *cfg.k / 2.0;
    } else {
        if (!(*cfg.density >= 0.0 && *cfg.density <= 1.0)) throw ValidationError("--density must lie in [0,1]");
        m = *cfg.density * L;
    }
    if (!(m >= 0.0 && m <= L)) {
        throw InfeasibleDensityError("expected edge count m=" + io::format_double(m) + " is infeasible: n=" +
                                     std::to_string(n) + " has only " + std::to_string(pair_count(n)) + " pairs");
    }
    return m;
}

bool has_density(const RunConfig& cfg) {
    return cfg.m || cfg.k || cfg.density;
}

std::uint32_t ws_k_for(const RunConfig& cfg, std::uint32_t n, std::optional<double> m) {
    if (cfg.ws_k) return *cfg.ws_k;
    if (cfg.k) {
        const double k = *cfg.k;
        if (k != std::floor(k)) throw ValidationError("watts_strogatz needs an integer --k");
        return static_cast<std::uint32_t>(k);
    }
    if (m) {
        // nearest even degree to 2m/n
        const double k = 2.0 * std::round(*m / n);
        return static_cast<std::uint32_t>(std::max(2.0, k));
    }
    return 10;
}

void check_file(const std::string& path, const char* flag) {
    if (!path.empty() && !fs::is_regular_file(path)) {
        throw ValidationError(std::string(flag) + ": file not found: " + path);
    }
}

Resolved resolve(const RunConfig& cfg, std::optional<std::uint32_t> default_n) {
    check_file(cfg.positions, "--positions");
    check_file(cfg.affiliations, "--affiliations");
    check_file(cfg.labels, "--labels");
    check_file(cfg.cost_csv, "--cost-csv");

    Resolved r;
    r.tie_seed = cfg.tie_seed.value_or(cfg.seed);
    r.sample_seed = cfg.sample_seed.value_or(cfg.seed);
    r.structure_seed = cfg.structure_seed.value_or(cfg.seed);
    r.epsilons = cfg.epsilon;
    for (double e : r.epsilons) {
        if (!(e >= 0.0 && e <= 1.0)) throw ValidationError("epsilon " + io::format_double(e) + " outside [0,1]");
    }

    auto& p = r.params;
    if (!cfg.positions.empty()) p.positions = io::read_positions_csv(cfg.positions);
    if (cfg.n) {
        r.n = *cfg.n;
    } else if (p.positions) {
        r.n = p.positions->node_count();
    } else if (default_n) {
        r.n = *default_n;
    } else {
        throw ValidationError("--n is required");
    }
    if (r.n < 2) throw ValidationError("--n must be at least 2");

    p.dimension = cfg.dimension;
    p.block_count = cfg.blocks;
    if (cfg.blocks && *cfg.blocks < 1) throw ValidationError("--blocks must be positive");
    p.octaves = cfg.octaves;
    if (cfg.octaves < 1) throw ValidationError("--octaves must be positive");
    p.perlin_frequency = cfg.frequency;
    if (!(cfg.frequency > 0.0)) throw ValidationError("--frequency must be positive");
    p.metric = cfg.haversine ? DistanceMetric::Haversine : DistanceMetric::Euclidean;
    if (!cfg.center.empty()) p.center = cfg.center;
    if (cfg.ws_variant == "ring") {
        p.ws_variant = WsVariant::Ring;
    } else if (cfg.ws_variant == "literal") {
        p.ws_variant = WsVariant::Literal;
    } else {
        throw ValidationError("--ws-variant must be ring or literal");
    }
    if (!cfg.affiliations.empty()) p.affiliation = io::read_affiliations_csv(cfg.affiliations, r.n);
    if (!cfg.labels.empty()) p.labels = io::first_blocks(io::read_affiliations_csv(cfg.labels, r.n));
    p.penalty = cfg.penalty;
    if (!std::isfinite(cfg.penalty)) throw ValidationError("--penalty must be finite");
    if (!cfg.cost_csv.empty()) p.custom_cost = io::load_custom_cost(cfg.cost_csv, r.n);
    p.custom_direction = cfg.descending ? SortDirection::Descending : SortDirection::Ascending;
    p.structure_seed = r.structure_seed;
    p.tie_seed = r.tie_seed;
    if (cfg.threads < 1) throw ValidationError("--threads must be positive");
    return r;
}

std::string structure_name(const RunConfig& cfg) {
    if (!cfg.structure.empty()) return cfg.structure;
    if (!cfg.cost_csv.empty()) return "custom";
    throw ValidationError("--structure is required (see 'rankgraph zoo-list')");
}

void require_known(const std::string& name) {
    if (!zoo::is_known(name)) {
        std::string names;
        for (const auto& e : zoo::catalog()) names += (names.empty() ? "" : ", ") + e.name;
        throw ValidationError("unknown structure '" + name + "'; available: " + names);
    }
}

zoo::ZooSpec spec_for(const RunConfig& cfg, const Resolved& r, const std::string& name) {
    require_known(name);
    zoo::ZooSpec spec{name, r.params};
    if (name == "watts_strogatz") spec.params.k = ws_k_for(cfg, r.n, r.m);
    if (name == "disconnected_cliques") {
        if (!r.m) throw ValidationError("disconnected_cliques needs a density (--m, --k or --density)");
        spec.params.m = *r.m;
    }
    return spec;
}

// Structures that need no input files, for gallery and zoo modes.
std::vector<std::string> builtin_structures() {
    std::vector<std::string> names;
    for (const auto& e : zoo::catalog()) {
        if (e.name != "attributes" && e.name != "custom") names.push_back(e.name);
    }
    return names;
}

Json manifest(const RunConfig& cfg, const Resolved& r, const std::vector<std::string>& structures) {
    Json j;
    j["command"] = cfg.command;
    if (cfg.all) {
        j["all"] = true;
    } else if (!structures.empty()) {
        j["structure"] = structures.front();
    }
    j["n"] = r.n;
    if (r.m) j["m"] = *r.m;
    if (!r.epsilons.empty()) j["epsilon"] = r.epsilons;
    j["seed"] = cfg.seed;
    j["tie_seed"] = r.tie_seed;
    j["sample_seed"] = r.sample_seed;
    j["structure_seed"] = r.structure_seed;
    j["dimension"] = cfg.dimension;
    if (cfg.blocks) j["blocks"] = *cfg.blocks;
    j["octaves"] = cfg.octaves;
    j["frequency"] = cfg.frequency;
    for (const auto& s : structures) {
        if (s == "watts_strogatz") j["ws_k"] = ws_k_for(cfg, r.n, r.m);
    }
    j["ws_variant"] = cfg.ws_variant;
    if (!cfg.center.empty()) j["center"] = cfg.center;
    if (!cfg.positions.empty()) j["positions"] = cfg.positions;
    if (!cfg.affiliations.empty()) j["affiliations"] = cfg.affiliations;
    if (!cfg.labels.empty()) j["labels"] = cfg.labels;
    if (!cfg.cost_csv.empty()) j["cost_csv"] = cfg.cost_csv;
    j["penalty"] = cfg.penalty;
    if (cfg.haversine) j["haversine"] = true;
    if (cfg.descending) j["descending"] = true;
    if (cfg.command == "generate") j["count"] = cfg.count;
    if (cfg.command == "smallworld") j["runs"] = cfg.runs;
    j["threads"] = cfg.threads;
    j["out"] = cfg.out;
    if (!cfg.format.empty()) j["format"] = cfg.format;
    return j;
}

void write_all(const std::vector<Output>& outputs) {
    for (const auto& o : outputs) io::write_file_atomic(o.path, o.content);
}

fs::path manifest_path(const fs::path& out, bool directory) {
    if (directory) return out / "manifest.json";
    fs::path p = out;
    p += ".manifest.json";
    return p;
}

void cmd_generate(RunConfig& cfg) {
    if (cfg.format.empty()) cfg.format = "edgelist";
    if (cfg.format != "edgelist" && cfg.format != "pgm") throw ValidationError("--format must be edgelist or pgm");
    if (cfg.count < 1) throw ValidationError("--count must be positive");
    const bool many = cfg.count > 1;
    if (cfg.out.empty()) cfg.out = many ? "graphs" : (cfg.format == "pgm" ? "graph.pgm" : "graph.edges");

    Resolved r = resolve(cfg, std::nullopt);
    const std::string name = structure_name(cfg);
    r.m = resolve_m(cfg, r.n);
    if (r.epsilons.size() != 1) throw ValidationError("generate takes exactly one --epsilon");
    const double eps = r.epsilons.front();
    const auto spec = spec_for(cfg, r, name);

    const RankModel model = zoo::build(spec, r.n);
    const auto profile = ProbabilityProfile::build(model.pair_count(), *r.m, eps);
    const GraphSampler sampler(model, profile);

    std::vector<Output> outputs;
    auto render = [&](const Graph& g, Seed seed) {
        return cfg.format == "pgm" ? io::adjacency_pgm(g)
                                   : io::edge_list(g, {name, *r.m, eps, r.tie_seed, seed});
    };
    const std::string ext = cfg.format == "pgm" ? ".pgm" : ".edges";
    if (!many) {
        outputs.push_back({cfg.out, render(sampler.generate(r.sample_seed, cfg.threads), r.sample_seed)});
    } else {
        const auto graphs = sampler.generate_batch(cfg.count, r.sample_seed, cfg.threads);
        const int width = static_cast<int>(std::to_string(cfg.count - 1).size());
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            std::string idx = std::to_string(i);
            idx.insert(0, width - idx.size(), '0');
            outputs.push_back({fs::path(cfg.out) / ("graph_" + idx + ext),
                               render(graphs[i], GraphSampler::run_seed(r.sample_seed, i))});
        }
    }
    outputs.push_back({manifest_path(cfg.out, many), manifest(cfg, r, {name}).dump(2) + "\n"});
    write_all(outputs);
}

void cmd_rank_matrix(RunConfig& cfg) {
    if (cfg.format.empty()) cfg.format = "pgm";
    if (cfg.format != "pgm" && cfg.format != "csv") throw ValidationError("--format must be pgm or csv");
    if (cfg.out.empty()) cfg.out = cfg.all ? "rank_matrices" : "rank_matrix." + cfg.format;

    Resolved r = resolve(cfg, cfg.all ? std::optional<std::uint32_t>(128) : std::nullopt);
    std::vector<std::string> names;
    if (cfg.all) {
        if (!cfg.structure.empty()) throw ValidationError("--all and --structure are exclusive");
        names = builtin_structures();
        // gallery cliques use mean degree 16
        r.m = has_density(cfg) ? resolve_m(cfg, r.n) : 8.0 * r.n;
    } else {
        names = {structure_name(cfg)};
        if (has_density(cfg)) r.m = resolve_m(cfg, r.n);
    }
    std::vector<zoo::ZooSpec> specs;
    for (const auto& name : names) specs.push_back(spec_for(cfg, r, name));

    std::vector<Output> outputs;
    for (const auto& spec : specs) {
        const RankModel model = zoo::build(spec, r.n);
        std::string content = cfg.format == "pgm" ? io::rank_matrix_pgm(model) : io::rank_matrix_csv(model);
        const fs::path path = cfg.all ? fs::path(cfg.out) / (spec.name + "." + cfg.format) : fs::path(cfg.out);
        outputs.push_back({path, std::move(content)});
    }
    outputs.push_back({manifest_path(cfg.out, cfg.all), manifest(cfg, r, names).dump(2) + "\n"});
    write_all(outputs);
}

void cmd_prob_curve(RunConfig& cfg) {
    if (cfg.out.empty()) cfg.out = "prob_curve.csv";
    Resolved r = resolve(cfg, 512);
    r.m = has_density(cfg) ? resolve_m(cfg, r.n) : 128.0;
    if (*r.m > static_cast<double>(pair_count(r.n))) {
        throw InfeasibleDensityError("m=128 exceeds the pair count of n=" + std::to_string(r.n));
    }
    if (r.epsilons.empty()) r.epsilons = default_epsilon_grid();

    std::vector<ProbabilityProfile> profiles;
    for (double eps : r.epsilons) profiles.push_back(ProbabilityProfile::build(pair_count(r.n), *r.m, eps));
    write_all({{cfg.out, io::profile_csv(profiles)},
               {manifest_path(cfg.out, false), manifest(cfg, r, {}).dump(2) + "\n"}});
}

void cmd_smallworld(RunConfig& cfg) {
    if (cfg.out.empty()) cfg.out = cfg.all ? "smallworld" : "smallworld.csv";
    if (cfg.runs < 1) throw ValidationError("--runs must be positive");
    Resolved r = resolve(cfg, std::nullopt);
    r.m = resolve_m(cfg, r.n);
    if (r.epsilons.empty()) r.epsilons = default_epsilon_grid();

    std::vector<std::string> names;
    if (cfg.all) {
        if (!cfg.structure.empty()) throw ValidationError("--all and --structure are exclusive");
        names = builtin_structures();
    } else {
        names = {structure_name(cfg)};
    }
    std::vector<zoo::ZooSpec> specs;
    for (const auto& name : names) specs.push_back(spec_for(cfg, r, name));

    ProfileOptions options;
    options.epsilons = r.epsilons;
    options.runs = cfg.runs;
    options.sample_seed = r.sample_seed;
    options.threads = cfg.threads;
    for (std::size_t i = 1; i < r.epsilons.size(); ++i) {
        if (!(r.epsilons[i] > r.epsilons[i - 1])) throw ValidationError("epsilon grid must be strictly increasing");
    }

    std::vector<Output> outputs;
    for (const auto& spec : specs) {
        const auto result = smallworld_profile(spec, r.n, *r.m, options);
        const fs::path path = cfg.all ? fs::path(cfg.out) / (spec.name + ".csv") : fs::path(cfg.out);
        outputs.push_back({path, io::smallworld_csv(result)});
    }
    outputs.push_back({manifest_path(cfg.out, cfg.all), manifest(cfg, r, names).dump(2) + "\n"});
    write_all(outputs);
}

void cmd_zoo_list() {
    for (const auto& e : zoo::catalog()) std::cout << e.name << "\t" << e.description << "\n";
}

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--config", cfg.config, "JSON file of option values; command-line flags win");
    sub->add_option("--structure", cfg.structure, "zoo structure name (see zoo-list)");
    sub->add_option("--n", cfg.n, "number of nodes");
    sub->add_option("--m", cfg.m, "expected number of edges");
    sub->add_option("--k", cfg.k, "mean degree, m = n*k/2");
    sub->add_option("--density", cfg.density, "fraction of pairs, m = density*L");
    sub->add_option("--seed", cfg.seed, "default for every seed")->envname("RANKGRAPH_SEED");
    sub->add_option("--tie-seed", cfg.tie_seed, "seed for breaking equal costs");
    sub->add_option("--sample-seed", cfg.sample_seed, "seed for edge draws");
    sub->add_option("--structure-seed", cfg.structure_seed, "seed for random positions and noise fields");
    sub->add_option("--d,--dimension", cfg.dimension, "dimension of generated positions");
    sub->add_option("--blocks", cfg.blocks, "number of blocks (default ceil(sqrt(n)))");
    sub->add_option("--octaves", cfg.octaves, "Perlin octaves");
    sub->add_option("--frequency", cfg.frequency, "Perlin base frequency across the matrix");
    sub->add_option("--ws-k", cfg.ws_k, "Watts-Strogatz lattice degree (default from k or m)");
    sub->add_option("--ws-variant", cfg.ws_variant, "ring or literal");
    sub->add_option("--center", cfg.center, "core-periphery center coordinates")->delimiter(',');
    sub->add_option("--positions", cfg.positions, "CSV of node coordinates, one row per node");
    sub->add_option("--affiliations", cfg.affiliations, "CSV of node_id,block_id rows");
    sub->add_option("--labels", cfg.labels, "CSV of node_id,label rows for the attributes structure");
    sub->add_option("--cost-csv", cfg.cost_csv, "CSV of u,v,cost rows for the custom structure");
    sub->add_option("--penalty", cfg.penalty, "cost added to pairs with different labels");
    sub->add_flag("--haversine", cfg.haversine, "positions are (longitude, latitude) in degrees");
    sub->add_flag("--descending", cfg.descending, "rank custom costs from high to low");
    sub->add_option("--threads", cfg.threads, "worker threads; results do not depend on it");
    sub->add_option("--out", cfg.out, "output file, or directory for multi-file output");
}

}

int main(int argc, char** argv) {
    CLI::App app{"Rank-based random graph generator"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* gen = app.add_subcommand("generate", "sample graphs from a structure");
    add_common(gen, cfg);
    gen->add_option("--epsilon", cfg.epsilon, "randomness in [0,1]")->delimiter(',');
    gen->add_option("--count", cfg.count, "number of graphs");
    gen->add_option("--format", cfg.format, "edgelist or pgm");

    auto* rm = app.add_subcommand("rank-matrix", "render the rank matrix of a structure");
    add_common(rm, cfg);
    rm->add_flag("--all", cfg.all, "every built-in structure, n defaults to 128");
    rm->add_option("--format", cfg.format, "pgm or csv");

    auto* pc = app.add_subcommand("prob-curve", "probability per rank for several epsilon values");
    add_common(pc, cfg);
    pc->add_option("--epsilon", cfg.epsilon, "epsilon values (default grid)")->delimiter(',');

    auto* sw = app.add_subcommand("smallworld", "clustering and short-path profile over epsilon");
    add_common(sw, cfg);
    sw->add_flag("--all", cfg.all, "every built-in structure with the same n and m");
    sw->add_option("--epsilon", cfg.epsilon, "epsilon grid (default grid)")->delimiter(',');
    sw->add_option("--runs", cfg.runs, "graphs per epsilon");

    app.add_subcommand("zoo-list", "list structures");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        cfg.command = sub->get_name();
        if (!cfg.config.empty()) {
            try {
                apply_config_file(*sub, cfg.config);
            } catch (const CLI::ParseError& e) {
                throw ValidationError(cfg.config + ": " + e.what());
            }
        }
        if (cfg.command == "generate") cmd_generate(cfg);
        if (cfg.command == "rank-matrix") cmd_rank_matrix(cfg);
        if (cfg.command == "prob-curve") cmd_prob_curve(cfg);
        if (cfg.command == "smallworld") cmd_smallworld(cfg);
        if (cfg.command == "zoo-list") cmd_zoo_list();
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return 0;
}
