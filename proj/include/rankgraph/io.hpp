#ifndef rankgraph_io_hpp
#define rankgraph_io_hpp

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "rankgraph/graph.hpp"
#include "rankgraph/probability_profile.hpp"
#include "rankgraph/rank_model.hpp"
#include "rankgraph/smallworld.hpp"
#include "rankgraph/zoo.hpp"

namespace rankgraph::io {

/// Shortest decimal form that parses back to the same double.
std::string format_double(double x);

/*
 * Comma-separated rows; blank lines and lines starting with '#' are skipped.
 * A first row that does not parse as numbers is treated as a header.
 */
std::vector<std::vector<double>> parse_numeric_csv(const std::string& text, const std::string& source);

/// One row per node, one column per dimension.
Positions read_positions_csv(const std::filesystem::path& path);

/// Rows node_id,block_id; repeat a node for several blocks. Every node in [0,n) must appear.
BlockAffiliation read_affiliations_csv(const std::filesystem::path& path, std::uint32_t n);

/// First block of each node, for label-based costs.
std::vector<std::uint32_t> first_blocks(const BlockAffiliation& affiliation);

/*
 * Rows u,v,cost covering every pair of [0,n) exactly once (either
 * orientation). A missing pair is reported by name, smallest first.
 */
CostFunction parse_cost_table(const std::string& text, std::uint32_t n, const std::string& source);
CostFunction load_custom_cost(const std::filesystem::path& path, std::uint32_t n);

/// n lines of n comma-separated ranks, empty diagonal, rows in display order.
std::string rank_matrix_csv(const RankModel& model);

/// Binary PGM (P5, maxval 255); rank 1 is black, rank L white, diagonal white.
std::string rank_matrix_pgm(const RankModel& model);

/// Binary PGM of the adjacency matrix: edges black.
std::string adjacency_pgm(const Graph& g);

struct EdgeListHeader {
    std::string structure;
    double m = 0.0;
    double epsilon = 0.0;
    Seed tie_seed = 0;
    Seed sample_seed = 0;
};

/// "# key=value" header lines, then one "u<TAB>v" line per edge.
std::string edge_list(const Graph& g, const EdgeListHeader& header);
Graph parse_edge_list(const std::string& text, std::uint32_t n);

/// Header epsilon,r,p,cumulative; one row per rank of each profile.
std::string profile_csv(std::span<const ProbabilityProfile> profiles);

std::string smallworld_csv(const ProfileResult& result);

std::string read_file(const std::filesystem::path& path);

/// Writes to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}

#endif /* rankgraph_io_hpp */
