#include "rankgraph/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <memory>
#include <sstream>

namespace rankgraph::io {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view s, double& out) {
    s = trim(s);
    if (s.empty()) return false;
    if (s.front() == '+') s.remove_prefix(1);
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

bool parse_row(std::string_view line, char sep, std::vector<double>& row) {
    row.clear();
    std::size_t start = 0;
    while (true) {
        const auto end = line.find(sep, start);
        double x;
        if (!parse_double(line.substr(start, end == std::string_view::npos ? end : end - start), x)) {
            return false;
        }
        row.push_back(x);
        if (end == std::string_view::npos) return true;
        start = end + 1;
    }
}

template <class Fn>
void for_each_line(const std::string& text, Fn&& fn) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        ++line_no;
        const std::string_view line = trim(std::string_view(text).substr(start, end - start));
        if (!line.empty() && line.front() != '#') fn(line, line_no);
        start = end + 1;
    }
}

std::uint32_t as_node_id(double x, std::uint32_t n, const std::string& source, std::size_t line_no) {
    if (!(x >= 0.0) || x != std::floor(x) || x >= n) {
        throw ValidationError(source + ":" + std::to_string(line_no) + ": node id " + format_double(x) +
                              " is not an integer in [0, " + std::to_string(n) + ")");
    }
    return static_cast<std::uint32_t>(x);
}

std::string pgm_header(std::uint32_t n) {
    return "P5\n" + std::to_string(n) + " " + std::to_string(n) + "\n255\n";
}

}

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

std::vector<std::vector<double>> parse_numeric_csv(const std::string& text, const std::string& source) {
    std::vector<std::vector<double>> rows;
    std::vector<double> row;
    bool first = true;
    for_each_line(text, [&](std::string_view line, std::size_t line_no) {
        const bool ok = parse_row(line, ',', row);
        if (!ok) {
            if (first) {
                first = false;
                return;
            }
            throw ValidationError(source + ":" + std::to_string(line_no) + ": expected numeric values, got '" +
                                  std::string(line) + "'");
        }
        first = false;
        rows.push_back(row);
    });
    return rows;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw std::runtime_error("failed writing " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

Positions read_positions_csv(const std::filesystem::path& path) {
    return Positions::from_rows(parse_numeric_csv(read_file(path), path.string()));
}

BlockAffiliation read_affiliations_csv(const std::filesystem::path& path, std::uint32_t n) {
    const std::string source = path.string();
    std::vector<std::vector<std::uint32_t>> memberships(n);
    std::size_t row_no = 0;
    for (const auto& row : parse_numeric_csv(read_file(path), source)) {
        ++row_no;
        if (row.size() != 2) {
            throw ValidationError(source + ": affiliation rows must be node_id,block_id");
        }
        const auto node = as_node_id(row[0], n, source, row_no);
        if (!(row[1] >= 0.0) || row[1] != std::floor(row[1]) || row[1] > std::numeric_limits<std::uint32_t>::max()) {
            throw ValidationError(source + ": block id " + format_double(row[1]) + " is not a non-negative integer");
        }
        memberships[node].push_back(static_cast<std::uint32_t>(row[1]));
    }
    for (std::uint32_t u = 0; u < n; ++u) {
        if (memberships[u].empty()) {
            throw ValidationError(source + ": node " + std::to_string(u) + " has no block");
        }
    }
    return BlockAffiliation(std::move(memberships));
}

std::vector<std::uint32_t> first_blocks(const BlockAffiliation& affiliation) {
    std::vector<std::uint32_t> labels(affiliation.node_count());
    for (NodeId u = 0; u < affiliation.node_count(); ++u) labels[u] = affiliation.blocks_of(u).front();
    return labels;
}

CostFunction parse_cost_table(const std::string& text, std::uint32_t n, const std::string& source) {
    if (n < 2) throw ValidationError("cost table needs n >= 2");
    auto table = std::make_shared<std::vector<double>>(pair_count(n), std::numeric_limits<double>::quiet_NaN());
    std::vector<double> row;
    bool first = true;
    for_each_line(text, [&](std::string_view line, std::size_t line_no) {
        if (!parse_row(line, ',', row) || row.size() != 3) {
            if (first) {
                first = false;
                return;
            }
            throw ValidationError(source + ":" + std::to_string(line_no) + ": expected u,v,cost");
        }
        first = false;
        NodeId u = as_node_id(row[0], n, source, line_no);
        NodeId v = as_node_id(row[1], n, source, line_no);
        if (u == v) throw ValidationError(source + ":" + std::to_string(line_no) + ": self pair");
        if (u > v) std::swap(u, v);
        if (!std::isfinite(row[2])) throw NonFiniteCostError(NodePair{u, v});
        double& slot = (*table)[triangular_index(n, NodePair{u, v})];
        if (!std::isnan(slot)) {
            throw ValidationError(source + ":" + std::to_string(line_no) + ": pair " + NodePair{u, v}.str() +
                                  " listed twice");
        }
        slot = row[2];
    });
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            if (std::isnan((*table)[triangular_index(n, NodePair{u, v})])) {
                throw ValidationError(source + ": missing cost for pair " + NodePair{u, v}.str());
            }
        }
    }
    return [table, n](NodeId u, NodeId v) {
        if (u > v) std::swap(u, v);
        return (*table)[triangular_index(n, NodePair{u, v})];
    };
}

CostFunction load_custom_cost(const std::filesystem::path& path, std::uint32_t n) {
    return parse_cost_table(read_file(path), n, path.string());
}

std::string rank_matrix_csv(const RankModel& model) {
    const std::uint32_t n = model.node_count();
    const auto order = model.display_order();
    std::string out;
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
            if (j > 0) out += ',';
            const NodeId a = order[i];
            const NodeId b = order[j];
            if (a != b) {
                out += std::to_string(model.rank_of(NodePair{std::min(a, b), std::max(a, b)}));
            }
        }
        out += '\n';
    }
    return out;
}

std::string rank_matrix_pgm(const RankModel& model) {
    const std::uint32_t n = model.node_count();
    const auto order = model.display_order();
    const double span = model.pair_count() > 1 ? static_cast<double>(model.pair_count() - 1) : 1.0;
    std::string out = pgm_header(n);
    out.reserve(out.size() + static_cast<std::size_t>(n) * n);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
            const NodeId a = order[i];
            const NodeId b = order[j];
            if (a == b) {
                out += static_cast<char>(255);
                continue;
            }
            const Rank r = model.rank_of(NodePair{std::min(a, b), std::max(a, b)});
            out += static_cast<char>(static_cast<unsigned char>(std::lround(255.0 * (r - 1) / span)));
        }
    }
    return out;
}

std::string adjacency_pgm(const Graph& g) {
    const std::uint32_t n = g.node_count();
    std::string out = pgm_header(n);
    std::string body(static_cast<std::size_t>(n) * n, static_cast<char>(255));
    for (const NodePair& e : g.edges()) {
        body[static_cast<std::size_t>(e.u) * n + e.v] = 0;
        body[static_cast<std::size_t>(e.v) * n + e.u] = 0;
    }
    return out + body;
}

std::string edge_list(const Graph& g, const EdgeListHeader& h) {
    std::string out;
    out += "# structure=" + h.structure + "\n";
    out += "# n=" + std::to_string(g.node_count()) + "\n";
    out += "# m=" + format_double(h.m) + "\n";
    out += "# epsilon=" + format_double(h.epsilon) + "\n";
    out += "# tie_seed=" + std::to_string(h.tie_seed) + "\n";
    out += "# sample_seed=" + std::to_string(h.sample_seed) + "\n";
    out += "# edges=" + std::to_string(g.edge_count()) + "\n";
    for (const NodePair& e : g.edges()) {
        out += std::to_string(e.u);
        out += '\t';
        out += std::to_string(e.v);
        out += '\n';
    }
    return out;
}

Graph parse_edge_list(const std::string& text, std::uint32_t n) {
    std::vector<NodePair> edges;
    std::vector<double> row;
    for_each_line(text, [&](std::string_view line, std::size_t line_no) {
        if (!parse_row(line, '\t', row) || row.size() != 2) {
            throw ValidationError("edge list line " + std::to_string(line_no) + ": expected u<TAB>v");
        }
        edges.push_back(NodePair{as_node_id(row[0], n, "edge list", line_no),
                                 as_node_id(row[1], n, "edge list", line_no)});
    });
    return Graph(n, std::move(edges));
}

std::string profile_csv(std::span<const ProbabilityProfile> profiles) {
    std::string out = "epsilon,r,p,cumulative\n";
    for (const auto& profile : profiles) {
        const std::string eps = format_double(profile.epsilon());
        long double cumulative = 0.0L;
        Rank r = 1;
        for (double p : profile.probabilities()) {
            cumulative += p;
            out += eps;
            out += ',';
            out += std::to_string(r++);
            out += ',';
            out += format_double(p);
            out += ',';
            out += format_double(static_cast<double>(cumulative));
            out += '\n';
        }
    }
    return out;
}

std::string smallworld_csv(const ProfileResult& result) {
    std::string out =
        "structure,n,m,epsilon,cc_mean,cc_std,delta_hat_mean,delta_hat_std,gcc_fraction_mean,mean_distance_mean,runs\n";
    for (const auto& row : result.rows) {
        out += result.structure + ',' + std::to_string(result.n) + ',' + format_double(result.m) + ',' +
               format_double(row.epsilon) + ',' + format_double(row.cc_mean) + ',' + format_double(row.cc_std) + ',' +
               format_double(row.delta_hat_mean) + ',' + format_double(row.delta_hat_std) + ',' +
               format_double(row.gcc_fraction_mean) + ',' + format_double(row.mean_distance_mean) + ',' +
               std::to_string(row.runs) + '\n';
    }
    return out;
}

}
