#ifndef rankgraph_types_hpp
#define rankgraph_types_hpp

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rankgraph {

using NodeId = std::uint32_t;
// 1-based position in a rank order
using Rank = std::uint64_t;
using Seed = std::uint64_t;

/// Number of unordered pairs among n nodes.
constexpr std::uint64_t pair_count(std::uint64_t n) {
    return n < 2 ? 0 : n * (n - 1) / 2;
}

/*
 * Undirected node pair stored with u < v.
 */
struct NodePair {
    NodeId u = 0;
    NodeId v = 0;

    auto operator<=>(const NodePair&) const = default;

    std::string str() const {
        return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
    }
};

/// Index of (u,v), u<v, in the row-major enumeration of the upper triangle.
constexpr std::uint64_t triangular_index(std::uint64_t n, NodePair p) {
    return p.u * (2 * n - p.u - 1) / 2 + (p.v - p.u - 1);
}

// Input or configuration problems. The CLI maps these to exit code 2.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidPairError : public ValidationError {
public:
    InvalidPairError(NodePair pair, std::uint64_t n)
        : ValidationError("invalid node pair " + pair.str() + " for n=" + std::to_string(n)), pair(pair) {}
    NodePair pair;
};

class NonFiniteCostError : public ValidationError {
public:
    explicit NonFiniteCostError(NodePair pair)
        : ValidationError("cost function is not finite on pair " + pair.str()), pair(pair) {}
    NodePair pair;
};

class InfeasibleDensityError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Numeric failures that are not the caller's fault. The CLI maps these to exit code 3.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}

#endif /* rankgraph_types_hpp */
