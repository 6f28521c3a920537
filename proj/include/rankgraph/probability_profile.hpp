#ifndef rankgraph_probability_profile_hpp
#define rankgraph_probability_profile_hpp

#include <cstdint>
#include <span>
#include <vector>

#include "rankgraph/types.hpp"

namespace rankgraph {

/// Weight used for epsilon = 0. Only reached by the curve for epsilon
/// vanishingly close to 0, since epsilon = 0 itself uses the exact step.
inline constexpr double kMaxBezierWeight = 1e8;

/// b = log(0.5) / log(1 - epsilon), with b(0) = kMaxBezierWeight and b(1) = 0.
double epsilon_to_weight(double epsilon);

/*
 * Cumulative expected edge count along the rank axis: the rational quadratic
 * Bezier curve with control points (0,0), (m,m), (L,m) and middle weight b.
 * Large b hugs the control polygon (all edges on the m best pairs), b = 0 is
 * the chord (uniform probability).
 */
class CumulativeEdgeCurve {
public:
    CumulativeEdgeCurve(double pair_count, double edge_count, double weight);

    /// Curve point at parameter t in [0,1].
    struct Point {
        long double x;
        long double y;
    };
    Point at(long double t) const;

    /// Expected number of edges among the first x ranks, x in [0, L].
    double operator()(double x) const { return static_cast<double>(evaluate(x)); }
    long double evaluate(long double x) const;

    /// Same as evaluate(x), but starts the parameter search at t_lo (which
    /// must satisfy x(t_lo) <= x) and writes back the parameter found.
    long double evaluate_from(long double x, long double& t_lo) const;

    double pair_count() const { return L_; }
    double edge_count() const { return m_; }
    double weight() const { return b_; }

private:
    double L_;
    double m_;
    double b_;
};

/// Y(x) for the given (L, m, b). Throws ValidationError if x is outside [0, L].
double cumulative_edges(double pair_count, double edge_count, double weight, double x);

/*
 * P(r) for r in [1..L]: probability that the pair at rank r is an edge.
 * Non-increasing in r and sums to m.
 */
class ProbabilityProfile {
public:
    /*
     * epsilon = 0 gives the exact step (1 on the first m ranks), epsilon = 1
     * gives m/L everywhere. In between, P(r) = Y(r) - Y(r-1) on the
     * cumulative curve, so the sum telescopes to m.
     */
    static ProbabilityProfile build(std::uint64_t pair_count, double edge_count, double epsilon);

    std::uint64_t pair_count() const { return P_.size(); }
    double edge_count() const { return m_; }
    double epsilon() const { return epsilon_; }
    double weight() const { return b_; }

    /// P at 1-based rank r.
    double operator[](Rank r) const { return P_[r - 1]; }
    std::span<const double> probabilities() const { return P_; }

    /// Sum of P(r), i.e. the expected number of edges.
    double expected_edges() const;

private:
    ProbabilityProfile(double m, double epsilon, double b, std::vector<double> P)
        : m_(m), epsilon_(epsilon), b_(b), P_(std::move(P)) {}

    double m_;
    double epsilon_;
    double b_;
    std::vector<double> P_;
};

}

#endif /* rankgraph_probability_profile_hpp */
