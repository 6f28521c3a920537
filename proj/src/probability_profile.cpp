#include "rankgraph/probability_profile.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rankgraph {

namespace {

void check_epsilon(double epsilon) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
        throw ValidationError("epsilon must lie in [0,1], got " + std::to_string(epsilon));
    }
}

}

double epsilon_to_weight(double epsilon) {
    check_epsilon(epsilon);
    if (epsilon == 0.0) return kMaxBezierWeight;
    if (epsilon == 1.0) return 0.0;
    return std::min(kMaxBezierWeight, std::log(0.5) / std::log1p(-epsilon));
}

CumulativeEdgeCurve::CumulativeEdgeCurve(double pair_count, double edge_count, double weight)
    : L_(pair_count), m_(edge_count), b_(weight) {
    if (!(L_ > 0.0) || !std::isfinite(L_)) {
        throw ValidationError("curve needs a positive pair count");
    }
    if (!(m_ >= 0.0 && m_ <= L_)) {
        throw InfeasibleDensityError("expected edge count " + std::to_string(m_) + " is outside [0, " +
                                     std::to_string(L_) + "]");
    }
    if (!(b_ >= 0.0) || !std::isfinite(b_)) {
        throw ValidationError("Bezier weight must be finite and non-negative");
    }
}

CumulativeEdgeCurve::Point CumulativeEdgeCurve::at(long double t) const {
    const long double s = 1.0L - t;
    const long double b0 = s * s;
    const long double b1 = 2.0L * t * s * b_;
    const long double b2 = t * t;
    const long double denom = b0 + b1 + b2;
    return Point{(b1 * m_ + b2 * L_) / denom, (b1 + b2) * m_ / denom};
}

long double CumulativeEdgeCurve::evaluate(long double x) const {
    long double t_lo = 0.0L;
    return evaluate_from(x, t_lo);
}

long double CumulativeEdgeCurve::evaluate_from(long double x, long double& t_lo) const {
    if (!(x >= 0.0L && x <= static_cast<long double>(L_))) {
        throw ValidationError("rank abscissa " + std::to_string(static_cast<double>(x)) + " outside [0, " +
                              std::to_string(L_) + "]");
    }
    if (x == 0.0L) return 0.0L;
    if (x == static_cast<long double>(L_)) return m_;
    if (b_ == 0.0) {
        // the curve is the chord
        return static_cast<long double>(m_) * x / L_;
    }

    // x(t) is strictly increasing for b > 0; bisect until the bracket cannot shrink
    long double lo = t_lo;
    long double hi = 1.0L;
    for (int iter = 0; iter < 200; ++iter) {
        const long double mid = 0.5L * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (at(mid).x < x) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const Point p_lo = at(lo);
    const Point p_hi = at(hi);
    const bool use_lo = std::fabs(p_lo.x - x) <= std::fabs(p_hi.x - x);
    const Point& p = use_lo ? p_lo : p_hi;
    if (std::fabs(p.x - x) > 1e-9L * L_) {
        throw NumericError("Bezier inversion did not converge at x=" + std::to_string(static_cast<double>(x)));
    }
    t_lo = lo;
    return p.y;
}

double cumulative_edges(double pair_count, double edge_count, double weight, double x) {
    return CumulativeEdgeCurve(pair_count, edge_count, weight)(x);
}

ProbabilityProfile ProbabilityProfile::build(std::uint64_t pair_count, double edge_count, double epsilon) {
    check_epsilon(epsilon);
    if (pair_count == 0) {
        throw ValidationError("probability profile needs at least one node pair");
    }
    const double L = static_cast<double>(pair_count);
    if (!(edge_count >= 0.0) || !std::isfinite(edge_count)) {
        throw InfeasibleDensityError("expected edge count must be finite and non-negative");
    }
    if (edge_count > L) {
        throw InfeasibleDensityError("expected edge count " + std::to_string(edge_count) + " exceeds the " +
                                     std::to_string(pair_count) + " available node pairs");
    }

    const double b = epsilon_to_weight(epsilon);
    std::vector<double> P(pair_count);
    if (epsilon == 0.0) {
        // control-polygon limit: 1 on the first m ranks (fractional mass on the next one)
        for (std::uint64_t r = 1; r <= pair_count; ++r) {
            P[r - 1] = std::clamp(edge_count - static_cast<double>(r - 1), 0.0, 1.0);
        }
    } else if (epsilon == 1.0) {
        std::fill(P.begin(), P.end(), edge_count / L);
    } else {
        const CumulativeEdgeCurve curve(L, edge_count, b);
        long double t = 0.0L;
        long double prev = 0.0L;
        for (std::uint64_t r = 1; r <= pair_count; ++r) {
            const long double y = curve.evaluate_from(static_cast<long double>(r), t);
            P[r - 1] = static_cast<double>(std::clamp(y - prev, 0.0L, 1.0L));
            prev = y;
        }
    }
    return ProbabilityProfile(edge_count, epsilon, b, std::move(P));
}

double ProbabilityProfile::expected_edges() const {
    long double sum = 0.0L;
    for (double p : P_) sum += p;
    return static_cast<double>(sum);
}

}
