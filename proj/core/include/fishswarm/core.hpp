#ifndef FISHSWARM_CORE_HPP
#define FISHSWARM_CORE_HPP

#include <vector>

namespace fishswarm {

/// Position in D-dimensional search space.
using Point = std::vector<double>;

/// Uniform per-dimension search interval [lower, upper], lower < upper.
struct Bounds {
    double lower;
    double upper;

    Bounds(double lower_in, double upper_in);

    double range_length() const { return upper - lower; }
    double clamp(double v) const;
    bool contains(const Point& p) const;
};

/// Objective-evaluation counter; one increment per evaluation, candidate
/// and center evaluations included.
struct EvalCounter {
    unsigned long long count = 0;
};

/// L2 distance between two points of equal dimension.
double euclidean_distance(const Point& a, const Point& b);

/// Projects every coordinate into [lower, upper]; interior points come
/// back unchanged.
Point clamp_to_bounds(const Point& p, const Bounds& b);

} // namespace fishswarm

#endif // FISHSWARM_CORE_HPP
