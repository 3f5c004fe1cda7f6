#include "fishswarm/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fishswarm {

Bounds::Bounds(double lower_in, double upper_in) : lower(lower_in), upper(upper_in) {
    if (!(lower < upper)) {
        throw std::invalid_argument("Bounds: lower must be strictly below upper");
    }
}

double Bounds::clamp(double v) const {
    return std::min(upper, std::max(lower, v));
}

bool Bounds::contains(const Point& p) const {
    return std::all_of(p.begin(), p.end(),
                       [this](double v) { return v >= lower && v <= upper; });
}

double euclidean_distance(const Point& a, const Point& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("euclidean_distance: dimension mismatch");
    }
    double sum_sq = 0.0;
    for (std::size_t d = 0; d < a.size(); ++d) {
        const double diff = a[d] - b[d];
        sum_sq += diff * diff;
    }
    return std::sqrt(sum_sq);
}

Point clamp_to_bounds(const Point& p, const Bounds& b) {
    Point out(p.size());
    for (std::size_t d = 0; d < p.size(); ++d) {
        out[d] = b.clamp(p[d]);
    }
    return out;
}

} // namespace fishswarm
