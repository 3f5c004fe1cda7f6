#include "fishswarm/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fishswarm {

namespace {

// splitmix64 finalizer (Vigna's public-domain mixer).
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t run_index)
    : gen_(mix64(master_seed ^ mix64(run_index))) {}

double RngStream::uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double RngStream::uniform_sym() {
    return 2.0 * uniform01() - 1.0;
}

double RngStream::uniform(double lo, double hi) {
    return lo + uniform01() * (hi - lo);
}

double RngStream::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = 1.0 - uniform01(); // (0, 1], keeps the log finite
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

Point random_point_in_bounds(const Bounds& b, int dimension, RngStream& rng) {
    if (dimension <= 0) {
        throw std::invalid_argument("random_point_in_bounds: dimension must be positive");
    }
    Point p(static_cast<std::size_t>(dimension));
    for (auto& coord : p) {
        coord = rng.uniform(b.lower, b.upper);
    }
    return p;
}

Point random_unit_direction(int dimension, RngStream& rng) {
    if (dimension <= 0) {
        throw std::invalid_argument("random_unit_direction: dimension must be positive");
    }
    Point dir(static_cast<std::size_t>(dimension));
    double norm = 0.0;
    do {
        norm = 0.0;
        for (auto& coord : dir) {
            coord = rng.gaussian();
            norm += coord * coord;
        }
        norm = std::sqrt(norm);
    } while (norm < 1e-12); // astronomically rare
    for (auto& coord : dir) {
        coord /= norm;
    }
    return dir;
}

} // namespace fishswarm
