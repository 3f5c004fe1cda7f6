#ifndef FISHSWARM_RANDOM_HPP
#define FISHSWARM_RANDOM_HPP

#include <cstdint>
#include <random>

#include "fishswarm/core.hpp"

namespace fishswarm {

/// Deterministic per-run random stream.
///
/// Two streams built from the same (master_seed, run_index) produce
/// identical draw sequences. The run index is folded into the master seed
/// through two rounds of the splitmix64 finalizer, so adjacent run indices
/// yield unrelated streams. Doubles are built from the raw 64-bit generator
/// output (53 mantissa bits), never from std distribution objects, keeping
/// sequences identical across standard libraries.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t run_index);

    /// Uniform on [0, 1).
    double uniform01();
    /// Uniform on [-1, 1).
    double uniform_sym();
    /// Uniform on [lo, hi).
    double uniform(double lo, double hi);
    /// Standard normal draw (Box-Muller over uniform01).
    double gaussian();

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Point with each coordinate drawn uniformly from [lower, upper).
Point random_point_in_bounds(const Bounds& b, int dimension, RngStream& rng);

/// Uniformly random direction on the unit sphere.
Point random_unit_direction(int dimension, RngStream& rng);

} // namespace fishswarm

#endif // FISHSWARM_RANDOM_HPP
