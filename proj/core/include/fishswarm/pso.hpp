#ifndef FISHSWARM_PSO_HPP
#define FISHSWARM_PSO_HPP

#include "fishswarm/objectives.hpp"
#include "fishswarm/random.hpp"
#include "fishswarm/record.hpp"

namespace fishswarm::pso {

/// Population scales with problem size: 5 * D particles.
int population_for_dimension(int dimension);

/// Inertia weight, linearly decreasing from 0.9 at itr 0 to 0.4 at itr_max.
double inertia_at(int itr, int itr_max);

/// Global-best PSO baseline: c1 = c2 = 2, per-dimension velocity clamp at
/// half the range length, zero initial velocities, positions clamped to
/// bounds after each move. Returns the monotone gbest trace.
RunRecord run(const Objective& objective, int itr_max, RngStream& rng);

} // namespace fishswarm::pso

#endif // FISHSWARM_PSO_HPP
