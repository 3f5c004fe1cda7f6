#include "fishswarm/pso.hpp"

#include <limits>
#include <stdexcept>

namespace fishswarm::pso {

namespace {

struct Particle {
    Point position;
    std::vector<double> velocity;
    Point pbest_position;
    double pbest_fitness;
};

} // namespace

int population_for_dimension(int dimension) {
    return 5 * dimension;
}

double inertia_at(int itr, int itr_max) {
    if (itr_max < 1) {
        throw std::invalid_argument("inertia_at: itr_max must be positive");
    }
    return 0.9 - (0.9 - 0.4) * static_cast<double>(itr) / itr_max;
}

RunRecord run(const Objective& objective, int itr_max, RngStream& rng) {
    if (itr_max < 0) {
        throw std::invalid_argument("pso::run: itr_max must be non-negative");
    }
    const int dim = objective.dimension;
    const int population = population_for_dimension(dim);
    const Bounds& bounds = objective.bounds;
    const double velocity_cap = bounds.range_length() / 2.0;
    constexpr double c1 = 2.0;
    constexpr double c2 = 2.0;

    EvalCounter counter;
    CountedObjective eval(objective, counter);

    std::vector<Particle> swarm(static_cast<std::size_t>(population));
    Point gbest_position;
    double gbest_fitness = std::numeric_limits<double>::infinity();
    for (auto& particle : swarm) {
        particle.position = random_point_in_bounds(bounds, dim, rng);
        particle.velocity.assign(static_cast<std::size_t>(dim), 0.0);
        particle.pbest_position = particle.position;
        particle.pbest_fitness = eval(particle.position);
        if (particle.pbest_fitness < gbest_fitness) {
            gbest_fitness = particle.pbest_fitness;
            gbest_position = particle.position;
        }
    }

    RunRecord record;
    record.trace.reserve(static_cast<std::size_t>(itr_max) + 1);
    record.trace.push_back({0, gbest_fitness, 0.0, 0.0, 1.0});

    for (int itr = 0; itr < itr_max; ++itr) {
        const double w = inertia_at(itr, itr_max);
        for (auto& particle : swarm) {
            for (int d = 0; d < dim; ++d) {
                const auto dd = static_cast<std::size_t>(d);
                const double r1 = rng.uniform01();
                const double r2 = rng.uniform01();
                double v = w * particle.velocity[dd] +
                           c1 * r1 * (particle.pbest_position[dd] - particle.position[dd]) +
                           c2 * r2 * (gbest_position[dd] - particle.position[dd]);
                if (v > velocity_cap) v = velocity_cap;
                if (v < -velocity_cap) v = -velocity_cap;
                particle.velocity[dd] = v;
                particle.position[dd] = bounds.clamp(particle.position[dd] + v);
            }
            const double fitness = eval(particle.position);
            if (fitness < particle.pbest_fitness) {
                particle.pbest_fitness = fitness;
                particle.pbest_position = particle.position;
            }
            if (fitness < gbest_fitness) {
                gbest_fitness = fitness;
                gbest_position = particle.position;
            }
        }
        record.trace.push_back({itr + 1, gbest_fitness, 0.0, 0.0, w});
    }

    record.final_best = gbest_fitness;
    record.evaluations = counter.count;
    return record;
}

} // namespace fishswarm::pso
