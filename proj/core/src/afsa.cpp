#include "fishswarm/afsa.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fishswarm::afsa {

namespace {

constexpr double kZeroDistance = 1e-15;

void check_params(const SwarmParams& params) {
    if (params.population < 1) {
        throw std::invalid_argument("SwarmParams: population must be positive");
    }
    if (!(params.visual0 > 0.0) || !(params.step0 > 0.0)) {
        throw std::invalid_argument("SwarmParams: visual0 and step0 must be positive");
    }
    if (params.try_number < 1) {
        throw std::invalid_argument("SwarmParams: try_number must be positive");
    }
    if (!(params.delta > 0.0 && params.delta < 1.0)) {
        throw std::invalid_argument("SwarmParams: delta must lie in (0, 1)");
    }
    if (params.itr_max < 0) {
        throw std::invalid_argument("SwarmParams: itr_max must be non-negative");
    }
}

// step * u toward the target; the fish stays put when the target
// coincides with its position.
Point move_toward(const Point& from, const Point& target, double step,
                  const Bounds& bounds, RngStream& rng) {
    const double dist = euclidean_distance(from, target);
    if (dist < kZeroDistance) {
        return from;
    }
    const double length = step * rng.uniform01();
    Point landed(from.size());
    for (std::size_t d = 0; d < from.size(); ++d) {
        landed[d] = from[d] + length * (target[d] - from[d]) / dist;
    }
    return clamp_to_bounds(landed, bounds);
}

// Indices of the visual neighborhood of fish i (strict Dis < visual).
std::vector<std::size_t> neighbors_of(const SwarmState& state, std::size_t i) {
    std::vector<std::size_t> found;
    const Point& self = state.fish[i].position;
    for (std::size_t j = 0; j < state.fish.size(); ++j) {
        if (j == i) continue;
        if (euclidean_distance(self, state.fish[j].position) < state.visual) {
            found.push_back(j);
        }
    }
    return found;
}

bool crowded(std::size_t neighbor_count, const SwarmParams& params) {
    return static_cast<double>(neighbor_count) / params.population >= params.delta;
}

} // namespace

double Evaluator::operator()(const Point& x) const {
    ++counter_->count;
    const double fitness = objective_->evaluate(x);
    if (fitness < state_->bulletin_fitness) {
        state_->bulletin_fitness = fitness;
        state_->bulletin_position = x;
    }
    return fitness;
}

SwarmState init_swarm(const Objective& objective, const SwarmParams& params,
                      EvalCounter& counter, RngStream& rng) {
    check_params(params);
    SwarmState state;
    state.bulletin_fitness = std::numeric_limits<double>::infinity();
    state.visual = params.visual0;
    state.step = params.step0;
    state.iteration = 0;
    state.fish.resize(static_cast<std::size_t>(params.population));

    Evaluator eval(objective, state, counter);
    for (auto& fish : state.fish) {
        fish.position = random_point_in_bounds(objective.bounds, objective.dimension, rng);
        fish.fitness = eval(fish.position);
    }
    return state;
}

Point prey(const SwarmState& state, std::size_t i, const SwarmParams& params,
           const Evaluator& eval, RngStream& rng) {
    const Point& self = state.fish[i].position;
    const Bounds& bounds = eval.bounds();

    // All try_number candidates are drawn and the fish jumps onto the best
    // strictly improving one. Landing short of the candidate (a step-bounded
    // move toward it) starves the swarm of travel in high dimension: the
    // total path length sum(step0 * mw^k) falls below the typical distance
    // to the optimum, and runs freeze far from it.
    Point best_candidate;
    double best_fitness = state.fish[i].fitness;
    for (int attempt = 0; attempt < params.try_number; ++attempt) {
        Point candidate(self.size());
        for (std::size_t d = 0; d < self.size(); ++d) {
            candidate[d] = self[d] + state.visual * rng.uniform_sym();
        }
        candidate = clamp_to_bounds(candidate, bounds);
        const double fitness = eval(candidate);
        if (fitness < best_fitness) {
            best_fitness = fitness;
            best_candidate = std::move(candidate);
        }
    }
    if (!best_candidate.empty()) {
        return best_candidate;
    }
    return free_move(state, i, bounds, rng);
}

Point free_move(const SwarmState& state, std::size_t i, const Bounds& bounds,
                RngStream& rng) {
    const Point& self = state.fish[i].position;
    const double length = state.step * rng.uniform01();
    const Point direction = random_unit_direction(static_cast<int>(self.size()), rng);
    Point landed(self.size());
    for (std::size_t d = 0; d < self.size(); ++d) {
        landed[d] = self[d] + length * direction[d];
    }
    return clamp_to_bounds(landed, bounds);
}

std::optional<Candidate> swarm_behavior(const SwarmState& state, std::size_t i,
                                        const SwarmParams& params,
                                        const Evaluator& eval, RngStream& rng) {
    const auto neighborhood = neighbors_of(state, i);
    if (neighborhood.empty() || crowded(neighborhood.size(), params)) {
        return std::nullopt;
    }
    const Point& self = state.fish[i].position;
    Point center(self.size(), 0.0);
    for (std::size_t j : neighborhood) {
        const Point& pos = state.fish[j].position;
        for (std::size_t d = 0; d < center.size(); ++d) {
            center[d] += pos[d];
        }
    }
    for (double& coord : center) {
        coord /= static_cast<double>(neighborhood.size());
    }
    const double center_fitness = eval(center);
    if (center_fitness >= state.fish[i].fitness) {
        return std::nullopt;
    }
    return Candidate{move_toward(self, center, state.step, eval.bounds(), rng),
                     center_fitness};
}

std::optional<Candidate> follow_behavior(const SwarmState& state, std::size_t i,
                                         const SwarmParams& params,
                                         const Bounds& bounds, RngStream& rng) {
    const auto neighborhood = neighbors_of(state, i);
    if (neighborhood.empty() || crowded(neighborhood.size(), params)) {
        return std::nullopt;
    }
    std::size_t best = neighborhood.front();
    for (std::size_t j : neighborhood) {
        if (state.fish[j].fitness < state.fish[best].fitness) {
            best = j; // ties keep the lowest index
        }
    }
    const double best_fitness = state.fish[best].fitness;
    if (best_fitness >= state.fish[i].fitness) {
        return std::nullopt;
    }
    const Point& self = state.fish[i].position;
    return Candidate{move_toward(self, state.fish[best].position, state.step, bounds, rng),
                     best_fitness};
}

double step_iteration(SwarmState& state, const Objective& objective,
                      const SwarmParams& params, const MwSchedule& schedule,
                      EvalCounter& counter, RngStream& rng) {
    if (state.iteration >= params.itr_max) {
        throw std::logic_error("step_iteration: run already at itr_max");
    }
    Evaluator eval(objective, state, counter);

    for (std::size_t i = 0; i < state.fish.size(); ++i) {
        Fish& fish = state.fish[i];
        const auto swarm_cand = swarm_behavior(state, i, params, eval, rng);
        const auto follow_cand = follow_behavior(state, i, params, eval.bounds(), rng);

        // Lower target fitness wins; a tie goes to follow. Both behaviors
        // already gate on strict improvement over the fish itself.
        const Candidate* chosen = nullptr;
        if (swarm_cand && swarm_cand->target_fitness < fish.fitness) {
            chosen = &*swarm_cand;
        }
        if (follow_cand && follow_cand->target_fitness < fish.fitness &&
            (!chosen || follow_cand->target_fitness <= chosen->target_fitness)) {
            chosen = &*follow_cand;
        }

        Point next = chosen ? chosen->point : prey(state, i, params, eval, rng);
        fish.fitness = eval(next);
        fish.position = std::move(next);
    }

    const double mw = schedule.mw_at(state.iteration + 1, rng);
    const VisualStep updated = apply_update(state.visual, state.step, mw);
    state.visual = updated.visual;
    state.step = updated.step;
    ++state.iteration;
    return mw;
}

RunRecord run(const Objective& objective, const SwarmParams& params,
              const MwSchedule& schedule, RngStream& rng) {
    check_params(params);
    if (params.itr_max > 0 && schedule.itr_max() != params.itr_max) {
        throw std::invalid_argument("run: schedule and params disagree on itr_max");
    }

    EvalCounter counter;
    SwarmState state = init_swarm(objective, params, counter, rng);

    RunRecord record;
    record.trace.reserve(static_cast<std::size_t>(params.itr_max) + 1);
    record.trace.push_back({0, state.bulletin_fitness, state.visual, state.step, 1.0});

    for (int itr = 1; itr <= params.itr_max; ++itr) {
        const double mw = step_iteration(state, objective, params, schedule, counter, rng);
        record.trace.push_back({itr, state.bulletin_fitness, state.visual, state.step, mw});
    }

    record.final_best = state.bulletin_fitness;
    record.evaluations = counter.count;
    return record;
}

} // namespace fishswarm::afsa
