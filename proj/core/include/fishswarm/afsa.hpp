#ifndef FISHSWARM_AFSA_HPP
#define FISHSWARM_AFSA_HPP

#include <cstddef>
#include <optional>

#include "fishswarm/objectives.hpp"
#include "fishswarm/random.hpp"
#include "fishswarm/record.hpp"
#include "fishswarm/schedules.hpp"

namespace fishswarm::afsa {

struct Fish {
    Point position;
    double fitness;
};

struct SwarmParams {
    int population;
    double visual0;
    double step0;
    int try_number;
    double delta; // crowd factor, 0 < delta < 1
    int itr_max;
};

/// Whole-swarm state. The bulletin is the best (position, fitness) pair
/// over every evaluation observed this run, candidates included.
struct SwarmState {
    std::vector<Fish> fish;
    Point bulletin_position;
    double bulletin_fitness;
    double visual;
    double step;
    int iteration;
};

/// Evaluation funnel for a run: counts each call and folds every observed
/// value into the state's bulletin. All engine evaluations go through here.
class Evaluator {
public:
    Evaluator(const Objective& objective, SwarmState& state, EvalCounter& counter)
        : objective_(&objective), state_(&state), counter_(&counter) {}

    double operator()(const Point& x) const;

    const Objective& objective() const { return *objective_; }
    const Bounds& bounds() const { return objective_->bounds; }

private:
    const Objective* objective_;
    SwarmState* state_;
    EvalCounter* counter_;
};

/// A proposed move plus the fitness of the target it steers toward (the
/// neighborhood center for swarm, the best neighbor for follow).
struct Candidate {
    Point point;
    double target_fitness;
};

/// Fish placed uniformly at random, fitness evaluated (population counter
/// ticks), bulletin at the best initial fish, visual/step at their initial
/// values, iteration 0.
SwarmState init_swarm(const Objective& objective, const SwarmParams& params,
                      EvalCounter& counter, RngStream& rng);

/// Prey: try_number candidates drawn per-dimension within +-visual of the
/// fish; the fish jumps onto the best strictly improving one. If no
/// candidate improves, the fish free-moves instead.
Point prey(const SwarmState& state, std::size_t i, const SwarmParams& params,
           const Evaluator& eval, RngStream& rng);

/// Random displacement of length step*u along a uniformly random direction.
Point free_move(const SwarmState& state, std::size_t i, const Bounds& bounds,
                RngStream& rng);

/// Move toward the mean of the visual neighborhood, gated on the
/// neighborhood being uncrowded (n_f / population < delta) and its center
/// strictly improving on the fish. The center costs one evaluation, taken
/// only after the crowding gate passes.
std::optional<Candidate> swarm_behavior(const SwarmState& state, std::size_t i,
                                        const SwarmParams& params,
                                        const Evaluator& eval, RngStream& rng);

/// Move toward the best fish in the visual neighborhood (ties broken by
/// lowest index), gated like swarm_behavior. Uses cached neighbor fitness,
/// so it costs no evaluations.
std::optional<Candidate> follow_behavior(const SwarmState& state, std::size_t i,
                                         const SwarmParams& params,
                                         const Bounds& bounds, RngStream& rng);

/// One full iteration: every fish, in index order, arbitrates between its
/// swarm and follow candidates (lower target fitness wins, tie goes to
/// follow) and falls back to prey; its landed position is evaluated and the
/// bulletin updated. Afterwards the movement weight for the new iteration
/// is applied to visual and step. Returns the weight that was applied.
double step_iteration(SwarmState& state, const Objective& objective,
                      const SwarmParams& params, const MwSchedule& schedule,
                      EvalCounter& counter, RngStream& rng);

/// itr_max iterations from a fresh swarm; yields the bulletin trace.
RunRecord run(const Objective& objective, const SwarmParams& params,
              const MwSchedule& schedule, RngStream& rng);

} // namespace fishswarm::afsa

#endif // FISHSWARM_AFSA_HPP
