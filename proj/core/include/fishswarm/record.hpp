#ifndef FISHSWARM_RECORD_HPP
#define FISHSWARM_RECORD_HPP

#include <vector>

namespace fishswarm {

/// One row of a convergence trace. `mw` is the weight applied during that
/// iteration (1.0 on the initial row, where nothing has been applied yet;
/// the inertia weight for PSO runs, whose visual/step columns are 0).
struct TraceEntry {
    int iteration;
    double best_fitness;
    double visual;
    double step;
    double mw;
};

/// Outcome of a single optimization run: the per-iteration best-so-far
/// trace (itr_max + 1 entries, iteration 0 included), the final best value
/// and the total number of objective evaluations spent.
struct RunRecord {
    unsigned run_index = 0;
    std::vector<TraceEntry> trace;
    double final_best = 0.0;
    unsigned long long evaluations = 0;
};

} // namespace fishswarm

#endif // FISHSWARM_RECORD_HPP
