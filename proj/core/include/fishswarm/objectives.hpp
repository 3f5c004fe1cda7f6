#ifndef FISHSWARM_OBJECTIVES_HPP
#define FISHSWARM_OBJECTIVES_HPP

#include <functional>
#include <string>

#include "fishswarm/core.hpp"

namespace fishswarm {

/// A named minimization target with its search box and the fitness value
/// below which a run counts as solved.
struct Objective {
    std::string name;
    int dimension;
    Bounds bounds;
    double acceptance;
    std::function<double(const Point&)> evaluate_fn;

    double evaluate(const Point& x) const { return evaluate_fn(x); }
};

// The four registry functions. All are minimized with optimum value 0;
// sphere/ackley/griewank at the origin, rosenbrock at all-ones.
double sphere(const Point& x);
double rosenbrock(const Point& x); // requires dimension >= 2
double ackley(const Point& x);
double griewank(const Point& x);

/// Builds the named objective at the given dimension with its standard
/// bounds and acceptance threshold wired in. Accepts "ackly" as an alias
/// of "ackley". Unknown names raise std::invalid_argument listing the
/// valid ones.
Objective lookup_objective(const std::string& name, int dimension);

/// Binds an objective to a counter; each call costs exactly one tick.
class CountedObjective {
public:
    CountedObjective(const Objective& objective, EvalCounter& counter)
        : objective_(&objective), counter_(&counter) {}

    double operator()(const Point& x) const {
        ++counter_->count;
        return objective_->evaluate(x);
    }

    const Objective& objective() const { return *objective_; }

private:
    const Objective* objective_;
    EvalCounter* counter_;
};

} // namespace fishswarm

#endif // FISHSWARM_OBJECTIVES_HPP
