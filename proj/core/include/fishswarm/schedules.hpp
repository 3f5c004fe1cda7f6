#ifndef FISHSWARM_SCHEDULES_HPP
#define FISHSWARM_SCHEDULES_HPP

#include <string>

#include "fishswarm/random.hpp"

namespace fishswarm {

/// Movement-weight policy: the per-iteration multiplier applied to the
/// swarm's visual and step.
///
/// Variants: a constant weight, a weight falling linearly from mw_max to
/// mw_min over the run, the mirror-image rising weight, and a uniform
/// random draw from [mw_min, mw_max) each iteration. Weights above 1 are
/// legal for the constant variant (they grow visual/step instead of
/// shrinking them).
class MwSchedule {
public:
    enum class Kind { Constant, LinearDecreasing, LinearIncreasing, Random };

    static MwSchedule constant(double mw, int itr_max);
    static MwSchedule linear_decreasing(double mw_min, double mw_max, int itr_max);
    static MwSchedule linear_increasing(double mw_min, double mw_max, int itr_max);
    static MwSchedule random(double mw_min, double mw_max, int itr_max);

    /// Parses the spec string grammar: "constant:0.96", "lindec:0.95:0.99",
    /// "lininc:0.95:0.99" or "random:0.95:0.99".
    static MwSchedule parse(const std::string& spec, int itr_max);

    /// Weight at iteration itr, 0 <= itr <= itr_max. Only the Random
    /// variant consumes rng draws.
    double mw_at(int itr, RngStream& rng) const;

    Kind kind() const { return kind_; }
    int itr_max() const { return itr_max_; }
    double mw() const { return mw_; }
    double mw_min() const { return mw_min_; }
    double mw_max() const { return mw_max_; }

    /// Round-trips through parse().
    std::string spec_string() const;

private:
    MwSchedule(Kind kind, double mw, double mw_min, double mw_max, int itr_max);

    Kind kind_;
    double mw_;
    double mw_min_;
    double mw_max_;
    int itr_max_;
};

struct VisualStep {
    double visual;
    double step;
};

/// One application of the multiplicative visual/step update. Inputs must be
/// strictly positive; a product that underflows to zero is pinned to the
/// smallest positive double so the positivity contract survives arbitrarily
/// long runs.
VisualStep apply_update(double visual, double step, double mw);

} // namespace fishswarm

#endif // FISHSWARM_SCHEDULES_HPP
