#ifndef FISHSWARM_HARNESS_HPP
#define FISHSWARM_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fishswarm/afsa.hpp"
#include "fishswarm/objectives.hpp"
#include "fishswarm/pso.hpp"
#include "fishswarm/record.hpp"
#include "fishswarm/svg.hpp"

namespace fishswarm::harness {

enum class Algorithm { StdAfsa, Cwafa, Rwafa, Ldwafsa, Liwafsa, Gpso };

/// All six, in comparison-table order.
const std::vector<Algorithm>& all_algorithms();

Algorithm parse_algorithm(const std::string& name);
std::string algorithm_name(Algorithm algorithm);

/// Tuned constant weight and acceptable weight range per registry function
/// for the 1000-iteration protocol; used as the schedule defaults in
/// comparisons.
struct MwDefaults {
    double best_mw;
    double mw_min;
    double mw_max;
};
MwDefaults recommended_mw(const std::string& function_name);

/// Swarm geometry defaults: visual starts at 40% of the range length, step
/// at 25%.
double default_visual0(const Objective& objective);
double default_step0(const Objective& objective);

struct ExperimentConfig {
    std::string function = "sphere";
    int dimension = 30;
    Algorithm algorithm = Algorithm::Cwafa;
    std::optional<double> mw;     // constant-weight runs
    std::optional<double> mw_min; // ranged schedules
    std::optional<double> mw_max;
    int iterations = 1000;
    int population = 30; // AFSA only; PSO derives 5 * D
    int runs = 50;
    std::uint64_t master_seed = 1;
    std::string output_dir = ".";

    // Swarm knobs, fixed by the experimental protocol; visual0/step0
    // default to 40%/25% of the range when unset.
    int try_number = 10;
    double delta = 0.5;
    std::optional<double> visual0;
    std::optional<double> step0;

    // First run index; run k draws from stream (master_seed, base + k),
    // which makes an R-run experiment splittable into R one-run ones.
    unsigned run_index_base = 0;
};

/// Cross-run statistics over final best values.
struct Summary {
    double best;
    double mean;
    double std_dev; // sample (n-1); 0 for a single run
    double solved_fraction;
};

/// min / mean / sample std-dev / fraction below acceptance. Inputs are
/// re-ordered internally before accumulating, so the result is bitwise
/// permutation-invariant. Empty input raises std::invalid_argument.
Summary summarize(const std::vector<double>& finals, double acceptance);

/// Median of an unsorted sequence (midpoint average for even sizes).
double median(std::vector<double> values);

/// Per-iteration median of best_fitness across runs.
std::vector<double> median_trace(const std::vector<RunRecord>& records);

/// Throws std::invalid_argument on any inconsistency (unknown function,
/// schedule parameters not matching the algorithm, non-positive counts).
void validate(const ExperimentConfig& config);

/// The schedule an algorithm/config pair implies. StdAfsa pins mw to 1.0.
MwSchedule schedule_for(const ExperimentConfig& config);

struct ExperimentResult {
    std::vector<RunRecord> records; // ordered by run_index
    Summary summary;
};

/// cfg.runs independent runs on streams (master_seed, base + k). Records
/// come back ordered by run index regardless of execution order; runs may
/// execute in parallel.
ExperimentResult run_experiment(const ExperimentConfig& config);

struct SweepRow {
    double mw;
    Summary summary;
};

struct SweepResult {
    std::vector<SweepRow> rows; // sorted by mw
    std::size_t best_index;    // argmin mean (ties to the lower mw)
};

/// One constant-weight experiment per grid value. base.algorithm must be
/// Cwafa and the grid non-empty.
SweepResult mw_sweep(const ExperimentConfig& base, const std::vector<double>& grid);

/// Inclusive [start, stop] with the given stride.
std::vector<double> make_grid(double start, double stop, double step);

/// One summary line of a comparison table.
struct SummaryRow {
    std::string function;
    int dimension;
    Algorithm algorithm;
    int runs;
    Summary summary;
};

/// Median convergence traces of all algorithms on one (function, dimension)
/// cell, ready for plotting.
struct CompareCell {
    std::string function;
    int dimension;
    std::vector<TraceSeries> traces;
};

struct CompareResult {
    std::vector<SummaryRow> rows;
    std::vector<CompareCell> cells;
};

/// Full grid of functions x dimensions x all six algorithms. Schedule
/// parameters come from recommended_mw(); every cell config is validated
/// before any run starts.
CompareResult compare(const std::vector<std::string>& functions,
                      const std::vector<int>& dimensions, int iterations,
                      int runs, std::uint64_t master_seed);

} // namespace fishswarm::harness

#endif // FISHSWARM_HARNESS_HPP
