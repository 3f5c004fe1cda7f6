#include "fishswarm/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace fishswarm::harness {

const std::vector<Algorithm>& all_algorithms() {
    static const std::vector<Algorithm> order = {
        Algorithm::StdAfsa, Algorithm::Gpso,    Algorithm::Cwafa,
        Algorithm::Rwafa,   Algorithm::Ldwafsa, Algorithm::Liwafsa,
    };
    return order;
}

Algorithm parse_algorithm(const std::string& name) {
    if (name == "std_afsa") return Algorithm::StdAfsa;
    if (name == "cwafa") return Algorithm::Cwafa;
    if (name == "rwafa") return Algorithm::Rwafa;
    if (name == "ldwafsa") return Algorithm::Ldwafsa;
    if (name == "liwafsa") return Algorithm::Liwafsa;
    if (name == "gpso") return Algorithm::Gpso;
    throw std::invalid_argument(
        "unknown algorithm '" + name +
        "'; valid names: std_afsa, cwafa, rwafa, ldwafsa, liwafsa, gpso");
}

std::string algorithm_name(Algorithm algorithm) {
    switch (algorithm) {
    case Algorithm::StdAfsa: return "std_afsa";
    case Algorithm::Cwafa: return "cwafa";
    case Algorithm::Rwafa: return "rwafa";
    case Algorithm::Ldwafsa: return "ldwafsa";
    case Algorithm::Liwafsa: return "liwafsa";
    case Algorithm::Gpso: return "gpso";
    }
    throw std::logic_error("algorithm_name: unreachable");
}

MwDefaults recommended_mw(const std::string& function_name) {
    if (function_name == "sphere") return {0.96, 0.95, 0.99};
    if (function_name == "rosenbrock") return {0.96, 0.93, 0.99};
    if (function_name == "ackley" || function_name == "ackly") return {0.96, 0.95, 0.99};
    if (function_name == "griewank") return {0.98, 0.94, 0.99};
    throw std::invalid_argument("recommended_mw: unknown function '" + function_name + "'");
}

double default_visual0(const Objective& objective) {
    return 0.40 * objective.bounds.range_length();
}

double default_step0(const Objective& objective) {
    return 0.25 * objective.bounds.range_length();
}

Summary summarize(const std::vector<double>& finals, double acceptance) {
    if (finals.empty()) {
        throw std::invalid_argument("summarize: no run results");
    }
    // Sorting first makes the accumulation order, and therefore the result
    // bits, independent of run ordering.
    std::vector<double> sorted = finals;
    std::sort(sorted.begin(), sorted.end());

    const auto n = static_cast<double>(sorted.size());
    double sum = 0.0;
    for (double v : sorted) sum += v;
    const double mean = sum / n;

    double sum_sq_dev = 0.0;
    for (double v : sorted) {
        const double dev = v - mean;
        sum_sq_dev += dev * dev;
    }
    const double std_dev = sorted.size() > 1 ? std::sqrt(sum_sq_dev / (n - 1.0)) : 0.0;

    const auto solved = static_cast<double>(
        std::count_if(sorted.begin(), sorted.end(),
                      [acceptance](double v) { return v < acceptance; }));

    return Summary{sorted.front(), mean, std_dev, solved / n};
}

double median(std::vector<double> values) {
    if (values.empty()) {
        throw std::invalid_argument("median: empty input");
    }
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    if (values.size() % 2 == 1) {
        return values[mid];
    }
    return 0.5 * (values[mid - 1] + values[mid]);
}

std::vector<double> median_trace(const std::vector<RunRecord>& records) {
    if (records.empty()) {
        throw std::invalid_argument("median_trace: no records");
    }
    const std::size_t length = records.front().trace.size();
    std::vector<double> result(length);
    std::vector<double> column(records.size());
    for (std::size_t t = 0; t < length; ++t) {
        for (std::size_t r = 0; r < records.size(); ++r) {
            column[r] = records[r].trace.at(t).best_fitness;
        }
        result[t] = median(column);
    }
    return result;
}

namespace {

bool wants_constant_mw(Algorithm a) { return a == Algorithm::Cwafa; }

bool wants_mw_range(Algorithm a) {
    return a == Algorithm::Rwafa || a == Algorithm::Ldwafsa || a == Algorithm::Liwafsa;
}

} // namespace

void validate(const ExperimentConfig& config) {
    const Objective objective = lookup_objective(config.function, config.dimension);
    if (config.runs < 1) {
        throw std::invalid_argument("config: runs must be >= 1");
    }
    if (config.iterations < 1) {
        throw std::invalid_argument("config: iterations must be >= 1");
    }
    if (config.algorithm != Algorithm::Gpso) {
        if (config.population < 1) {
            throw std::invalid_argument("config: population must be >= 1");
        }
        if (config.try_number < 1) {
            throw std::invalid_argument("config: try_number must be >= 1");
        }
        if (!(config.delta > 0.0 && config.delta < 1.0)) {
            throw std::invalid_argument("config: delta must lie in (0, 1)");
        }
        if (config.visual0 && !(*config.visual0 > 0.0)) {
            throw std::invalid_argument("config: visual0 must be positive");
        }
        if (config.step0 && !(*config.step0 > 0.0)) {
            throw std::invalid_argument("config: step0 must be positive");
        }
    }
    if (wants_constant_mw(config.algorithm)) {
        if (!config.mw) {
            throw std::invalid_argument("config: cwafa requires mw");
        }
        if (config.mw_min || config.mw_max) {
            throw std::invalid_argument("config: cwafa takes mw, not mw_min/mw_max");
        }
    } else if (wants_mw_range(config.algorithm)) {
        if (!config.mw_min || !config.mw_max) {
            throw std::invalid_argument("config: " + algorithm_name(config.algorithm) +
                                        " requires mw_min and mw_max");
        }
        if (config.mw) {
            throw std::invalid_argument("config: " + algorithm_name(config.algorithm) +
                                        " takes mw_min/mw_max, not mw");
        }
        if (!(*config.mw_min <= *config.mw_max)) {
            throw std::invalid_argument("config: mw_min must not exceed mw_max");
        }
    } else {
        if (config.mw || config.mw_min || config.mw_max) {
            throw std::invalid_argument("config: " + algorithm_name(config.algorithm) +
                                        " takes no movement-weight parameters");
        }
    }
    // Construction checks the numeric invariants (positivity etc.).
    if (config.algorithm != Algorithm::Gpso) {
        (void)schedule_for(config);
    }
}

MwSchedule schedule_for(const ExperimentConfig& config) {
    switch (config.algorithm) {
    case Algorithm::StdAfsa:
        return MwSchedule::constant(1.0, config.iterations);
    case Algorithm::Cwafa:
        return MwSchedule::constant(config.mw.value(), config.iterations);
    case Algorithm::Rwafa:
        return MwSchedule::random(config.mw_min.value(), config.mw_max.value(),
                                  config.iterations);
    case Algorithm::Ldwafsa:
        return MwSchedule::linear_decreasing(config.mw_min.value(), config.mw_max.value(),
                                             config.iterations);
    case Algorithm::Liwafsa:
        return MwSchedule::linear_increasing(config.mw_min.value(), config.mw_max.value(),
                                             config.iterations);
    case Algorithm::Gpso:
        throw std::invalid_argument("schedule_for: gpso has no movement-weight schedule");
    }
    throw std::logic_error("schedule_for: unreachable");
}

namespace {

RunRecord execute_one(const ExperimentConfig& config, const Objective& objective,
                      unsigned run_index) {
    RngStream rng(config.master_seed, run_index);
    RunRecord record;
    if (config.algorithm == Algorithm::Gpso) {
        record = pso::run(objective, config.iterations, rng);
    } else {
        afsa::SwarmParams params{
            config.population,
            config.visual0.value_or(default_visual0(objective)),
            config.step0.value_or(default_step0(objective)),
            config.try_number,
            config.delta,
            config.iterations,
        };
        record = afsa::run(objective, params, schedule_for(config), rng);
    }
    record.run_index = run_index;
    return record;
}

} // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
    validate(config);
    const Objective objective = lookup_objective(config.function, config.dimension);

    std::vector<RunRecord> records(static_cast<std::size_t>(config.runs));
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers = std::min<unsigned>(hw, static_cast<unsigned>(config.runs));

    if (workers <= 1) {
        for (int k = 0; k < config.runs; ++k) {
            records[static_cast<std::size_t>(k)] =
                execute_one(config, objective, config.run_index_base + static_cast<unsigned>(k));
        }
    } else {
        std::atomic<int> next{0};
        auto worker = [&]() {
            for (int k = next.fetch_add(1); k < config.runs; k = next.fetch_add(1)) {
                records[static_cast<std::size_t>(k)] =
                    execute_one(config, objective,
                                config.run_index_base + static_cast<unsigned>(k));
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::vector<double> finals(records.size());
    std::transform(records.begin(), records.end(), finals.begin(),
                   [](const RunRecord& r) { return r.final_best; });
    return ExperimentResult{std::move(records), summarize(finals, objective.acceptance)};
}

SweepResult mw_sweep(const ExperimentConfig& base, const std::vector<double>& grid) {
    if (base.algorithm != Algorithm::Cwafa) {
        throw std::invalid_argument("mw_sweep: base algorithm must be cwafa");
    }
    if (grid.empty()) {
        throw std::invalid_argument("mw_sweep: empty grid");
    }
    std::vector<double> sorted_grid = grid;
    std::sort(sorted_grid.begin(), sorted_grid.end());

    SweepResult result;
    result.rows.reserve(sorted_grid.size());
    for (double mw : sorted_grid) {
        ExperimentConfig config = base;
        config.mw = mw;
        result.rows.push_back(SweepRow{mw, run_experiment(config).summary});
    }
    result.best_index = 0;
    for (std::size_t i = 1; i < result.rows.size(); ++i) {
        if (result.rows[i].summary.mean < result.rows[result.best_index].summary.mean) {
            result.best_index = i;
        }
    }
    return result;
}

std::vector<double> make_grid(double start, double stop, double step) {
    if (!(step > 0.0)) {
        throw std::invalid_argument("make_grid: step must be positive");
    }
    if (start > stop) {
        throw std::invalid_argument("make_grid: start must not exceed stop");
    }
    std::vector<double> grid;
    const double slack = step / 2.0;
    for (int k = 0;; ++k) {
        const double value = start + step * k;
        if (value > stop + slack) break;
        grid.push_back(std::min(value, stop));
    }
    return grid;
}

CompareResult compare(const std::vector<std::string>& functions,
                      const std::vector<int>& dimensions, int iterations, int runs,
                      std::uint64_t master_seed) {
    // Build and validate every cell before running any of them.
    std::vector<ExperimentConfig> cell_configs;
    for (const auto& function : functions) {
        for (int dimension : dimensions) {
            const MwDefaults defaults = recommended_mw(function);
            for (Algorithm algorithm : all_algorithms()) {
                ExperimentConfig config;
                config.function = function;
                config.dimension = dimension;
                config.algorithm = algorithm;
                config.iterations = iterations;
                config.runs = runs;
                config.master_seed = master_seed;
                if (wants_constant_mw(algorithm)) {
                    config.mw = defaults.best_mw;
                } else if (wants_mw_range(algorithm)) {
                    config.mw_min = defaults.mw_min;
                    config.mw_max = defaults.mw_max;
                }
                validate(config);
                cell_configs.push_back(std::move(config));
            }
        }
    }

    CompareResult result;
    std::size_t cell = 0;
    for (const auto& function : functions) {
        for (int dimension : dimensions) {
            CompareCell traces{function, dimension, {}};
            for (Algorithm algorithm : all_algorithms()) {
                const ExperimentConfig& config = cell_configs[cell++];
                ExperimentResult experiment = run_experiment(config);
                result.rows.push_back(SummaryRow{function, dimension, algorithm,
                                                 config.runs, experiment.summary});
                traces.traces.push_back(
                    TraceSeries{algorithm_name(algorithm), median_trace(experiment.records)});
            }
            result.cells.push_back(std::move(traces));
        }
    }
    return result;
}

} // namespace fishswarm::harness
