// Acceptance suite: end-to-end checks of the optimizer stack at desk scale.
// Each criterion prints one PASS/FAIL line; the process exits non-zero if
// any fail.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fishswarm/afsa.hpp"
#include "fishswarm/csv.hpp"
#include "fishswarm/harness.hpp"
#include "fishswarm/objectives.hpp"
#include "fishswarm/pso.hpp"
#include "fishswarm/schedules.hpp"

using namespace fishswarm;
using namespace fishswarm::harness;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name;
    if (!detail.empty()) {
        std::cout << " - " << detail;
    }
    std::cout << std::endl;
    if (!ok) ++failures;
}

std::string sci(double v) {
    std::ostringstream out;
    out.precision(4);
    out << std::scientific << v;
    return out.str();
}

constexpr std::uint64_t kSeed = 20240811;

ExperimentConfig afsa_config(const std::string& function, int dimension,
                             Algorithm algorithm, int runs) {
    ExperimentConfig config;
    config.function = function;
    config.dimension = dimension;
    config.algorithm = algorithm;
    config.iterations = 1000;
    config.population = 30;
    config.runs = runs;
    config.master_seed = kSeed;
    return config;
}

std::vector<double> finals_of(const ExperimentResult& result) {
    std::vector<double> finals(result.records.size());
    std::transform(result.records.begin(), result.records.end(), finals.begin(),
                   [](const RunRecord& r) { return r.final_best; });
    return finals;
}

int count_below(const std::vector<double>& xs, double threshold) {
    return static_cast<int>(
        std::count_if(xs.begin(), xs.end(),
                      [threshold](double v) { return v < threshold; }));
}

// ---- criteria 1-5: threshold and ordering reproduction ----

ExperimentResult run_cwafa(const std::string& function, int dimension, double mw,
                           int runs) {
    ExperimentConfig config = afsa_config(function, dimension, Algorithm::Cwafa, runs);
    config.mw = mw;
    return run_experiment(config);
}

void criterion_1_sphere_threshold(const ExperimentResult& cwafa_sphere) {
    const auto finals = finals_of(cwafa_sphere);
    const int solved = count_below(finals, 0.01);
    const double med = median(finals);
    report("1 cwafa sphere 30D threshold", solved >= 18 && med <= 1e-8,
           std::to_string(solved) + "/20 below 0.01, median " + sci(med));
}

void criterion_2_griewank_threshold() {
    const auto result = run_cwafa("griewank", 10, 0.98, 20);
    const int solved = count_below(finals_of(result), 0.01);
    report("2 cwafa griewank 10D threshold", solved >= 18,
           std::to_string(solved) + "/20 below 0.01");
}

void criterion_3_rosenbrock_threshold() {
    const auto result = run_cwafa("rosenbrock", 30, 0.96, 20);
    const double med = median(finals_of(result));
    report("3 cwafa rosenbrock 30D threshold", med < 100.0, "median " + sci(med));
}

void criterion_4_gpso_threshold() {
    ExperimentConfig config = afsa_config("sphere", 30, Algorithm::Gpso, 20);
    const auto result = run_experiment(config);
    const int solved = count_below(finals_of(result), 0.01);
    report("4 gpso sphere 30D threshold", solved >= 15,
           std::to_string(solved) + "/20 below 0.01");
}

void criterion_5_dominance(const ExperimentResult& cwafa_sphere) {
    const auto std_result =
        run_experiment(afsa_config("sphere", 30, Algorithm::StdAfsa, 20));
    const double std_median = median(finals_of(std_result));
    const double cwafa_median = median(finals_of(cwafa_sphere));

    const MwDefaults defaults = recommended_mw("sphere");
    double ranged_medians[3];
    const Algorithm ranged[] = {Algorithm::Rwafa, Algorithm::Ldwafsa,
                                Algorithm::Liwafsa};
    for (int i = 0; i < 3; ++i) {
        ExperimentConfig config = afsa_config("sphere", 30, ranged[i], 20);
        config.mw_min = defaults.mw_min;
        config.mw_max = defaults.mw_max;
        ranged_medians[i] = median(finals_of(run_experiment(config)));
    }

    const bool gap_ok = cwafa_median <= 1e-6 * std_median;
    const bool ranged_ok = ranged_medians[0] < 0.01 && ranged_medians[1] < 0.01 &&
                           ranged_medians[2] < 0.01;
    const bool std_ok = std_median > 1.0;
    report("5 sphere 30D dominance ordering", gap_ok && ranged_ok && std_ok,
           "medians: std " + sci(std_median) + ", cwafa " + sci(cwafa_median) +
               ", rwafa " + sci(ranged_medians[0]) + ", ldwafsa " +
               sci(ranged_medians[1]) + ", liwafsa " + sci(ranged_medians[2]));
}

// ---- criterion 6: sweep band ----

void criterion_6_sweep_band() {
    ExperimentConfig base = afsa_config("sphere", 30, Algorithm::Cwafa, 10);
    base.mw = 0.96; // placeholder; the sweep overrides it per grid point
    const auto result = mw_sweep(base, make_grid(0.90, 1.00, 0.01));
    const double best_mw = result.rows[result.best_index].mw;
    report("6 sweep argmin in band", best_mw >= 0.94 && best_mw <= 0.99,
           "best mw " + std::to_string(best_mw));
}

// ---- criterion 7: schedule exactness ----

void criterion_7_schedule_exactness() {
    bool ok = true;
    std::string detail;
    RngStream rng(1, 0);

    const auto dec = MwSchedule::linear_decreasing(0.4, 0.9, 1000);
    const auto inc = MwSchedule::linear_increasing(0.4, 0.9, 1000);
    ok = ok && std::abs(dec.mw_at(0, rng) - 0.9) < 1e-12;
    ok = ok && std::abs(dec.mw_at(1000, rng) - 0.4) < 1e-12;
    ok = ok && std::abs(dec.mw_at(500, rng) - 0.65) < 1e-12;
    ok = ok && std::abs(inc.mw_at(0, rng) - 0.4) < 1e-12;
    ok = ok && std::abs(inc.mw_at(1000, rng) - 0.9) < 1e-12;
    if (!ok) detail = "linear endpoints/midpoint off";

    for (int itr = 0; itr <= 1000 && ok; itr += 7) {
        if (std::abs(dec.mw_at(itr, rng) + inc.mw_at(itr, rng) - 1.3) > 1e-12) {
            ok = false;
            detail = "reflection symmetry broken at itr " + std::to_string(itr);
        }
    }

    const auto rand_sched = MwSchedule::random(0.95, 0.99, 1000);
    for (int i = 0; i < 10000 && ok; ++i) {
        const double mw = rand_sched.mw_at(3, rng);
        if (mw < 0.95 || mw >= 0.99) {
            ok = false;
            detail = "random draw outside [0.95, 0.99)";
        }
    }

    double visual = 400.0;
    double step = 250.0;
    for (int k = 0; k < 1000; ++k) {
        const auto updated = apply_update(visual, step, 0.96);
        visual = updated.visual;
        step = updated.step;
    }
    const double closed = 400.0 * std::pow(0.96, 1000);
    if (std::abs(visual - closed) / closed > 1e-10) {
        ok = false;
        detail = "compounded visual " + sci(visual) + " vs closed form " + sci(closed);
    }

    report("7 schedule exactness", ok, detail);
}

// ---- criterion 8: benchmark exactness ----

void criterion_8_benchmark_exactness() {
    bool ok = true;
    std::string detail;
    if (std::abs(sphere(Point(30, 0.0))) > 1e-9 ||
        std::abs(rosenbrock(Point(30, 1.0))) > 1e-9 ||
        std::abs(ackley(Point(30, 0.0))) > 1e-9 ||
        std::abs(griewank(Point(30, 0.0))) > 1e-9) {
        ok = false;
        detail = "an optimum does not evaluate to 0";
    }
    const double ackley_1d = ackley({1.0});
    if (std::abs(ackley_1d - 3.6253849384403628) > 1e-6) {
        ok = false;
        detail = "ackley(1) = " + sci(ackley_1d);
    }
    report("8 benchmark exactness", ok, detail);
}

// ---- criterion 9: property suite ----

bool prop_bulletin_monotone(const ExperimentResult& cwafa_sphere, std::string& why) {
    for (const auto& record : cwafa_sphere.records) {
        for (std::size_t k = 1; k < record.trace.size(); ++k) {
            if (record.trace[k].best_fitness > record.trace[k - 1].best_fitness) {
                why = "bulletin rose in run " + std::to_string(record.run_index);
                return false;
            }
        }
    }
    return true;
}

bool prop_feasibility(std::string& why) {
    int violations = 0;
    const Bounds box(-500.0, 500.0);
    const Objective probe{"probe", 10, box, 0.01, [&](const Point& p) {
                              if (!box.contains(p)) ++violations;
                              return sphere(p);
                          }};
    const afsa::SwarmParams params{30, 400.0, 250.0, 10, 0.5, 100};
    const auto schedule = MwSchedule::constant(0.96, 100);
    RngStream rng(kSeed, 0);
    (void)afsa::run(probe, params, schedule, rng);
    if (violations != 0) {
        why = std::to_string(violations) + " out-of-bounds evaluations";
        return false;
    }
    return true;
}

bool prop_budget(std::string& why) {
    const Objective obj = lookup_objective("sphere", 10);
    const afsa::SwarmParams params{30, 400.0, 250.0, 10, 0.5, 100};
    const auto schedule = MwSchedule::constant(0.96, 100);
    EvalCounter counter;
    RngStream rng(kSeed, 1);
    afsa::SwarmState state = afsa::init_swarm(obj, params, counter, rng);
    if (counter.count != 30) {
        why = "init cost " + std::to_string(counter.count) + " evaluations";
        return false;
    }
    const auto budget =
        static_cast<unsigned long long>(params.population * (2 + params.try_number + 1));
    for (int k = 0; k < 100; ++k) {
        const auto before = counter.count;
        (void)afsa::step_iteration(state, obj, params, schedule, counter, rng);
        if (counter.count - before > budget) {
            why = "iteration spent " + std::to_string(counter.count - before) +
                  " evaluations (budget " + std::to_string(budget) + ")";
            return false;
        }
    }
    return true;
}

bool prop_trace_csv_determinism(std::string& why) {
    ExperimentConfig config;
    config.function = "griewank";
    config.dimension = 8;
    config.algorithm = Algorithm::Rwafa;
    config.mw_min = 0.94;
    config.mw_max = 0.99;
    config.iterations = 120;
    config.population = 20;
    config.runs = 3;
    config.master_seed = kSeed;

    const std::string path_a = "acceptance_trace_a.csv";
    const std::string path_b = "acceptance_trace_b.csv";
    write_trace_csv(run_experiment(config).records, path_a);
    write_trace_csv(run_experiment(config).records, path_b);

    std::ifstream a(path_a, std::ios::binary);
    std::ifstream b(path_b, std::ios::binary);
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    const bool equal = sa.str() == sb.str() && !sa.str().empty();
    std::remove(path_a.c_str());
    std::remove(path_b.c_str());
    if (!equal) why = "repeated experiment produced different trace bytes";
    return equal;
}

bool prop_std_equals_unit_cwafa(std::string& why) {
    ExperimentConfig std_config;
    std_config.function = "sphere";
    std_config.dimension = 6;
    std_config.algorithm = Algorithm::StdAfsa;
    std_config.iterations = 80;
    std_config.population = 15;
    std_config.runs = 3;
    std_config.master_seed = kSeed;

    ExperimentConfig unit_config = std_config;
    unit_config.algorithm = Algorithm::Cwafa;
    unit_config.mw = 1.0;

    const auto a = run_experiment(std_config);
    const auto b = run_experiment(unit_config);
    for (std::size_t r = 0; r < a.records.size(); ++r) {
        for (std::size_t k = 0; k < a.records[r].trace.size(); ++k) {
            const auto& ta = a.records[r].trace[k];
            const auto& tb = b.records[r].trace[k];
            if (ta.best_fitness != tb.best_fitness || ta.visual != tb.visual ||
                ta.step != tb.step) {
                why = "traces diverge at run " + std::to_string(r) + ", iteration " +
                      std::to_string(k);
                return false;
            }
        }
    }
    return true;
}

bool prop_summary_permutation_invariance(std::string& why) {
    std::mt19937 gen(99);
    std::uniform_real_distribution<double> dist(0.0, 10.0);
    std::vector<double> xs(1001);
    for (auto& x : xs) x = dist(gen);
    const Summary before = summarize(xs, 5.0);
    std::shuffle(xs.begin(), xs.end(), gen);
    const Summary after = summarize(xs, 5.0);
    if (before.best != after.best || before.mean != after.mean ||
        before.std_dev != after.std_dev ||
        before.solved_fraction != after.solved_fraction) {
        why = "summary depends on input order";
        return false;
    }
    return true;
}

bool prop_summary_vs_oracle(std::string& why) {
    std::mt19937 gen(7);
    std::uniform_real_distribution<double> dist(-50.0, 50.0);
    std::vector<double> xs(10000);
    for (auto& x : xs) x = dist(gen);

    double sum = 0.0;
    for (double x : xs) sum += x;
    const double mean = sum / static_cast<double>(xs.size());
    double sq = 0.0;
    for (double x : xs) sq += (x - mean) * (x - mean);
    const double std_dev = std::sqrt(sq / static_cast<double>(xs.size() - 1));

    const Summary s = summarize(xs, 0.0);
    if (std::abs(s.mean - mean) > 1e-12 * std::abs(mean) ||
        std::abs(s.std_dev - std_dev) > 1e-12 * std_dev) {
        why = "mean/std-dev disagree with the two-pass oracle";
        return false;
    }
    return true;
}

void criterion_9_properties(const ExperimentResult& cwafa_sphere) {
    struct Property {
        const char* name;
        bool ok;
        std::string why;
    };
    std::vector<Property> properties;
    std::string why;

    why.clear();
    properties.push_back({"bulletin monotonicity",
                          prop_bulletin_monotone(cwafa_sphere, why), why});
    why.clear();
    properties.push_back({"feasibility", prop_feasibility(why), why});
    why.clear();
    properties.push_back({"evaluation budget", prop_budget(why), why});
    why.clear();
    properties.push_back({"trace csv determinism", prop_trace_csv_determinism(why), why});
    why.clear();
    properties.push_back({"std_afsa == cwafa(1.0)", prop_std_equals_unit_cwafa(why), why});
    why.clear();
    properties.push_back({"summary permutation invariance",
                          prop_summary_permutation_invariance(why), why});
    why.clear();
    properties.push_back({"summarize vs two-pass oracle", prop_summary_vs_oracle(why), why});

    bool all_ok = true;
    std::string detail;
    for (const auto& property : properties) {
        if (!property.ok) {
            all_ok = false;
            if (!detail.empty()) detail += "; ";
            detail += std::string(property.name) + ": " + property.why;
        }
    }
    if (all_ok) {
        detail = std::to_string(properties.size()) + " properties hold";
    }
    report("9 property suite", all_ok, detail);
}

} // namespace

int main() {
    std::cout << "acceptance suite (seed " << kSeed << ")" << std::endl;

    const auto cwafa_sphere = run_cwafa("sphere", 30, 0.96, 20);

    criterion_1_sphere_threshold(cwafa_sphere);
    criterion_2_griewank_threshold();
    criterion_3_rosenbrock_threshold();
    criterion_4_gpso_threshold();
    criterion_5_dominance(cwafa_sphere);
    criterion_6_sweep_band();
    criterion_7_schedule_exactness();
    criterion_8_benchmark_exactness();
    criterion_9_properties(cwafa_sphere);

    if (failures == 0) {
        std::cout << "all criteria passed" << std::endl;
        return 0;
    }
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
}
