// Command-line front end: run / sweep / compare experiments and write
// CSV + SVG results. Exit codes: 0 success, 1 configuration error, 2 I/O
// error.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fishswarm/csv.hpp"
#include "fishswarm/harness.hpp"
#include "fishswarm/svg.hpp"

namespace fs = std::filesystem;
using namespace fishswarm;
using namespace fishswarm::harness;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitIo = 2;

void ensure_output_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create output directory '" + dir +
                                 "': " + ec.message());
    }
}

std::string join(const std::string& dir, const std::string& name) {
    return (fs::path(dir) / name).string();
}

void print_summary_line(const SummaryRow& row) {
    std::printf("%-10s dim=%-3d %-8s runs=%-3d best=%.6e mean=%.6e std_dev=%.6e solved=%.2f\n",
                row.function.c_str(), row.dimension,
                algorithm_name(row.algorithm).c_str(), row.runs, row.summary.best,
                row.summary.mean, row.summary.std_dev, row.summary.solved_fraction);
}

struct RunArgs {
    std::string function = "sphere";
    int dim = 30;
    std::string algo = "cwafa";
    std::optional<double> mw;
    std::optional<double> mw_min;
    std::optional<double> mw_max;
    int iters = 1000;
    int pop = 30;
    int runs = 50;
    std::uint64_t seed = 1;
    std::string out = ".";
    bool trace = false;
    bool svg = false;
};

int do_run(const RunArgs& args) {
    ExperimentConfig config;
    config.function = args.function;
    config.dimension = args.dim;
    config.algorithm = parse_algorithm(args.algo);
    config.mw = args.mw;
    config.mw_min = args.mw_min;
    config.mw_max = args.mw_max;
    config.iterations = args.iters;
    config.population = args.pop;
    config.runs = args.runs;
    config.master_seed = args.seed;
    config.output_dir = args.out;
    validate(config);

    ensure_output_dir(args.out);
    const ExperimentResult result = run_experiment(config);

    const SummaryRow row{config.function, config.dimension, config.algorithm,
                         config.runs, result.summary};
    write_summary_csv({row}, join(args.out, "summary.csv"));
    if (args.trace) {
        write_trace_csv(result.records, join(args.out, "trace.csv"));
    }
    if (args.svg) {
        std::vector<TraceSeries> series;
        series.reserve(result.records.size());
        for (const auto& record : result.records) {
            TraceSeries s{"run " + std::to_string(record.run_index), {}};
            s.values.reserve(record.trace.size());
            for (const auto& entry : record.trace) {
                s.values.push_back(entry.best_fitness);
            }
            series.push_back(std::move(s));
        }
        render_convergence_svg(series, join(args.out, "convergence.svg"), true);
    }
    print_summary_line(row);
    return kExitOk;
}

struct SweepArgs {
    std::string function = "sphere";
    int dim = 30;
    std::string grid = "0.72:1.02:0.01";
    int iters = 1000;
    int pop = 30;
    int runs = 50;
    std::uint64_t seed = 1;
    std::string out = ".";
};

std::vector<double> parse_grid(const std::string& spec) {
    double start = 0.0;
    double stop = 0.0;
    double step = 0.0;
    char trailing = '\0';
    if (std::sscanf(spec.c_str(), "%lf:%lf:%lf%c", &start, &stop, &step, &trailing) != 3) {
        throw std::invalid_argument("bad grid '" + spec + "'; expected start:stop:step");
    }
    return make_grid(start, stop, step);
}

int do_sweep(const SweepArgs& args) {
    ExperimentConfig base;
    base.function = args.function;
    base.dimension = args.dim;
    base.algorithm = Algorithm::Cwafa;
    base.iterations = args.iters;
    base.population = args.pop;
    base.runs = args.runs;
    base.master_seed = args.seed;
    base.output_dir = args.out;

    const std::vector<double> grid = parse_grid(args.grid);
    ensure_output_dir(args.out);
    const SweepResult result = mw_sweep(base, grid);
    write_sweep_csv(result, join(args.out, "sweep.csv"));

    for (const auto& row : result.rows) {
        std::printf("mw=%.4f best=%.6e mean=%.6e std_dev=%.6e solved=%.2f\n", row.mw,
                    row.summary.best, row.summary.mean, row.summary.std_dev,
                    row.summary.solved_fraction);
    }
    std::printf("best mw %.4f (mean %.6e)\n", result.rows[result.best_index].mw,
                result.rows[result.best_index].summary.mean);
    return kExitOk;
}

struct CompareArgs {
    std::vector<std::string> functions = {"sphere", "rosenbrock", "ackley", "griewank"};
    std::vector<int> dims = {10, 20, 30};
    int iters = 1000;
    int runs = 50;
    std::uint64_t seed = 1;
    std::string out = ".";
};

int do_compare(const CompareArgs& args) {
    ensure_output_dir(args.out);
    const CompareResult result =
        compare(args.functions, args.dims, args.iters, args.runs, args.seed);
    write_summary_csv(result.rows, join(args.out, "compare.csv"));
    for (const auto& cell : result.cells) {
        const std::string name = "convergence_" + cell.function + "_" +
                                 std::to_string(cell.dimension) + "d.svg";
        render_convergence_svg(cell.traces, join(args.out, name), true);
    }
    for (const auto& row : result.rows) {
        print_summary_line(row);
    }
    return kExitOk;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

// Turns a `key = value` config file (# comments allowed, keys matching the
// long flag names) into --key=value tokens.
std::vector<std::string> load_config_tokens(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot read config file '" + path + "'");
    }
    std::vector<std::string> tokens;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto comment = line.find('#');
        if (comment != std::string::npos) line.erase(comment);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config '" + path + "' line " +
                                        std::to_string(line_no) +
                                        ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw std::invalid_argument("config '" + path + "' line " +
                                        std::to_string(line_no) +
                                        ": expected key = value");
        }
        tokens.push_back("--" + key + "=" + value);
    }
    return tokens;
}

// Splices config-file values in ahead of the explicit flags. File tokens
// whose key also appears on the command line are dropped, so flags always
// override the file.
std::vector<std::string> expand_args(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string config_path;
    for (std::size_t i = 0; i < args.size();) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) {
                throw std::invalid_argument("--config needs a file path");
            }
            config_path = args[i + 1];
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                       args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        } else if (args[i].rfind("--config=", 0) == 0) {
            config_path = args[i].substr(9);
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
        } else {
            ++i;
        }
    }
    if (config_path.empty()) {
        return args;
    }
    if (args.empty() || args.front().rfind('-', 0) == 0) {
        throw std::invalid_argument("--config requires a subcommand");
    }
    const auto key_of = [](const std::string& token) {
        return token.substr(0, token.find('='));
    };
    std::vector<std::string> spliced;
    for (const std::string& token : load_config_tokens(config_path)) {
        bool overridden = false;
        for (const std::string& arg : args) {
            if (arg.rfind("--", 0) == 0 && key_of(arg) == key_of(token)) {
                overridden = true;
                break;
            }
        }
        if (!overridden) spliced.push_back(token);
    }
    args.insert(args.begin() + 1, spliced.begin(), spliced.end());
    return args;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fish-swarm optimization benchmark harness"};
    app.require_subcommand(1);

    RunArgs run_args;
    auto* run_cmd = app.add_subcommand("run", "Run one experiment (R seeded runs)");
    run_cmd->add_option("--function", run_args.function,
                        "Objective: sphere, rosenbrock, ackley, griewank");
    run_cmd->add_option("--dim", run_args.dim, "Problem dimension");
    run_cmd->add_option("--algo", run_args.algo,
                        "std_afsa, cwafa, rwafa, ldwafsa, liwafsa or gpso");
    run_cmd->add_option("--mw", run_args.mw, "Constant movement weight (cwafa)");
    run_cmd->add_option("--mw-min", run_args.mw_min, "Lower movement weight bound");
    run_cmd->add_option("--mw-max", run_args.mw_max, "Upper movement weight bound");
    run_cmd->add_option("--iters", run_args.iters, "Iterations per run");
    run_cmd->add_option("--pop", run_args.pop, "Population size (swarm algorithms)");
    run_cmd->add_option("--runs", run_args.runs, "Independent runs");
    run_cmd->add_option("--seed", run_args.seed, "Master seed");
    run_cmd->add_option("--out", run_args.out, "Output directory");
    run_cmd->add_flag("--trace", run_args.trace, "Write per-iteration trace.csv");
    run_cmd->add_flag("--svg", run_args.svg, "Render convergence.svg");
    run_cmd->add_option("--config", "Key = value file; flags override it");

    SweepArgs sweep_args;
    auto* sweep_cmd =
        app.add_subcommand("sweep", "Constant-weight grid sweep (cwafa)");
    sweep_cmd->add_option("--function", sweep_args.function, "Objective name");
    sweep_cmd->add_option("--dim", sweep_args.dim, "Problem dimension");
    sweep_cmd->add_option("--grid", sweep_args.grid, "start:stop:step");
    sweep_cmd->add_option("--iters", sweep_args.iters, "Iterations per run");
    sweep_cmd->add_option("--pop", sweep_args.pop, "Population size");
    sweep_cmd->add_option("--runs", sweep_args.runs, "Runs per grid point");
    sweep_cmd->add_option("--seed", sweep_args.seed, "Master seed");
    sweep_cmd->add_option("--out", sweep_args.out, "Output directory");
    sweep_cmd->add_option("--config", "Key = value file; flags override it");

    CompareArgs compare_args;
    auto* compare_cmd =
        app.add_subcommand("compare", "All six algorithms over functions x dims");
    compare_cmd->add_option("--functions", compare_args.functions, "Comma-separated list")
        ->delimiter(',');
    compare_cmd->add_option("--dims", compare_args.dims, "Comma-separated dimensions")
        ->delimiter(',');
    compare_cmd->add_option("--iters", compare_args.iters, "Iterations per run");
    compare_cmd->add_option("--runs", compare_args.runs, "Runs per cell");
    compare_cmd->add_option("--seed", compare_args.seed, "Master seed");
    compare_cmd->add_option("--out", compare_args.out, "Output directory");
    compare_cmd->add_option("--config", "Key = value file; flags override it");

    try {
        std::vector<std::string> args = expand_args(argc, argv);
        std::reverse(args.begin(), args.end()); // CLI11 vector-parse convention
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }

    try {
        if (run_cmd->parsed()) return do_run(run_args);
        if (sweep_cmd->parsed()) return do_sweep(sweep_args);
        if (compare_cmd->parsed()) return do_compare(compare_args);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitConfig;
}
