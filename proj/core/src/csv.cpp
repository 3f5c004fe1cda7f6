#include "fishswarm/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace fishswarm {

namespace {

std::ofstream open_or_throw(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    return out;
}

void close_or_throw(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) {
        throw std::runtime_error("write failed for '" + path + "'");
    }
}

// 17 significant digits round-trip every finite double exactly.
std::string fmt(double v) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

} // namespace

void write_trace_csv(const std::vector<RunRecord>& records, const std::string& path) {
    auto out = open_or_throw(path);
    out << "run,iteration,best_fitness,visual,step,mw\n";
    for (const RunRecord& record : records) {
        for (const TraceEntry& entry : record.trace) {
            out << record.run_index << ',' << entry.iteration << ','
                << fmt(entry.best_fitness) << ',' << fmt(entry.visual) << ','
                << fmt(entry.step) << ',' << fmt(entry.mw) << '\n';
        }
    }
    close_or_throw(out, path);
}

void write_summary_csv(const std::vector<harness::SummaryRow>& rows,
                       const std::string& path) {
    auto out = open_or_throw(path);
    out << "function,dimension,algorithm,runs,best,mean,std_dev,solved_fraction\n";
    for (const auto& row : rows) {
        out << row.function << ',' << row.dimension << ','
            << harness::algorithm_name(row.algorithm) << ',' << row.runs << ','
            << fmt(row.summary.best) << ',' << fmt(row.summary.mean) << ','
            << fmt(row.summary.std_dev) << ',' << fmt(row.summary.solved_fraction)
            << '\n';
    }
    close_or_throw(out, path);
}

void write_sweep_csv(const harness::SweepResult& result, const std::string& path) {
    auto out = open_or_throw(path);
    out << "mw,best,mean,std_dev,solved_fraction\n";
    for (const auto& row : result.rows) {
        out << fmt(row.mw) << ',' << fmt(row.summary.best) << ','
            << fmt(row.summary.mean) << ',' << fmt(row.summary.std_dev) << ','
            << fmt(row.summary.solved_fraction) << '\n';
    }
    close_or_throw(out, path);
}

} // namespace fishswarm
