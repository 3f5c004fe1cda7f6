#ifndef FISHSWARM_CSV_HPP
#define FISHSWARM_CSV_HPP

#include <string>
#include <vector>

#include "fishswarm/harness.hpp"
#include "fishswarm/record.hpp"

namespace fishswarm {

/// Header `run,iteration,best_fitness,visual,step,mw`; rows sorted by
/// (run, iteration). Floats carry 17 significant digits, so a round-trip
/// parse reproduces them exactly. I/O failures raise std::runtime_error
/// naming the path.
void write_trace_csv(const std::vector<RunRecord>& records, const std::string& path);

/// Header `function,dimension,algorithm,runs,best,mean,std_dev,solved_fraction`.
void write_summary_csv(const std::vector<harness::SummaryRow>& rows,
                       const std::string& path);

/// Header `mw,best,mean,std_dev,solved_fraction`, one row per grid value.
void write_sweep_csv(const harness::SweepResult& result, const std::string& path);

} // namespace fishswarm

#endif // FISHSWARM_CSV_HPP
