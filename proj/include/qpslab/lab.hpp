#pragma once
// Experiment runner: seeded batch verification of the uncertainty,
// extremality, monotonicity, and convolution-limit property suites,
// with deterministic CSV/JSON/plot-file emission.

#include <cstdint>
#include <string>
#include <vector>

#include "qpslab/conv.hpp"
#include "qpslab/matrix.hpp"

namespace qps {

struct ExperimentConfig {
    std::string experiment;
    int n = 2;
    int d = 3;
    int count = 100;
    std::uint64_t seed = 1;
    std::vector<double> alphas = {0.5, 1.0, 2.0};
    int s = 2, t = 2;   // convolution parameters
    int L = 8;          // trajectory length
    std::string out_dir;
    std::string unit = "nats";
};

struct ReportRow {
    int case_index = 0;
    std::string inequality;
    double lhs = 0.0;
    double rhs = 0.0;
    double gap = 0.0;       // lhs - rhs
    bool ok = false;
    bool entropic = true;   // rescaled by 1/ln d under the dits unit
    std::string note;
};

struct Report {
    ExperimentConfig config;
    std::vector<ReportRow> rows;
    int violations = 0;
    // gnuplot-ready curves: (file name, two-column content)
    std::vector<std::pair<std::string, std::string>> curves;
};

// Throws std::invalid_argument on bad configs (CLI maps that to exit 3).
Report run_uncertainty(const ExperimentConfig& config);
Report run_extremality(const ExperimentConfig& config);
Report run_monotonicity(const ExperimentConfig& config);
Report run_clt(const ExperimentConfig& config);

// Ad-hoc single-state analysis (the `state` subcommand): phase-space
// tables, stabilizer group, and measure summary for one matrix.
Report run_state(const Operator& op, const ExperimentConfig& config);

// report.csv, report.json, and one .dat file per curve, under out_dir.
// Byte-stable for identical config + seed. No-op when out_dir is empty.
void emit(const Report& report);

// CSV/JSON images of the report (what emit writes), unit-converted.
std::string report_csv(const Report& report);
std::string report_json(const Report& report);

} // namespace qps
