#ifndef FUZZYEULER_EXPERIMENT_HPP
#define FUZZYEULER_EXPERIMENT_HPP

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "fuzzyeuler/fuzzy_number.hpp"

namespace fuzzyeuler {

/// One batch run of the harness. Tolerance names used by the commands:
///   detect   trailing-window limit detection (default 1e-8)
///   slack    bound sandwich slack            (default 1e-12)
///   compose  composition identity deviation  (default 1e-10)
///   example  closed-form reproduction error  (default 1e-12)
///   limits   limit-sequence error at n_max   (default 1e-4)
struct ExperimentConfig {
    std::string command;
    double p = 2.0;
    long long upto = -1;  // -1: per-command default
    int grid_size = static_cast<int>(kDefaultGridSize);
    std::map<std::string, double> tolerances;
    std::string input_path;
    std::string output_path = "report.csv";
};

double tolerance_or(const ExperimentConfig& cfg, const std::string& name, double fallback);

ExperimentConfig config_from_json(const nlohmann::json& doc);
ExperimentConfig load_config(const std::string& path);

/// The oscillating triangular sequence with level cuts
/// [(-1)^n + a, (-1)^n + 2 - a]: terms alternate between triangular(1,2,3)
/// and triangular(-1,0,1). Divergent, but E_p summable for every p > 0.
FuzzySequence generate_example(std::size_t upto, std::size_t grid_size = kDefaultGridSize);

/// Limit of the transformed example: the unit triangular number with cuts
/// [a, 2 - a].
FuzzyNumber example_limit(std::size_t grid_size = kDefaultGridSize);

/// Tabular report plus a structured-text summary. Missing cells are NaN and
/// serialize as empty fields.
struct ReportRow {
    long long n;
    std::vector<double> cells;
};

struct Report {
    std::vector<std::string> columns;  // includes leading "n"
    std::vector<ReportRow> rows;
    std::vector<std::pair<std::string, std::string>> summary;
    bool ok = true;
};

/// Measured D(t^p_n, mu) against the closed form |p-1|^n/(p+1)^n for the
/// generated example sequence.
Report reproduce_example_report(double p, long long upto, int grid_size, double tol);

void write_report(const Report& rep, const std::string& csv_path);

/// Dispatch on cfg.command; writes reports to cfg.output_path (summary to
/// output_path + ".summary.txt"). Returns the process exit status: 0 iff
/// every enabled check passed its tolerance.
int run_command(const ExperimentConfig& cfg);

}  // namespace fuzzyeuler

#endif
