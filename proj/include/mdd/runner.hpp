#pragma once

#include "mdd/report.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mdd {

struct RunConfig {
    std::filesystem::path data_dir;
    std::vector<std::string> dataset_filter;                 // empty = all discovered
    std::vector<std::string> measures{"mdd", "eud", "dtw", "lcss"};
    double alpha = 0.4;                                      // generic schedule fraction
    std::vector<int> explicit_epsilons;                      // overrides the generic schedule
    std::size_t max_len = 900;                               // admission cap on series length
    bool normalize = false;                                  // per-series z-normalization
    std::filesystem::path output_csv = "results.csv";
    std::optional<std::filesystem::path> plot_dir;
    int jobs = 0;                                            // 0 = all cores
    double lcss_eps = 1.0;
    std::optional<int> lcss_delta;
    std::vector<int> dtw_window_grid;                        // percentages; empty = 0..20
};

struct DatasetPaths {
    std::string name;
    std::filesystem::path train;
    std::filesystem::path test;
};

// <Name>_TRAIN.tsv / <Name>_TEST.tsv pairs under the directory, sorted
// by name.
std::vector<DatasetPaths> discover_datasets(const std::filesystem::path& data_dir);

struct RunResult {
    std::vector<CsvRow> rows;
    std::vector<EvalReport> reports;
    std::size_t discovered = 0;
    std::size_t admitted = 0;
    std::size_t excluded = 0;
    std::size_t errored = 0;
};

// Full benchmark sweep: load every selected dataset, apply the admission
// rules, evaluate every configured measure, and compute pairwise gains.
// Datasets that fail to load or fall outside the cap contribute a status
// row instead of silently disappearing.
RunResult run_benchmark(const RunConfig& config, std::ostream& log);

// run_benchmark plus CSV and optional SVG output. Returns a process exit
// status: nonzero when no dataset was admitted.
int cmd_run(const RunConfig& config, std::ostream& log);

struct DistRequest {
    std::string measure = "mdd";
    std::filesystem::path file;
    std::size_t i = 0;
    std::size_t j = 0;
    double alpha = 0.4;
    std::vector<int> explicit_epsilons;
    std::optional<int> dtw_window; // unset = unconstrained
    double lcss_eps = 1.0;
    std::optional<int> lcss_delta;
};

// Prints the distance between series i and j of a file; for the
// multiscale measure, also one "epsilon,ratio" line per scale.
int cmd_dist(const DistRequest& request, std::ostream& out, std::ostream& log);

// Renders sharpshooter_<ref>.svg per reference measure plus
// accuracy_bars.svg from a results CSV.
int cmd_plot(const std::filesystem::path& results_csv, const std::filesystem::path& out_dir,
             std::ostream& log);

} // namespace mdd
