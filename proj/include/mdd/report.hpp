#pragma once

#include "mdd/eval.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mdd {

// Flat result schema: one row per (dataset, measure, reference) gain
// pairing, accuracies repeated per pairing. Error and exclusion rows
// carry only the dataset (and possibly measure) plus a status.
inline constexpr std::string_view kCsvHeader =
    "dataset,measure,params,expected_acc,actual_acc,ref_measure,expected_gain,actual_gain,"
    "quadrant,status";

struct CsvRow {
    std::string dataset;
    std::string measure;
    std::string params;
    std::optional<double> expected_acc;
    std::optional<double> actual_acc;
    std::string ref_measure;
    std::optional<double> expected_gain;
    std::optional<double> actual_gain;
    std::string quadrant;
    std::string status = "ok";
};

struct CsvFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flattens one report into its gain-pairing rows. A report with no
// references yields a single row with empty reference fields.
std::vector<CsvRow> rows_from_report(const EvalReport& report);

CsvRow error_row(std::string dataset, std::string measure, std::string status);

void write_csv(std::ostream& out, std::span<const CsvRow> rows);
void write_csv_file(const std::filesystem::path& path, std::span<const CsvRow> rows);

// Throws CsvFormatError naming the offending line on malformed input.
std::vector<CsvRow> read_csv_file(const std::filesystem::path& path);

} // namespace mdd
