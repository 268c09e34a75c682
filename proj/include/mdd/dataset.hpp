#pragma once

#include "mdd/time_series.hpp"

#include <filesystem>
#include <span>
#include <stdexcept>
#include <vector>

namespace mdd {

// Rows of unequal length within or across the two split files.
struct VariableLengthError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// NaN tokens or otherwise non-finite observations in the input.
struct MissingValueError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A train/test split of labeled series, all of one length.
struct LabeledDataset {
    std::string name;
    std::vector<TimeSeries> train;
    std::vector<TimeSeries> test;
    std::size_t length = 0;
    std::vector<std::string> classes; // sorted, unique
    char delimiter = '\t';            // field separator the files used
};

// Parses one split file: one series per line, label-first, TAB-separated.
// Falls back to commas when a line has no TABs. Labels are kept as exact
// trimmed string tokens.
std::vector<TimeSeries> load_ucr_file(const std::filesystem::path& path, char* delimiter_out = nullptr);

LabeledDataset load_ucr_split(const std::filesystem::path& train_path,
                              const std::filesystem::path& test_path,
                              std::string name);

// True iff the dataset's series length is within the admission cap.
bool validate_for_length_policy(const LabeledDataset& ds, std::size_t max_len = 900);

// Writes series back in the same text format with round-trip-exact
// values (shortest digits that reparse to the identical double).
void write_ucr_file(const std::filesystem::path& path, std::span<const TimeSeries> series,
                    char delimiter = '\t');

// Per-series standardization to mean 0, unit variance. A constant series
// maps to all zeros.
LabeledDataset z_normalized(const LabeledDataset& ds);

} // namespace mdd
