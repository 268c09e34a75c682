#include "mdd/dataset.hpp"

#include "mdd/format.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

namespace mdd {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

bool is_nan_token(const std::string& token) {
    if (token.size() != 3) return false;
    auto low = [](char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); };
    return low(token[0]) == 'n' && low(token[1]) == 'a' && low(token[2]) == 'n';
}

double parse_value(const std::string& raw, const std::filesystem::path& path, std::size_t line_no) {
    const std::string token = trim(raw);
    if (token.empty()) {
        throw std::invalid_argument(path.string() + ":" + std::to_string(line_no) + ": empty field");
    }
    if (is_nan_token(token) || token == "?") {
        throw MissingValueError(path.string() + ":" + std::to_string(line_no) +
                                ": missing value token '" + token + "'");
    }
    const char* first = token.c_str();
    if (*first == '+') ++first; // from_chars rejects an explicit plus sign
    double value = 0.0;
    const auto [end, ec] = std::from_chars(first, token.c_str() + token.size(), value);
    if (ec != std::errc{} || end != token.c_str() + token.size()) {
        throw std::invalid_argument(path.string() + ":" + std::to_string(line_no) +
                                    ": cannot parse value '" + token + "'");
    }
    if (!std::isfinite(value)) {
        throw MissingValueError(path.string() + ":" + std::to_string(line_no) +
                                ": non-finite value '" + token + "'");
    }
    return value;
}

std::vector<std::string> split(const std::string& line, char delimiter) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, delimiter)) {
        fields.push_back(field);
    }
    return fields;
}

} // namespace

std::vector<TimeSeries> load_ucr_file(const std::filesystem::path& path, char* delimiter_out) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open " + path.string());
    }

    std::vector<TimeSeries> series;
    std::size_t expected_len = 0;
    char delimiter = '\t';
    bool delimiter_set = false;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;

        if (!delimiter_set) {
            // TAB-separated is the norm; some mirrors ship commas.
            delimiter = line.find('\t') != std::string::npos           ? '\t'
                        : line.find(',') != std::string::npos ? ','
                                                              : '\t';
            delimiter_set = true;
        }

        const auto fields = split(line, delimiter);
        if (fields.size() < 2) {
            throw std::invalid_argument(path.string() + ":" + std::to_string(line_no) +
                                        ": expected a label followed by observations");
        }
        const std::string label = trim(fields.front());
        if (label.empty()) {
            throw std::invalid_argument(path.string() + ":" + std::to_string(line_no) +
                                        ": empty class label");
        }

        std::vector<double> values;
        values.reserve(fields.size() - 1);
        for (std::size_t i = 1; i < fields.size(); ++i) {
            values.push_back(parse_value(fields[i], path, line_no));
        }

        if (series.empty()) {
            expected_len = values.size();
        } else if (values.size() != expected_len) {
            throw VariableLengthError(path.string() + ":" + std::to_string(line_no) +
                                      ": row has " + std::to_string(values.size()) +
                                      " observations, expected " + std::to_string(expected_len));
        }
        series.emplace_back(std::move(values), label);
    }

    if (series.empty()) {
        throw std::invalid_argument(path.string() + ": no series found");
    }
    if (delimiter_out) *delimiter_out = delimiter;
    return series;
}

LabeledDataset load_ucr_split(const std::filesystem::path& train_path,
                              const std::filesystem::path& test_path,
                              std::string name) {
    LabeledDataset ds;
    ds.name = std::move(name);
    ds.train = load_ucr_file(train_path, &ds.delimiter);
    ds.test = load_ucr_file(test_path);
    ds.length = ds.train.front().size();
    for (const auto& s : ds.test) {
        if (s.size() != ds.length) {
            throw VariableLengthError(ds.name + ": train series have length " +
                                      std::to_string(ds.length) + " but a test series has length " +
                                      std::to_string(s.size()));
        }
    }

    std::set<std::string> classes;
    for (const auto& s : ds.train) classes.insert(s.label());
    for (const auto& s : ds.test) classes.insert(s.label());
    ds.classes.assign(classes.begin(), classes.end());
    return ds;
}

bool validate_for_length_policy(const LabeledDataset& ds, std::size_t max_len) {
    return ds.length <= max_len;
}

void write_ucr_file(const std::filesystem::path& path, std::span<const TimeSeries> series,
                    char delimiter) {
    std::ofstream out(path);
    if (!out) {
        throw std::invalid_argument("cannot write " + path.string());
    }
    for (const auto& s : series) {
        out << s.label();
        for (double v : s.values()) {
            out << delimiter << format_double(v);
        }
        out << '\n';
    }
}

LabeledDataset z_normalized(const LabeledDataset& ds) {
    auto normalize = [](const TimeSeries& s) {
        const auto& v = s.values();
        const double n = static_cast<double>(v.size());
        double mean = 0.0;
        for (double x : v) mean += x;
        mean /= n;
        double var = 0.0;
        for (double x : v) var += (x - mean) * (x - mean);
        const double sd = std::sqrt(var / n);

        std::vector<double> out(v.size(), 0.0);
        // Guard against constant series, where rounding alone would blow
        // the scaled values up.
        const double floor = 1e-12 * std::max(1.0, std::abs(mean));
        if (sd > floor) {
            for (std::size_t t = 0; t < v.size(); ++t) {
                out[t] = (v[t] - mean) / sd;
            }
        }
        return TimeSeries(std::move(out), s.label());
    };

    LabeledDataset out;
    out.name = ds.name;
    out.length = ds.length;
    out.classes = ds.classes;
    out.delimiter = ds.delimiter;
    out.train.reserve(ds.train.size());
    out.test.reserve(ds.test.size());
    for (const auto& s : ds.train) out.train.push_back(normalize(s));
    for (const auto& s : ds.test) out.test.push_back(normalize(s));
    return out;
}

} // namespace mdd
