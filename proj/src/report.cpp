#include "mdd/report.hpp"

#include "mdd/format.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace mdd {

namespace {

std::string quote_if_needed(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string opt_to_string(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string{};
}

std::optional<double> parse_opt(const std::string& field, const std::string& where) {
    if (field.empty()) return std::nullopt;
    double value = 0.0;
    const char* first = field.c_str();
    if (*first == '+') ++first;
    const auto [end, ec] = std::from_chars(first, field.c_str() + field.size(), value);
    if (ec != std::errc{} || end != field.c_str() + field.size()) {
        throw CsvFormatError(where + ": cannot parse number '" + field + "'");
    }
    return value;
}

// One logical CSV record; quoted fields may span raw lines.
std::vector<std::string> parse_record(std::istream& in, std::size_t& line_no, bool& got_record) {
    std::vector<std::string> fields;
    std::string field;
    bool in_quotes = false;
    bool any = false;
    char c = 0;

    got_record = false;
    while (in.get(c)) {
        any = true;
        if (in_quotes) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get();
                    field += '"';
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') ++line_no;
                field += c;
            }
            continue;
        }
        if (c == '"') {
            in_quotes = true;
        } else if (c == ',') {
            fields.push_back(field);
            field.clear();
        } else if (c == '\n') {
            ++line_no;
            break;
        } else if (c != '\r') {
            field += c;
        }
    }
    if (in_quotes) {
        throw CsvFormatError("line " + std::to_string(line_no) + ": unterminated quoted field");
    }
    if (!any) return fields;
    fields.push_back(field);
    got_record = true;
    return fields;
}

} // namespace

std::vector<CsvRow> rows_from_report(const EvalReport& report) {
    std::vector<CsvRow> rows;
    auto base = [&] {
        CsvRow row;
        row.dataset = report.dataset;
        row.measure = report.measure;
        row.params = report.params;
        row.expected_acc = report.expected_acc;
        row.actual_acc = report.actual_acc;
        return row;
    };

    if (report.gains.empty()) {
        rows.push_back(base());
        return rows;
    }
    for (const auto& g : report.gains) {
        CsvRow row = base();
        row.ref_measure = g.ref;
        row.expected_gain = g.expected_gain;
        row.actual_gain = g.actual_gain;
        if (g.quadrant) {
            row.quadrant = std::string(quadrant_name(*g.quadrant));
        } else {
            row.status = "undefined_gain";
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

CsvRow error_row(std::string dataset, std::string measure, std::string status) {
    CsvRow row;
    row.dataset = std::move(dataset);
    row.measure = std::move(measure);
    row.status = std::move(status);
    return row;
}

void write_csv(std::ostream& out, std::span<const CsvRow> rows) {
    out << kCsvHeader << '\n';
    for (const auto& r : rows) {
        out << quote_if_needed(r.dataset) << ',' << quote_if_needed(r.measure) << ','
            << quote_if_needed(r.params) << ',' << opt_to_string(r.expected_acc) << ','
            << opt_to_string(r.actual_acc) << ',' << quote_if_needed(r.ref_measure) << ','
            << opt_to_string(r.expected_gain) << ',' << opt_to_string(r.actual_gain) << ','
            << r.quadrant << ',' << quote_if_needed(r.status) << '\n';
    }
}

void write_csv_file(const std::filesystem::path& path, std::span<const CsvRow> rows) {
    std::ofstream out(path);
    if (!out) {
        throw std::invalid_argument("cannot write " + path.string());
    }
    write_csv(out, rows);
}

std::vector<CsvRow> read_csv_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw CsvFormatError("cannot open " + path.string());
    }

    std::size_t line_no = 1;
    bool got = false;
    const auto header = parse_record(in, line_no, got);
    if (!got) {
        throw CsvFormatError("line 1: empty file");
    }
    std::string joined;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i > 0) joined += ',';
        joined += header[i];
    }
    if (joined != kCsvHeader) {
        throw CsvFormatError("line 1: unexpected header '" + joined + "'");
    }

    std::vector<CsvRow> rows;
    while (true) {
        const std::size_t record_line = line_no;
        const auto fields = parse_record(in, line_no, got);
        if (!got) break;
        if (fields.size() == 1 && fields[0].empty()) continue; // trailing blank line
        if (fields.size() != 10) {
            throw CsvFormatError("line " + std::to_string(record_line) + ": expected 10 fields, got " +
                                 std::to_string(fields.size()));
        }
        const std::string where = "line " + std::to_string(record_line);
        CsvRow row;
        row.dataset = fields[0];
        row.measure = fields[1];
        row.params = fields[2];
        row.expected_acc = parse_opt(fields[3], where);
        row.actual_acc = parse_opt(fields[4], where);
        row.ref_measure = fields[5];
        row.expected_gain = parse_opt(fields[6], where);
        row.actual_gain = parse_opt(fields[7], where);
        row.quadrant = fields[8];
        row.status = fields[9];
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace mdd
