#include "mdd/runner.hpp"

#include "mdd/format.hpp"
#include "mdd/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <set>

namespace mdd {

namespace {

constexpr std::string_view kTrainSuffix = "_TRAIN.tsv";
constexpr std::string_view kTestSuffix = "_TEST.tsv";

bool ends_with(const std::string& s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

MeasureSpec build_measure(const std::string& token, const RunConfig& config,
                          const LabeledDataset& ds) {
    if (token == "mdd") {
        if (!config.explicit_epsilons.empty()) {
            return MddMeasure{EpsilonSchedule(config.explicit_epsilons)};
        }
        return MddMeasure{generic_epsilon_schedule(ds.length, config.alpha)};
    }
    if (token == "eud") {
        return EuclideanMeasure{};
    }
    if (token == "dtw") {
        const auto grid = config.dtw_window_grid.empty() ? default_dtw_window_grid()
                                                         : config.dtw_window_grid;
        return DtwMeasure{learn_dtw_window(ds.train, grid)};
    }
    if (token == "lcss") {
        return LcssMeasure{LcssConfig{config.lcss_eps, config.lcss_delta}};
    }
    throw std::invalid_argument("unknown measure '" + token + "'");
}

struct MeasureOutcome {
    std::string token;
    std::string params;
    bool ok = false;
    std::string error;
    double expected = 0.0;
    double actual = 0.0;
};

std::vector<EvalReport> evaluate_dataset(const LabeledDataset& ds, const RunConfig& config,
                                         std::vector<CsvRow>& rows, std::ostream& log) {
    std::vector<MeasureOutcome> outcomes;
    for (const auto& raw : config.measures) {
        MeasureOutcome o;
        o.token = lowercase(raw);
        try {
            const MeasureSpec spec = build_measure(o.token, config, ds);
            o.params = measure_params(spec);
            o.expected = loocv_accuracy(ds.train, spec);
            o.actual = test_accuracy(ds, spec);
            o.ok = true;
            log << ds.name << '/' << o.token << ": expected=" << format_double(o.expected)
                << " actual=" << format_double(o.actual);
            if (!o.params.empty()) log << " (" << o.params << ')';
            log << '\n';
        } catch (const std::exception& e) {
            o.error = e.what();
            log << ds.name << '/' << o.token << ": error: " << o.error << '\n';
        }
        outcomes.push_back(std::move(o));
    }

    std::vector<EvalReport> reports;
    for (const auto& o : outcomes) {
        if (!o.ok) {
            rows.push_back(error_row(ds.name, o.token, "error: " + o.error));
            continue;
        }
        EvalReport report;
        report.dataset = ds.name;
        report.measure = o.token;
        report.params = o.params;
        report.expected_acc = o.expected;
        report.actual_acc = o.actual;
        for (const auto& ref : outcomes) {
            if (&ref == &o || !ref.ok) continue;
            RefGain g;
            g.ref = ref.token;
            try {
                g.expected_gain = accuracy_gain(o.expected, ref.expected);
            } catch (const UndefinedGainError&) {
            }
            try {
                g.actual_gain = accuracy_gain(o.actual, ref.actual);
            } catch (const UndefinedGainError&) {
            }
            if (g.expected_gain && g.actual_gain) {
                g.quadrant = sharpshooter_quadrant(*g.expected_gain, *g.actual_gain);
            }
            report.gains.push_back(std::move(g));
        }
        const auto report_rows = rows_from_report(report);
        rows.insert(rows.end(), report_rows.begin(), report_rows.end());
        reports.push_back(std::move(report));
    }
    return reports;
}

double sample_sem(const std::vector<double>& xs) {
    const auto n = xs.size();
    if (n < 2) return 0.0;
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double x : xs) var += (x - mean) * (x - mean);
    var /= static_cast<double>(n - 1);
    return std::sqrt(var / static_cast<double>(n));
}

double mean_of(const std::vector<double>& xs) {
    double mean = 0.0;
    for (double x : xs) mean += x;
    return mean / static_cast<double>(xs.size());
}

} // namespace

std::vector<DatasetPaths> discover_datasets(const std::filesystem::path& data_dir) {
    if (!std::filesystem::is_directory(data_dir)) {
        throw std::invalid_argument("data directory not found: " + data_dir.string());
    }
    std::vector<DatasetPaths> out;
    for (const auto& entry : std::filesystem::directory_iterator(data_dir)) {
        if (!entry.is_regular_file()) continue;
        const std::string filename = entry.path().filename().string();
        if (!ends_with(filename, kTrainSuffix)) continue;
        const std::string name = filename.substr(0, filename.size() - kTrainSuffix.size());
        const auto test_path = data_dir / (name + std::string(kTestSuffix));
        if (!std::filesystem::exists(test_path)) continue;
        out.push_back({name, entry.path(), test_path});
    }
    std::sort(out.begin(), out.end(),
              [](const DatasetPaths& a, const DatasetPaths& b) { return a.name < b.name; });
    return out;
}

RunResult run_benchmark(const RunConfig& config, std::ostream& log) {
    set_worker_count(config.jobs);

    auto discovered = discover_datasets(config.data_dir);
    if (!config.dataset_filter.empty()) {
        const std::set<std::string> wanted(config.dataset_filter.begin(),
                                           config.dataset_filter.end());
        std::erase_if(discovered,
                      [&](const DatasetPaths& p) { return wanted.find(p.name) == wanted.end(); });
        for (const auto& name : wanted) {
            if (std::none_of(discovered.begin(), discovered.end(),
                             [&](const DatasetPaths& p) { return p.name == name; })) {
                log << "requested dataset not found: " << name << '\n';
            }
        }
    }

    RunResult result;
    result.discovered = discovered.size();
    log << "discovered " << discovered.size() << " dataset(s) under " << config.data_dir.string()
        << '\n';

    for (const auto& paths : discovered) {
        LabeledDataset ds;
        try {
            ds = load_ucr_split(paths.train, paths.test, paths.name);
        } catch (const std::exception& e) {
            ++result.errored;
            log << paths.name << ": error: " << e.what() << '\n';
            result.rows.push_back(error_row(paths.name, {}, std::string("error: ") + e.what()));
            continue;
        }
        if (!validate_for_length_policy(ds, config.max_len)) {
            ++result.excluded;
            const std::string status = "excluded: length " + std::to_string(ds.length) + " > " +
                                       std::to_string(config.max_len);
            log << paths.name << ": " << status << '\n';
            result.rows.push_back(error_row(paths.name, {}, status));
            continue;
        }
        if (config.normalize) {
            ds = z_normalized(ds);
        }
        ++result.admitted;
        log << ds.name << ": d=" << ds.length << " train=" << ds.train.size()
            << " test=" << ds.test.size() << " classes=" << ds.classes.size() << " delimiter="
            << (ds.delimiter == '\t' ? "tab" : "comma")
            << (config.normalize ? " normalized" : "") << '\n';

        auto reports = evaluate_dataset(ds, config, result.rows, log);
        result.reports.insert(result.reports.end(), std::make_move_iterator(reports.begin()),
                              std::make_move_iterator(reports.end()));
    }
    return result;
}

int cmd_run(const RunConfig& config, std::ostream& log) {
    RunResult result;
    try {
        result = run_benchmark(config, log);
    } catch (const std::exception& e) {
        log << "error: " << e.what() << '\n';
        return 1;
    }
    if (result.admitted == 0) {
        log << "no datasets admitted (discovered=" << result.discovered
            << ", excluded=" << result.excluded << ", errored=" << result.errored << ")\n";
        return 1;
    }

    try {
        write_csv_file(config.output_csv, result.rows);
    } catch (const std::exception& e) {
        log << "error: " << e.what() << '\n';
        return 1;
    }
    log << "wrote " << config.output_csv.string() << " (" << result.rows.size() << " rows)\n";

    if (config.plot_dir) {
        const int status = cmd_plot(config.output_csv, *config.plot_dir, log);
        if (status != 0) return status;
    }
    return 0;
}

int cmd_dist(const DistRequest& request, std::ostream& out, std::ostream& log) {
    try {
        const auto series = load_ucr_file(request.file);
        if (request.i >= series.size() || request.j >= series.size()) {
            log << "error: index out of range (file has " << series.size() << " series)\n";
            return 1;
        }
        const TimeSeries& x = series[request.i];
        const TimeSeries& y = series[request.j];
        const std::string token = lowercase(request.measure);

        if (token == "mdd") {
            const EpsilonSchedule schedule =
                request.explicit_epsilons.empty()
                    ? generic_epsilon_schedule(x.size(), request.alpha)
                    : EpsilonSchedule(request.explicit_epsilons);
            out << format_double(mdd(x, y, schedule)) << '\n';
            for (int eps : schedule.scales()) {
                out << eps << ',' << format_double(intersection_ratio(x, y, eps)) << '\n';
            }
            return 0;
        }
        if (token == "eud") {
            out << format_double(euclidean(x, y)) << '\n';
            return 0;
        }
        if (token == "dtw") {
            DtwConfig config;
            config.window = request.dtw_window;
            out << format_double(dtw(x, y, config)) << '\n';
            return 0;
        }
        if (token == "lcss") {
            out << format_double(lcss_distance(x, y, LcssConfig{request.lcss_eps, request.lcss_delta}))
                << '\n';
            return 0;
        }
        log << "error: unknown measure '" << request.measure << "'\n";
        return 1;
    } catch (const std::exception& e) {
        log << "error: " << e.what() << '\n';
        return 1;
    }
}

int cmd_plot(const std::filesystem::path& results_csv, const std::filesystem::path& out_dir,
             std::ostream& log) {
    std::vector<CsvRow> rows;
    try {
        rows = read_csv_file(results_csv);
    } catch (const std::exception& e) {
        log << "error: " << results_csv.string() << ": " << e.what() << '\n';
        return 1;
    }

    // The subject of the sharpshooter plots is the first evaluated
    // measure in the file; each other measure appearing as a reference
    // gets its own figure.
    std::string subject;
    for (const auto& r : rows) {
        if (!r.measure.empty() && r.expected_acc && r.actual_acc) {
            subject = r.measure;
            break;
        }
    }
    if (subject.empty()) {
        log << "error: " << results_csv.string() << ": no evaluated rows to plot\n";
        return 1;
    }

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        log << "error: cannot create " << out_dir.string() << ": " << ec.message() << '\n';
        return 1;
    }

    std::vector<std::string> refs;
    for (const auto& r : rows) {
        if (r.measure == subject && !r.ref_measure.empty() &&
            std::find(refs.begin(), refs.end(), r.ref_measure) == refs.end()) {
            refs.push_back(r.ref_measure);
        }
    }

    for (const auto& ref : refs) {
        std::vector<SharpshooterPoint> points;
        std::size_t excluded = 0;
        for (const auto& r : rows) {
            if (r.measure != subject || r.ref_measure != ref) continue;
            if (!r.expected_gain || !r.actual_gain) {
                ++excluded;
                continue;
            }
            SharpshooterPoint p;
            p.dataset = r.dataset;
            p.expected_gain = *r.expected_gain;
            p.actual_gain = *r.actual_gain;
            p.quadrant = sharpshooter_quadrant(p.expected_gain, p.actual_gain);
            points.push_back(std::move(p));
        }
        const auto path = out_dir / ("sharpshooter_" + ref + ".svg");
        std::ofstream svg(path);
        if (!svg) {
            log << "error: cannot write " << path.string() << '\n';
            return 1;
        }
        write_sharpshooter_svg(svg, ref, points, excluded);
        log << "wrote " << path.string() << " (" << points.size() << " points, " << excluded
            << " excluded)\n";
    }

    // Accuracy bars cover every evaluated measure; a (dataset, measure)
    // pair contributes once no matter how many gain pairings repeat it.
    std::vector<std::string> measure_order;
    std::map<std::string, std::vector<double>> expected_by_measure;
    std::map<std::string, std::vector<double>> actual_by_measure;
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& r : rows) {
        if (r.measure.empty() || !r.expected_acc || !r.actual_acc) continue;
        if (!seen.insert({r.dataset, r.measure}).second) continue;
        if (std::find(measure_order.begin(), measure_order.end(), r.measure) == measure_order.end()) {
            measure_order.push_back(r.measure);
        }
        expected_by_measure[r.measure].push_back(*r.expected_acc);
        actual_by_measure[r.measure].push_back(*r.actual_acc);
    }

    std::vector<MeasureAccuracy> bars;
    for (const auto& m : measure_order) {
        MeasureAccuracy b;
        b.measure = m;
        const auto& exp = expected_by_measure[m];
        const auto& act = actual_by_measure[m];
        b.mean_expected = mean_of(exp);
        b.sem_expected = sample_sem(exp);
        b.mean_actual = mean_of(act);
        b.sem_actual = sample_sem(act);
        b.dataset_count = exp.size();
        bars.push_back(std::move(b));
    }

    const auto bars_path = out_dir / "accuracy_bars.svg";
    std::ofstream svg(bars_path);
    if (!svg) {
        log << "error: cannot write " << bars_path.string() << '\n';
        return 1;
    }
    write_accuracy_bars_svg(svg, bars);
    log << "wrote " << bars_path.string() << " (" << bars.size() << " measures)\n";
    return 0;
}

} // namespace mdd
