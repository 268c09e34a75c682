#include "mdd/runner.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

int main(int argc, char** argv) {
    CLI::App app{"Multiscale Dubuc distance benchmark for UCR-format time series"};
    app.require_subcommand(1);

    // run
    mdd::RunConfig run_config;
    std::string data_dir;
    std::string out_csv = "results.csv";
    std::string plot_dir;
    auto* run = app.add_subcommand("run", "Evaluate measures over a dataset directory");
    run->add_option("--data-dir", data_dir, "Directory with <Name>_TRAIN.tsv / <Name>_TEST.tsv pairs")
        ->required();
    run->add_option("--datasets", run_config.dataset_filter, "Only these dataset names")
        ->delimiter(',');
    run->add_option("--measures", run_config.measures, "Measures to evaluate (mdd,eud,dtw,lcss)")
        ->delimiter(',');
    run->add_option("--alpha", run_config.alpha, "Scale cap fraction for the generic schedule");
    run->add_option("--epsilons", run_config.explicit_epsilons,
                    "Explicit scales overriding the generic schedule")
        ->delimiter(',');
    run->add_option("--max-len", run_config.max_len, "Admission cap on series length");
    run->add_flag("--normalize", run_config.normalize, "Z-normalize each series at load time");
    run->add_option("--out", out_csv, "Output CSV path");
    run->add_option("--plot-dir", plot_dir, "Directory for SVG figures");
    run->add_option("--jobs", run_config.jobs, "Worker threads (0 = all cores)");
    run->add_option("--lcss-eps", run_config.lcss_eps, "LCSS amplitude match threshold");
    run->add_option("--lcss-delta", run_config.lcss_delta, "LCSS temporal window");
    run->add_option("--dtw-window-grid", run_config.dtw_window_grid,
                    "Candidate DTW windows as percentages of d")
        ->delimiter(',');

    // dist
    mdd::DistRequest dist_request;
    std::string dist_file;
    auto* dist = app.add_subcommand("dist", "Distance between two series of one file");
    dist->add_option("--measure", dist_request.measure, "mdd, eud, dtw or lcss");
    dist->add_option("--file", dist_file, "UCR-format file")->required();
    dist->add_option("-i", dist_request.i, "First series index (0-based)")->required();
    dist->add_option("-j", dist_request.j, "Second series index (0-based)")->required();
    dist->add_option("--alpha", dist_request.alpha, "Scale cap fraction for the generic schedule");
    dist->add_option("--epsilons", dist_request.explicit_epsilons, "Explicit scales")
        ->delimiter(',');
    dist->add_option("--dtw-window", dist_request.dtw_window,
                     "DTW band half-width in samples (default unconstrained)");
    dist->add_option("--lcss-eps", dist_request.lcss_eps, "LCSS amplitude match threshold");
    dist->add_option("--lcss-delta", dist_request.lcss_delta, "LCSS temporal window");

    // plot
    std::string plot_csv;
    std::string plot_out_dir;
    auto* plot = app.add_subcommand("plot", "Render SVG figures from a results CSV");
    plot->add_option("--csv", plot_csv, "Results CSV produced by 'run'")->required();
    plot->add_option("--out-dir", plot_out_dir, "Directory for SVG figures")->required();

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) {
        run_config.data_dir = data_dir;
        run_config.output_csv = out_csv;
        if (!plot_dir.empty()) {
            run_config.plot_dir = plot_dir;
        }
        return mdd::cmd_run(run_config, std::cerr);
    }
    if (dist->parsed()) {
        dist_request.file = dist_file;
        return mdd::cmd_dist(dist_request, std::cout, std::cerr);
    }
    return mdd::cmd_plot(plot_csv, plot_out_dir, std::cerr);
}
