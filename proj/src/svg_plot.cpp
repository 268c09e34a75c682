#include "mdd/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace mdd {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 25.0;
constexpr double kTop = 45.0;
constexpr double kBottom = 55.0;

std::string fixed(double v, int precision = 2) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*f", precision, v);
    return buf;
}

std::string sig3(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

void svg_open(std::ostream& out) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" fill=\"white\"/>\n";
}

void text(std::ostream& out, double x, double y, const std::string& s, const char* anchor = "middle",
          int size = 13, const char* extra = "") {
    out << "<text x=\"" << fixed(x) << "\" y=\"" << fixed(y) << "\" text-anchor=\"" << anchor
        << "\" font-family=\"sans-serif\" font-size=\"" << size << "\"" << extra << ">" << s
        << "</text>\n";
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

} // namespace

void write_sharpshooter_svg(std::ostream& out, std::string_view ref_measure,
                            std::span<const SharpshooterPoint> points, std::size_t excluded) {
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;

    // Symmetric log range around gain 1 so reciprocal gains mirror each
    // other. Nonpositive gains cannot sit on a log axis; they clamp to
    // the plot edge.
    double limit = 0.15;
    for (const auto& p : points) {
        if (p.expected_gain > 0.0) limit = std::max(limit, std::abs(std::log10(p.expected_gain)));
        if (p.actual_gain > 0.0) limit = std::max(limit, std::abs(std::log10(p.actual_gain)));
    }
    limit *= 1.15;

    auto log_or_edge = [&](double gain) {
        if (!(gain > 0.0)) return -limit;
        return std::clamp(std::log10(gain), -limit, limit);
    };
    auto px = [&](double gain) { return kLeft + (log_or_edge(gain) + limit) / (2.0 * limit) * plot_w; };
    auto py = [&](double gain) {
        return kTop + plot_h - (log_or_edge(gain) + limit) / (2.0 * limit) * plot_h;
    };

    svg_open(out);
    out << "<!-- excluded: " << excluded << " undefined-gain rows -->\n";
    text(out, kWidth / 2.0, 24.0, "Accuracy gain vs " + escape(std::string(ref_measure)), "middle", 16);

    out << "<rect x=\"" << fixed(kLeft) << "\" y=\"" << fixed(kTop) << "\" width=\"" << fixed(plot_w)
        << "\" height=\"" << fixed(plot_h) << "\" fill=\"none\" stroke=\"#444444\"/>\n";

    // quadrant boundaries at gain 1
    out << "<line x1=\"" << fixed(px(1.0)) << "\" y1=\"" << fixed(kTop) << "\" x2=\"" << fixed(px(1.0))
        << "\" y2=\"" << fixed(kTop + plot_h) << "\" stroke=\"#999999\" stroke-dasharray=\"4,3\"/>\n";
    out << "<line x1=\"" << fixed(kLeft) << "\" y1=\"" << fixed(py(1.0)) << "\" x2=\""
        << fixed(kLeft + plot_w) << "\" y2=\"" << fixed(py(1.0))
        << "\" stroke=\"#999999\" stroke-dasharray=\"4,3\"/>\n";

    text(out, kLeft + plot_w - 8.0, kTop + 16.0, "TP", "end", 12, " fill=\"#2a7e2a\"");
    text(out, kLeft + 8.0, kTop + 16.0, "FN", "start", 12, " fill=\"#b05000\"");
    text(out, kLeft + plot_w - 8.0, kTop + plot_h - 8.0, "FP", "end", 12, " fill=\"#b05000\"");
    text(out, kLeft + 8.0, kTop + plot_h - 8.0, "TN", "start", 12, " fill=\"#555555\"");

    // axis tick labels at the extremes and at gain 1
    const double gmin = std::pow(10.0, -limit);
    const double gmax = std::pow(10.0, limit);
    text(out, px(gmin), kTop + plot_h + 18.0, sig3(gmin), "middle", 11);
    text(out, px(1.0), kTop + plot_h + 18.0, "1", "middle", 11);
    text(out, px(gmax), kTop + plot_h + 18.0, sig3(gmax), "middle", 11);
    text(out, kLeft - 10.0, py(gmin) + 4.0, sig3(gmin), "end", 11);
    text(out, kLeft - 10.0, py(1.0) + 4.0, "1", "end", 11);
    text(out, kLeft - 10.0, py(gmax) + 4.0, sig3(gmax), "end", 11);

    text(out, kLeft + plot_w / 2.0, kHeight - 14.0, "expected accuracy gain (log scale)");
    out << "<text x=\"" << fixed(20.0) << "\" y=\"" << fixed(kTop + plot_h / 2.0)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" transform=\"rotate(-90 "
        << fixed(20.0) << ' ' << fixed(kTop + plot_h / 2.0)
        << ")\">actual accuracy gain (log scale)</text>\n";

    for (const auto& p : points) {
        out << "<circle cx=\"" << fixed(px(p.expected_gain)) << "\" cy=\"" << fixed(py(p.actual_gain))
            << "\" r=\"4\" fill=\"#3567b0\" fill-opacity=\"0.75\" data-dataset=\""
            << escape(p.dataset) << "\" data-quadrant=\"" << quadrant_name(p.quadrant) << "\"/>\n";
    }
    out << "</svg>\n";
}

void write_accuracy_bars_svg(std::ostream& out, std::span<const MeasureAccuracy> bars) {
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;

    auto py = [&](double acc) { return kTop + plot_h - std::clamp(acc, 0.0, 1.0) * plot_h; };

    svg_open(out);
    text(out, kWidth / 2.0, 24.0, "Mean 1-NN accuracy per measure", "middle", 16);
    out << "<rect x=\"" << fixed(kLeft) << "\" y=\"" << fixed(kTop) << "\" width=\"" << fixed(plot_w)
        << "\" height=\"" << fixed(plot_h) << "\" fill=\"none\" stroke=\"#444444\"/>\n";

    for (int i = 0; i <= 4; ++i) {
        const double acc = 0.25 * i;
        out << "<line x1=\"" << fixed(kLeft) << "\" y1=\"" << fixed(py(acc)) << "\" x2=\""
            << fixed(kLeft + plot_w) << "\" y2=\"" << fixed(py(acc))
            << "\" stroke=\"#dddddd\"/>\n";
        text(out, kLeft - 10.0, py(acc) + 4.0, fixed(acc, 2), "end", 11);
    }

    const double group_w = bars.empty() ? plot_w : plot_w / static_cast<double>(bars.size());
    const double bar_w = std::min(48.0, group_w * 0.28);

    for (std::size_t i = 0; i < bars.size(); ++i) {
        const auto& b = bars[i];
        const double cx = kLeft + group_w * (static_cast<double>(i) + 0.5);
        const double ex = cx - bar_w - 4.0;
        const double ax = cx + 4.0;

        auto bar = [&](double x, double mean, double sem, const char* color, const char* kind) {
            out << "<rect x=\"" << fixed(x) << "\" y=\"" << fixed(py(mean)) << "\" width=\""
                << fixed(bar_w) << "\" height=\"" << fixed(py(0.0) - py(mean)) << "\" fill=\"" << color
                << "\" data-measure=\"" << escape(b.measure) << "\" data-kind=\"" << kind << "\"/>\n";
            const double mid = x + bar_w / 2.0;
            if (sem > 0.0) {
                out << "<line x1=\"" << fixed(mid) << "\" y1=\"" << fixed(py(mean - sem)) << "\" x2=\""
                    << fixed(mid) << "\" y2=\"" << fixed(py(mean + sem))
                    << "\" stroke=\"#222222\"/>\n";
                out << "<line x1=\"" << fixed(mid - 5.0) << "\" y1=\"" << fixed(py(mean - sem))
                    << "\" x2=\"" << fixed(mid + 5.0) << "\" y2=\"" << fixed(py(mean - sem))
                    << "\" stroke=\"#222222\"/>\n";
                out << "<line x1=\"" << fixed(mid - 5.0) << "\" y1=\"" << fixed(py(mean + sem))
                    << "\" x2=\"" << fixed(mid + 5.0) << "\" y2=\"" << fixed(py(mean + sem))
                    << "\" stroke=\"#222222\"/>\n";
            }
            text(out, mid, py(mean) - 6.0, fixed(mean, 3), "middle", 10);
        };

        bar(ex, b.mean_expected, b.sem_expected, "#4878cf", "expected");
        bar(ax, b.mean_actual, b.sem_actual, "#ee854a", "actual");

        text(out, cx, kTop + plot_h + 18.0, escape(b.measure), "middle", 12);
        text(out, cx, kTop + plot_h + 34.0, "n=" + std::to_string(b.dataset_count), "middle", 10);
    }

    // legend
    out << "<rect x=\"" << fixed(kLeft + 8.0) << "\" y=\"" << fixed(kTop + 8.0)
        << "\" width=\"12\" height=\"12\" fill=\"#4878cf\"/>\n";
    text(out, kLeft + 26.0, kTop + 18.0, "expected", "start", 11);
    out << "<rect x=\"" << fixed(kLeft + 98.0) << "\" y=\"" << fixed(kTop + 8.0)
        << "\" width=\"12\" height=\"12\" fill=\"#ee854a\"/>\n";
    text(out, kLeft + 116.0, kTop + 18.0, "actual", "start", 11);

    out << "</svg>\n";
}

} // namespace mdd
