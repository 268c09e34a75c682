#include "mdd/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace mdd {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_same_length(const TimeSeries& x, const TimeSeries& y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("series must have the same length");
    }
}

double squared(double v) { return v * v; }

// 1-NN LOOCV accuracy under a fixed band; distance ties break toward the
// smaller training index, matching the evaluation pipeline.
double loocv_under_window(std::span<const TimeSeries> train, const DtwConfig& config) {
    const std::size_t n = train.size();
    std::vector<unsigned char> correct(n, 0);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        double best = kInf;
        std::size_t best_j = n;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == static_cast<std::size_t>(i)) continue;
            const double d = dtw(train[j], train[i], config);
            if (d < best) {
                best = d;
                best_j = j;
            }
        }
        correct[i] = train[best_j].label() == train[i].label() ? 1 : 0;
    }
    const auto hits = std::accumulate(correct.begin(), correct.end(), 0LL);
    return static_cast<double>(hits) / static_cast<double>(n);
}

} // namespace

double euclidean(const TimeSeries& x, const TimeSeries& y) {
    check_same_length(x, y);
    double sum = 0.0;
    for (std::size_t t = 0; t < x.size(); ++t) {
        sum += squared(x[t] - y[t]);
    }
    return std::sqrt(sum);
}

double dtw(const TimeSeries& x, const TimeSeries& y, const DtwConfig& config) {
    check_same_length(x, y);
    const int n = static_cast<int>(x.size());
    int w = n - 1;
    if (config.window) {
        if (*config.window < 0) {
            throw std::invalid_argument("warping window must be non-negative");
        }
        w = std::min(*config.window, n - 1);
    }

    const auto& xs = x.values();
    const auto& ys = y.values();
    std::vector<double> prev(n, kInf);
    std::vector<double> cur(n, kInf);
    for (int i = 0; i < n; ++i) {
        const int jlo = std::max(0, i - w);
        const int jhi = std::min(n - 1, i + w);
        std::fill(cur.begin(), cur.end(), kInf);
        for (int j = jlo; j <= jhi; ++j) {
            const double cost = squared(xs[i] - ys[j]);
            if (i == 0 && j == 0) {
                cur[j] = cost;
                continue;
            }
            double best = prev[j];
            if (j > 0) {
                best = std::min(best, prev[j - 1]);
                best = std::min(best, cur[j - 1]);
            }
            cur[j] = cost + best;
        }
        std::swap(prev, cur);
    }
    return std::sqrt(prev[n - 1]);
}

double lcss_distance(const TimeSeries& x, const TimeSeries& y, const LcssConfig& config) {
    check_same_length(x, y);
    if (!(config.match_epsilon > 0.0)) {
        throw std::invalid_argument("LCSS match threshold must be positive");
    }
    if (config.delta && *config.delta < 0) {
        throw std::invalid_argument("LCSS temporal window must be non-negative");
    }
    const int n = static_cast<int>(x.size());
    const int m = static_cast<int>(y.size());

    std::vector<int> prev(m + 1, 0);
    std::vector<int> cur(m + 1, 0);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= m; ++j) {
            const bool in_window = !config.delta || std::abs(i - j) <= *config.delta;
            if (in_window && std::abs(x[i - 1] - y[j - 1]) <= config.match_epsilon) {
                cur[j] = prev[j - 1] + 1;
            } else {
                cur[j] = std::max(prev[j], cur[j - 1]);
            }
        }
        std::swap(prev, cur);
    }
    const int lcss = prev[m];
    return 1.0 - static_cast<double>(lcss) / static_cast<double>(std::min(n, m));
}

std::vector<int> default_dtw_window_grid() {
    std::vector<int> grid(21);
    std::iota(grid.begin(), grid.end(), 0);
    return grid;
}

DtwConfig learn_dtw_window(std::span<const TimeSeries> train, std::span<const int> window_percents) {
    if (train.empty()) {
        throw std::invalid_argument("window learning needs a non-empty training set");
    }
    if (window_percents.empty()) {
        throw std::invalid_argument("window learning needs at least one candidate");
    }
    for (int p : window_percents) {
        if (p < 0 || p > 100) {
            throw std::invalid_argument("window percentages must lie in [0,100]");
        }
    }
    const int d = static_cast<int>(train.front().size());
    // the evaluation loop below runs under OpenMP and must not throw
    for (const auto& s : train) {
        if (static_cast<int>(s.size()) != d) {
            throw std::invalid_argument("series must have the same length");
        }
    }

    std::vector<int> percents(window_percents.begin(), window_percents.end());
    std::sort(percents.begin(), percents.end());

    // Distinct sample windows, ascending; duplicates collapse to the
    // smallest percentage that produced them.
    std::vector<int> windows;
    for (int p : percents) {
        const int w = p * d / 100;
        if (windows.empty() || windows.back() != w) {
            windows.push_back(w);
        }
    }

    if (train.size() < 2) {
        return DtwConfig::banded(windows.front());
    }

    int best_window = windows.front();
    double best_acc = -1.0;
    for (int w : windows) {
        const double acc = loocv_under_window(train, DtwConfig::banded(w));
        if (acc > best_acc) {
            best_acc = acc;
            best_window = w;
        }
    }
    return DtwConfig::banded(best_window);
}

} // namespace mdd
