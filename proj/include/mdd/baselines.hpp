#pragma once

#include "mdd/time_series.hpp"

#include <optional>
#include <span>
#include <vector>

namespace mdd {

// Sakoe-Chiba band half-width in samples. Absent = unconstrained.
struct DtwConfig {
    std::optional<int> window;

    static DtwConfig unconstrained() { return {}; }
    static DtwConfig banded(int half_width) { return {half_width}; }
};

struct LcssConfig {
    double match_epsilon = 1.0;      // amplitude threshold for point matches
    std::optional<int> delta;        // optional temporal window on |i-j|
};

// sqrt(sum_t (x_t - y_t)^2). Lock-step; lengths must agree.
double euclidean(const TimeSeries& x, const TimeSeries& y);

// Dynamic time warping with squared-difference local cost and a final
// square root, so a window of 0 coincides with euclidean() exactly.
// Cost never increases as the band widens.
double dtw(const TimeSeries& x, const TimeSeries& y, const DtwConfig& config = {});

// 1 - LCSS_length / min(|x|, |y|), in [0,1]. Points match when their
// amplitudes differ by at most match_epsilon and, if delta is set, their
// indices by at most delta.
double lcss_distance(const TimeSeries& x, const TimeSeries& y, const LcssConfig& config = {});

// Candidate band widths for learn_dtw_window, as percentages of the
// series length: 0..20 in 1-point steps.
std::vector<int> default_dtw_window_grid();

// Picks the band (given as percentages of d, floored to samples) that
// maximizes 1-NN leave-one-out accuracy on the training set. Ties break
// toward the smallest window.
DtwConfig learn_dtw_window(std::span<const TimeSeries> train, std::span<const int> window_percents);

} // namespace mdd
