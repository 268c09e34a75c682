#include "mdd/dubuc.hpp"

#include "sliding_window.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mdd {

namespace {

void check_same_length(const TimeSeries& x, const TimeSeries& y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("series must have the same length");
    }
}

void check_compatible(const Envelope& a, const Envelope& b) {
    if (a.upper.size() != b.upper.size()) {
        throw std::invalid_argument("envelopes must have the same length");
    }
    if (a.epsilon != b.epsilon) {
        throw std::invalid_argument("envelopes must share the same scale");
    }
}

// Overlap ratio at one scale straight off the traces: the four window
// queues advance in lockstep, so nothing envelope-sized is materialized
// on the distance path. Per-timestamp terms and their left-to-right
// accumulation match the envelope-based route bit for bit, and min/max
// pick the same bound values for (x,y) and (y,x), so the ratio is
// exactly symmetric.
double fused_ratio(const std::vector<double>& xs, const std::vector<double>& ys, int eps) {
    const int d = static_cast<int>(xs.size());
    detail::SlidingMax upper_x(xs);
    detail::SlidingMin lower_x(xs);
    detail::SlidingMax upper_y(ys);
    detail::SlidingMin lower_y(ys);

    double inter = 0.0;
    double uni = 0.0;
    int next = 0;
    for (int t = 0; t < d; ++t) {
        const int hi = std::min(d - 1, t + eps);
        for (; next <= hi; ++next) {
            upper_x.admit(next);
            lower_x.admit(next);
            upper_y.admit(next);
            lower_y.admit(next);
        }
        const int lo = std::max(0, t - eps);
        upper_x.evict_before(lo);
        lower_x.evict_before(lo);
        upper_y.evict_before(lo);
        lower_y.evict_before(lo);

        const double hi_in = std::min(upper_x.front(), upper_y.front());
        const double lo_in = std::max(lower_x.front(), lower_y.front());
        const double hi_out = std::max(upper_x.front(), upper_y.front());
        const double lo_out = std::min(lower_x.front(), lower_y.front());
        inter += std::max(hi_in - lo_in, 0.0);
        uni += std::max(hi_out - lo_out, 0.0);
    }
    if (uni == 0.0) {
        return 1.0; // zero-width coincident envelopes: identical series
    }
    return inter / uni;
}

} // namespace

EpsilonSchedule::EpsilonSchedule(std::vector<int> scales) : scales_(std::move(scales)) {
    if (scales_.empty()) {
        throw std::invalid_argument("epsilon schedule must not be empty");
    }
    int prev = 0;
    for (int s : scales_) {
        if (s < 1) {
            throw std::invalid_argument("epsilon scales must be positive");
        }
        if (s <= prev) {
            throw std::invalid_argument("epsilon scales must be strictly increasing");
        }
        prev = s;
    }
}

std::string EpsilonSchedule::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < scales_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(scales_[i]);
    }
    return out;
}

EpsilonSchedule generic_epsilon_schedule(std::size_t d, double alpha) {
    if (d < 3) {
        throw std::invalid_argument("schedule construction needs series length >= 3");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("alpha must lie in (0,1)");
    }
    const double limit = alpha * static_cast<double>(d);
    if (limit < 1.0) {
        throw std::invalid_argument("alpha*d < 1 leaves no admissible scale");
    }
    std::vector<int> scales;
    for (long long p = 1; static_cast<double>(p) <= limit; p *= 2) {
        scales.push_back(static_cast<int>(p));
    }
    return EpsilonSchedule(std::move(scales));
}

double dubuc_variation(const TimeSeries& x, int epsilon) {
    if (epsilon < 1) {
        throw std::invalid_argument("variation is undefined for epsilon < 1");
    }
    const Envelope env = compute_envelope(x, epsilon);
    double widths = 0.0;
    for (std::size_t t = 0; t < env.size(); ++t) {
        widths += env.upper[t] - env.lower[t];
    }
    return widths / (static_cast<double>(epsilon) * static_cast<double>(epsilon));
}

double envelope_intersection(const Envelope& a, const Envelope& b) {
    check_compatible(a, b);
    double inter = 0.0;
    for (std::size_t t = 0; t < a.upper.size(); ++t) {
        const double hi = std::min(a.upper[t], b.upper[t]);
        const double lo = std::max(a.lower[t], b.lower[t]);
        inter += std::max(hi - lo, 0.0);
    }
    return inter;
}

double envelope_union(const Envelope& a, const Envelope& b) {
    check_compatible(a, b);
    double uni = 0.0;
    for (std::size_t t = 0; t < a.upper.size(); ++t) {
        const double hi = std::max(a.upper[t], b.upper[t]);
        const double lo = std::min(a.lower[t], b.lower[t]);
        uni += std::max(hi - lo, 0.0);
    }
    return uni;
}

double intersection_ratio(const TimeSeries& x, const TimeSeries& y, int epsilon) {
    check_same_length(x, y);
    if (epsilon < 0) {
        throw std::invalid_argument("envelope scale must be non-negative");
    }
    return fused_ratio(x.values(), y.values(), epsilon);
}

double mds(const TimeSeries& x, const TimeSeries& y, const EpsilonSchedule& schedule) {
    check_same_length(x, y);
    const auto scales = schedule.scales();
    if (scales.back() >= static_cast<int>(x.size())) {
        throw std::invalid_argument("every scale must be smaller than the series length");
    }

    std::vector<double> ratios;
    ratios.reserve(scales.size());
    for (int eps : scales) {
        ratios.push_back(intersection_ratio(x, y, eps));
    }
    if (ratios.size() == 1) {
        return ratios.front();
    }

    // Trapezoidal area over the ratio curve, then divided by the scale
    // span. Each trapezoid is bounded by its own width, and all partial
    // bounds are exactly representable, so the quotient never leaves
    // [0,1] even after rounding.
    double area = 0.0;
    for (std::size_t i = 1; i < ratios.size(); ++i) {
        const double width = static_cast<double>(scales[i] - scales[i - 1]);
        area += 0.5 * (ratios[i - 1] + ratios[i]) * width;
    }
    return area / static_cast<double>(scales.back() - scales.front());
}

double mdd(const TimeSeries& x, const TimeSeries& y, const EpsilonSchedule& schedule) {
    return 1.0 - mds(x, y, schedule);
}

} // namespace mdd
