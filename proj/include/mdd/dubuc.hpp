#pragma once

#include "mdd/envelope.hpp"

#include <span>
#include <string>

namespace mdd {

// Strictly increasing, positive scales at which a pair of series is
// compared. Every scale must be smaller than the length of the series it
// is applied to; that is checked at the point of use.
class EpsilonSchedule {
public:
    explicit EpsilonSchedule(std::vector<int> scales);

    std::span<const int> scales() const noexcept { return scales_; }
    std::size_t size() const noexcept { return scales_.size(); }
    int front() const noexcept { return scales_.front(); }
    int back() const noexcept { return scales_.back(); }

    // "1,2,4,8"
    std::string to_string() const;

private:
    std::vector<int> scales_;
};

// All powers of two p with 1 <= p <= alpha*d, ascending.
// Example: d=200, alpha=0.4 -> {1,2,4,8,16,32,64}.
EpsilonSchedule generic_epsilon_schedule(std::size_t d, double alpha);

// Variation of the trace at scale epsilon:
//   V(eps) = (1/eps^2) * sum_t (upper(t) - lower(t)).
// Requires epsilon >= 1. Zero exactly when the series is constant.
double dubuc_variation(const TimeSeries& x, int epsilon);

// Per-timestamp overlap of two envelopes of equal length and scale:
//   sum_t max(min(u_a, u_b) - max(l_a, l_b), 0).
double envelope_intersection(const Envelope& a, const Envelope& b);

// Per-timestamp span of two envelopes of equal length and scale:
//   sum_t max(max(u_a, u_b) - min(l_a, l_b), 0).
double envelope_union(const Envelope& a, const Envelope& b);

// Jaccard-style overlap of the two envelopes at one scale, in [0,1].
// A zero union can only happen when both envelopes are zero-width and
// coincide everywhere, i.e. the series are identical, so that degenerate
// case evaluates to 1.
double intersection_ratio(const TimeSeries& x, const TimeSeries& y, int epsilon);

// Multiscale Dubuc similarity: the trapezoidal area under the curve of
// intersection ratios across the schedule, normalized by the scale span
// (eps_last - eps_first) so the result stays in [0,1]. A single-scale
// schedule degenerates to the bare intersection ratio.
double mds(const TimeSeries& x, const TimeSeries& y, const EpsilonSchedule& schedule);

// Multiscale Dubuc distance, 1 - mds. A pseudometric: non-negative,
// symmetric, zero on identical inputs, and satisfying the triangle
// inequality; distinct series can still sit at distance zero.
double mdd(const TimeSeries& x, const TimeSeries& y, const EpsilonSchedule& schedule);

} // namespace mdd
