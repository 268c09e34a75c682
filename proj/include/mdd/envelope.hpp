#pragma once

#include "mdd/time_series.hpp"

namespace mdd {

// Sliding-window extrema band around a trace at scale epsilon:
//   upper[t] = max x[s],  lower[t] = min x[s]
// over s in [t - epsilon, t + epsilon], clamped to the series bounds.
// At epsilon = 0 the band collapses onto the trace itself; the band only
// widens as epsilon grows.
struct Envelope {
    int epsilon = 0;
    std::vector<double> upper;
    std::vector<double> lower;

    std::size_t size() const noexcept { return upper.size(); }
};

// Monotonic-queue sliding extrema, amortized O(1) per element, so the
// whole envelope is O(d) for any fixed epsilon.
Envelope compute_envelope(const TimeSeries& x, int epsilon);

// Direct O(d*epsilon) window scan with the same output contract.
// Reference implementation: tests check compute_envelope against it
// element-exact, and the benchmark tool compares their throughput.
Envelope naive_envelope_oracle(const TimeSeries& x, int epsilon);

} // namespace mdd
