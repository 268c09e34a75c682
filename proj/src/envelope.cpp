#include "mdd/envelope.hpp"

#include "sliding_window.hpp"

#include <algorithm>
#include <stdexcept>

namespace mdd {

namespace {

// Window extrema over [t-eps, t+eps] clamped to [0, d). Both window edges
// advance by one position per step, so every index enters and leaves the
// queue exactly once.
template <bool Max>
void sliding_extrema(const std::vector<double>& v, int eps, std::vector<double>& out) {
    const int d = static_cast<int>(v.size());
    detail::SlidingExtremum<Max> window(v);
    int next = 0; // next index not yet admitted
    for (int t = 0; t < d; ++t) {
        const int hi = std::min(d - 1, t + eps);
        for (; next <= hi; ++next) {
            window.admit(next);
        }
        window.evict_before(std::max(0, t - eps));
        out[t] = window.front();
    }
}

void check_epsilon(int epsilon) {
    if (epsilon < 0) {
        throw std::invalid_argument("envelope scale must be non-negative");
    }
}

} // namespace

Envelope compute_envelope(const TimeSeries& x, int epsilon) {
    check_epsilon(epsilon);
    Envelope env;
    env.epsilon = epsilon;
    env.upper.resize(x.size());
    env.lower.resize(x.size());
    sliding_extrema<true>(x.values(), epsilon, env.upper);
    sliding_extrema<false>(x.values(), epsilon, env.lower);
    return env;
}

Envelope naive_envelope_oracle(const TimeSeries& x, int epsilon) {
    check_epsilon(epsilon);
    const auto& v = x.values();
    const int d = static_cast<int>(v.size());
    Envelope env;
    env.epsilon = epsilon;
    env.upper.resize(v.size());
    env.lower.resize(v.size());
    for (int t = 0; t < d; ++t) {
        const int lo = std::max(0, t - epsilon);
        const int hi = std::min(d - 1, t + epsilon);
        double mx = v[lo];
        double mn = v[lo];
        for (int s = lo + 1; s <= hi; ++s) {
            mx = std::max(mx, v[s]);
            mn = std::min(mn, v[s]);
        }
        env.upper[t] = mx;
        env.lower[t] = mn;
    }
    return env;
}

} // namespace mdd
