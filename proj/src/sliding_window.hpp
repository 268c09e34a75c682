#pragma once

#include <vector>

namespace mdd::detail {

// Monotonic index queue over a window that only moves forward. Indices
// are admitted in order; evict_before drops entries that left the
// window. front() is the current window extremum.
template <bool Max>
class SlidingExtremum {
public:
    explicit SlidingExtremum(const std::vector<double>& values)
        : values_(values), queue_(values.size()) {}

    void admit(int index) {
        if constexpr (Max) {
            while (tail_ > head_ && values_[queue_[tail_ - 1]] <= values_[index]) --tail_;
        } else {
            while (tail_ > head_ && values_[queue_[tail_ - 1]] >= values_[index]) --tail_;
        }
        queue_[tail_++] = index;
    }

    void evict_before(int lo) {
        while (queue_[head_] < lo) ++head_;
    }

    double front() const { return values_[queue_[head_]]; }

private:
    const std::vector<double>& values_;
    std::vector<int> queue_;
    int head_ = 0;
    int tail_ = 0;
};

using SlidingMax = SlidingExtremum<true>;
using SlidingMin = SlidingExtremum<false>;

} // namespace mdd::detail
