#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace mdd {

// Equal-interval univariate series with an optional class label.
// Validation happens once at construction: the series must be non-empty
// and every observation finite. Timestamps are the implicit indices.
class TimeSeries {
public:
    explicit TimeSeries(std::vector<double> values, std::string label = {});

    const std::vector<double>& values() const noexcept { return values_; }
    const std::string& label() const noexcept { return label_; }
    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t t) const noexcept { return values_[t]; }

private:
    std::vector<double> values_;
    std::string label_;
};

} // namespace mdd
