#include "mdd/time_series.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace mdd {

TimeSeries::TimeSeries(std::vector<double> values, std::string label)
    : values_(std::move(values)), label_(std::move(label)) {
    if (values_.empty()) {
        throw std::invalid_argument("time series must contain at least one observation");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("time series observations must be finite");
        }
    }
}

} // namespace mdd
