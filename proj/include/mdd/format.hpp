#pragma once

#include <charconv>
#include <string>

namespace mdd {

// Shortest decimal form that reparses to the identical double. Keeps CSV
// and SVG output byte-stable and round-trip exact.
inline std::string format_double(double v) {
    char buf[40];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, end);
}

} // namespace mdd
