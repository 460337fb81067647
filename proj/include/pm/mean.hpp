#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pm {

// Family of bivariate means used to normalize pair- and edge-overlap
// counts. Every member lies between min and max of its arguments, which is
// what makes the normalized scores fall in [0, 1].
enum class MeanKind { arithmetic, geometric, minimum, maximum };

inline double mean_of(MeanKind kind, double x, double y) {
    switch (kind) {
        case MeanKind::arithmetic: return (x + y) / 2.0;
        case MeanKind::geometric: return std::sqrt(x * y);
        case MeanKind::minimum: return std::min(x, y);
        case MeanKind::maximum: return std::max(x, y);
    }
    throw std::invalid_argument("unknown mean kind");
}

// Short ids used in measure names and on the command line.
inline std::string to_string(MeanKind kind) {
    switch (kind) {
        case MeanKind::arithmetic: return "mn";
        case MeanKind::geometric: return "gmn";
        case MeanKind::minimum: return "min";
        case MeanKind::maximum: return "max";
    }
    throw std::invalid_argument("unknown mean kind");
}

inline MeanKind parse_mean_kind(std::string_view id) {
    if (id == "mn") return MeanKind::arithmetic;
    if (id == "gmn") return MeanKind::geometric;
    if (id == "min") return MeanKind::minimum;
    if (id == "max") return MeanKind::maximum;
    throw std::invalid_argument("unknown mean kind '" + std::string(id) +
                                "' (expected mn, gmn, min or max)");
}

} // namespace pm
