#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pm {

// Raised when a measure's denominator vanishes (e.g. ARI of two trivial
// partitions). Callers that sweep random inputs catch this and count the
// trial as degenerate instead of aborting.
class DegenerateMeasure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// File-format error carrying the 1-based line number it was detected on.
// Line 0 means the problem is not tied to a single line (e.g. a vertex
// missing from a partition file).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error(line == 0 ? message
                                       : "line " + std::to_string(line) + ": " + message),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

} // namespace pm
