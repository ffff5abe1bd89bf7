#pragma once

#include <stdexcept>
#include <string>

namespace gmf {

// Operand shapes do not line up (matrix/vector dims, channel counts).
struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A kernel op produced or was handed a NaN/Inf.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input file (CSV, split spec, config). Message carries file/line.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File-level I/O failure (missing, truncated, bad magic/version).
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// API misuse: wrong mode, stale cache, invalid configuration value.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace gmf
