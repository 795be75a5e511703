#pragma once

#include <stdexcept>

namespace stmdf {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad argument values: even window sizes, over-trimming, densities outside [0,1].
class InvalidParameter : public Error {
public:
    using Error::Error;
};

// Unreadable or unsupported file contents (PGM magic/depth, truncated rasters or masks).
class FormatError : public Error {
public:
    using Error::Error;
};

// Filesystem-level failures (missing or unwritable paths).
class IoError : public Error {
public:
    using Error::Error;
};

// Degenerate numeric input, e.g. a zero-variance image where kappa = mean/std is requested.
class DegenerateImage : public Error {
public:
    using Error::Error;
};

} // namespace stmdf
