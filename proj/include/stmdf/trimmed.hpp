#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "stmdf/image.hpp"

namespace stmdf {

/// Trim configuration for the switching trimmed mean deviation filter.
/// trim_fraction is the share of samples discarded from EACH end of the
/// sorted window; it must leave at least one sample.
struct TrimSpec {
    double trim_fraction = 1.0 / 3.0;
    std::size_t window_size = 3;
};

/// Per-window order statistics derived from the trimmed mean.
struct DeviationSet {
    std::vector<double> deviation_vector; // trimmed mean minus each sample, window order
    std::vector<double> tmad;             // elementwise absolute deviations
    double ctmd = 0.0;                    // trimmed mean minus center sample
    double trimmed_mean = 0.0;
};

/// Sorts ascending, drops floor(trim_fraction * n) samples from each end and
/// averages the rest. trim_fraction 0 reduces to the arithmetic mean.
double trimmed_mean(std::span<const double> samples, double trim_fraction);

DeviationSet deviations(const Window& win, double trim_fraction);

/// Switching trimmed mean deviation filter: a pixel is kept when the centered
/// trimmed mean deviation stays within tau, else replaced by its window's
/// trimmed mean. Non-recursive: every window reads the input image.
Image stmdf_filter(const Image& img, const TrimSpec& spec, double tau, int threads = 1);

} // namespace stmdf
