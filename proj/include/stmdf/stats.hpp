#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "stmdf/csv.hpp"
#include "stmdf/image.hpp"

namespace stmdf {

struct ImageStats {
    double mean = 0.0;
    double std_dev = 0.0;          // population (divide-by-N) standard deviation
    double entropy = 0.0;          // bits, 256-bin histogram
    double extreme_fraction = 0.0; // share of pixels at 0 or 255 after rounding
};

/// Shannon entropy in bits of the 256-bin gray-level histogram. Fractional
/// working pixels are binned by round-half-away-from-zero.
double image_entropy(const Image& img);

/// Global mean and population standard deviation.
std::pair<double, double> global_mean_std(const Image& img);

/// Entropy-guided switching threshold: (mean - std) scaled by the histogram
/// entropy expressed as a fraction of its 8-bit maximum. Negative results are
/// returned as-is; callers opt into clamping.
double entropy_threshold(const Image& img);

/// Diffusion threshold kappa = mean / std of the given iterate. Throws
/// DegenerateImage when std == 0 (callers substitute a fallback).
double diffusion_kappa(const Image& img);

/// Fraction of pixels whose rounded value is exactly 0 or 255.
double estimate_noise_density(const Image& img);

ImageStats image_stats(const Image& img);

/// One row per density: inject salt-and-pepper noise (per-density seed
/// derived from `seed`) and record the noisy image's statistics.
/// Columns: density,mean,std,entropy,extreme_fraction
CsvTable stats_sweep(const Image& img, const std::vector<double>& densities, std::uint64_t seed);

} // namespace stmdf
