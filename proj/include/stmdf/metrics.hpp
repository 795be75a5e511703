#pragma once

#include "stmdf/image.hpp"

namespace stmdf {

/// Full-reference quality metrics for one (reference, test) pair.
/// psnr is +infinity when mse == 0; CSV rendering spells that "inf".
struct MetricsReport {
    double mse = 0.0;
    double psnr = 0.0; // dB, peak fixed at 255
    double mae = 0.0;
    double mssim = 0.0;
};

/// 10 log10(255^2 / mse), +infinity for mse == 0.
double psnr_from_mse(double mse);

/// Mean SSIM with the canonical configuration: 11x11 Gaussian weighting
/// window (sigma 1.5), C1 = (0.01*255)^2, C2 = (0.03*255)^2, evaluated on the
/// valid region only (no padding). Both images must be at least 11x11.
double mssim(const Image& reference, const Image& test);

/// MSE, MAE, PSNR and MSSIM in one pass. Dimensions must match.
MetricsReport compute_metrics(const Image& reference, const Image& test);

} // namespace stmdf
