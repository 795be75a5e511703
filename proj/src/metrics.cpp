#include "stmdf/metrics.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace stmdf {

namespace {

constexpr double kPeak = 255.0;
constexpr std::size_t kSsimWindow = 11;
constexpr double kSsimSigma = 1.5;
constexpr double kC1 = (0.01 * kPeak) * (0.01 * kPeak);
constexpr double kC2 = (0.03 * kPeak) * (0.03 * kPeak);

std::array<double, kSsimWindow> gaussian_taps() {
    std::array<double, kSsimWindow> taps{};
    const double half = (kSsimWindow - 1) / 2.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < kSsimWindow; ++i) {
        const double d = static_cast<double>(i) - half;
        taps[i] = std::exp(-(d * d) / (2.0 * kSsimSigma * kSsimSigma));
        sum += taps[i];
    }
    for (double& t : taps) t /= sum;
    return taps;
}

// Valid-region weighted mean: horizontal pass then vertical pass with the
// normalized 1D taps (the 2D Gaussian window is their outer product).
std::vector<double> separable_mean(const std::vector<double>& field, std::size_t w,
                                   std::size_t h, const std::array<double, kSsimWindow>& taps) {
    const std::size_t ow = w - kSsimWindow + 1;
    const std::size_t oh = h - kSsimWindow + 1;
    std::vector<double> horiz(ow * h);
    for (std::size_t y = 0; y < h; ++y) {
        for (std::size_t x = 0; x < ow; ++x) {
            double acc = 0.0;
            for (std::size_t i = 0; i < kSsimWindow; ++i) {
                acc += taps[i] * field[y * w + x + i];
            }
            horiz[y * ow + x] = acc;
        }
    }
    std::vector<double> out(ow * oh);
    for (std::size_t y = 0; y < oh; ++y) {
        for (std::size_t x = 0; x < ow; ++x) {
            double acc = 0.0;
            for (std::size_t i = 0; i < kSsimWindow; ++i) {
                acc += taps[i] * horiz[(y + i) * ow + x];
            }
            out[y * ow + x] = acc;
        }
    }
    return out;
}

} // namespace

double psnr_from_mse(double mse) {
    if (mse < 0.0) throw InvalidParameter("mse must be >= 0");
    if (mse == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(kPeak * kPeak / mse);
}

double mssim(const Image& reference, const Image& test) {
    if (!reference.same_shape(test)) {
        throw InvalidParameter("invalid-pair: image dimensions differ");
    }
    if (reference.width() < kSsimWindow || reference.height() < kSsimWindow) {
        throw InvalidParameter("invalid-size: images must be at least 11x11 for MSSIM");
    }
    const std::size_t w = reference.width();
    const std::size_t h = reference.height();
    const auto taps = gaussian_taps();

    const auto& x = reference.pixels();
    const auto& y = test.pixels();
    std::vector<double> xx(x.size()), yy(x.size()), xy(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        xx[i] = x[i] * x[i];
        yy[i] = y[i] * y[i];
        xy[i] = x[i] * y[i];
    }

    const auto mu_x = separable_mean(x, w, h, taps);
    const auto mu_y = separable_mean(y, w, h, taps);
    const auto e_xx = separable_mean(xx, w, h, taps);
    const auto e_yy = separable_mean(yy, w, h, taps);
    const auto e_xy = separable_mean(xy, w, h, taps);

    double sum = 0.0;
    for (std::size_t i = 0; i < mu_x.size(); ++i) {
        const double mx = mu_x[i];
        const double my = mu_y[i];
        const double var_x = e_xx[i] - mx * mx;
        const double var_y = e_yy[i] - my * my;
        const double cov = e_xy[i] - mx * my;
        const double num = (2.0 * mx * my + kC1) * (2.0 * cov + kC2);
        const double den = (mx * mx + my * my + kC1) * (var_x + var_y + kC2);
        sum += num / den;
    }
    return sum / static_cast<double>(mu_x.size());
}

MetricsReport compute_metrics(const Image& reference, const Image& test) {
    if (!reference.same_shape(test)) {
        throw InvalidParameter("invalid-pair: image dimensions differ");
    }
    MetricsReport r;
    double se = 0.0;
    double ae = 0.0;
    const auto& a = reference.pixels();
    const auto& b = test.pixels();
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        se += d * d;
        ae += std::abs(d);
    }
    const double n = static_cast<double>(a.size());
    r.mse = se / n;
    r.mae = ae / n;
    r.psnr = psnr_from_mse(r.mse);
    r.mssim = mssim(reference, test);
    return r;
}

} // namespace stmdf
