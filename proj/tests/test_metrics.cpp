#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <limits>

#include "stmdf/metrics.hpp"
#include "stmdf/noise.hpp"
#include "support/helpers.hpp"

using namespace stmdf;

namespace {

// Brute-force mean SSIM: explicit 11x11 Gaussian weights and the
// covariance-form window statistics, no separable passes.
double oracle_mssim(const Image& a, const Image& b) {
    constexpr int K = 11;
    constexpr double kSigma = 1.5;
    constexpr double kC1 = 6.5025;  // (0.01*255)^2
    constexpr double kC2 = 58.5225; // (0.03*255)^2
    std::array<std::array<double, K>, K> wgt{};
    double wsum = 0.0;
    for (int i = 0; i < K; ++i) {
        for (int j = 0; j < K; ++j) {
            const double dy = i - (K - 1) / 2.0;
            const double dx = j - (K - 1) / 2.0;
            wgt[i][j] = std::exp(-(dx * dx + dy * dy) / (2.0 * kSigma * kSigma));
            wsum += wgt[i][j];
        }
    }
    for (auto& row : wgt)
        for (double& v : row) v /= wsum;

    double total = 0.0;
    std::size_t windows = 0;
    for (std::size_t y0 = 0; y0 + K <= a.height(); ++y0) {
        for (std::size_t x0 = 0; x0 + K <= a.width(); ++x0) {
            double mx = 0.0, my = 0.0;
            for (int i = 0; i < K; ++i)
                for (int j = 0; j < K; ++j) {
                    mx += wgt[i][j] * a(x0 + j, y0 + i);
                    my += wgt[i][j] * b(x0 + j, y0 + i);
                }
            double vx = 0.0, vy = 0.0, cov = 0.0;
            for (int i = 0; i < K; ++i)
                for (int j = 0; j < K; ++j) {
                    const double dx = a(x0 + j, y0 + i) - mx;
                    const double dy = b(x0 + j, y0 + i) - my;
                    vx += wgt[i][j] * dx * dx;
                    vy += wgt[i][j] * dy * dy;
                    cov += wgt[i][j] * dx * dy;
                }
            total += ((2.0 * mx * my + kC1) * (2.0 * cov + kC2)) /
                     ((mx * mx + my * my + kC1) * (vx + vy + kC2));
            ++windows;
        }
    }
    return total / static_cast<double>(windows);
}

} // namespace

TEST_CASE("identical images score perfectly") {
    const Image img = test_support::random_image(24, 16, 2);
    const MetricsReport r = compute_metrics(img, img);
    CHECK(r.mse == 0.0);
    CHECK(r.mae == 0.0);
    CHECK(std::isinf(r.psnr));
    CHECK(r.psnr > 0.0);
    CHECK(r.mssim == 1.0);
}

TEST_CASE("mssim(I, I) is exactly one for random images") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Image img = test_support::random_image(16, 12, seed);
        CHECK(mssim(img, img) == 1.0);
    }
}

TEST_CASE("the all-0 / all-255 pair is forced arithmetic") {
    const Image black(16, 16, 0.0);
    const Image white(16, 16, 255.0);
    const MetricsReport r = compute_metrics(black, white);
    CHECK(r.mse == 65025.0);
    CHECK(r.mae == 255.0);
    CHECK(r.psnr == 0.0);
}

TEST_CASE("psnr follows the mse identity") {
    CHECK(psnr_from_mse(238.0204) == doctest::Approx(24.3647).epsilon(5e-5));
    for (double mse : {1.0, 10.0, 238.0204, 7273.6, 65025.0}) {
        CHECK(psnr_from_mse(mse) ==
              doctest::Approx(10.0 * std::log10(65025.0 / mse)).epsilon(1e-9));
    }
    CHECK(std::isinf(psnr_from_mse(0.0)));
    CHECK_THROWS_AS(psnr_from_mse(-1.0), InvalidParameter);
}

TEST_CASE("psnr strictly decreases as mse grows") {
    double prev = std::numeric_limits<double>::infinity();
    for (double mse = 0.5; mse < 70000.0; mse *= 1.7) {
        const double p = psnr_from_mse(mse);
        CHECK(p < prev);
        prev = p;
    }
}

TEST_CASE("mse, mae and psnr are symmetric under argument swap") {
    const Image a = test_support::random_image(20, 14, 5);
    const Image b = test_support::random_image(20, 14, 6);
    const MetricsReport ab = compute_metrics(a, b);
    const MetricsReport ba = compute_metrics(b, a);
    CHECK(ab.mse == ba.mse);
    CHECK(ab.mae == ba.mae);
    CHECK(ab.psnr == ba.psnr);
}

TEST_CASE("dimension mismatch and undersized images are rejected") {
    CHECK_THROWS_AS(compute_metrics(Image(12, 12, 0.0), Image(12, 13, 0.0)), InvalidParameter);
    CHECK_THROWS_AS(mssim(Image(10, 12, 0.0), Image(10, 12, 0.0)), InvalidParameter);
}

TEST_CASE("mssim matches the brute-force oracle") {
    for (std::uint64_t seed : {11ull, 12ull, 13ull}) {
        const Image a = test_support::random_image(28, 21, seed);
        const Image b = test_support::random_image(28, 21, seed + 100);
        CHECK(mssim(a, b) == doctest::Approx(oracle_mssim(a, b)).epsilon(1e-9));
        CHECK(mssim(a, a) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("structural inversion scores poorly") {
    const Image img = test_support::random_image(32, 32, 9);
    std::vector<double> negated = img.pixels();
    for (double& v : negated) v = 255.0 - v;
    const Image neg(img.width(), img.height(), std::move(negated));
    const double oracle = oracle_mssim(img, neg);
    const double got = mssim(img, neg);
    CHECK(got == doctest::Approx(oracle).epsilon(1e-9));
    CHECK(got < 0.5);
}

TEST_CASE("mae against the clean image grows with injected density") {
    const Image clean = test_support::random_image(48, 48, 77, 20.0, 235.0);
    double prev = -1.0;
    for (double p : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const Image noisy = inject_salt_pepper(clean, NoiseSpec{p, 31}).noisy;
        const MetricsReport r = compute_metrics(clean, noisy);
        CHECK(r.mae > prev);
        prev = r.mae;
    }
}
