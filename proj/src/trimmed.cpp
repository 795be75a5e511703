#include "stmdf/trimmed.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "parallel.hpp"

namespace stmdf {

namespace {

// floor(trim_fraction * n) with a guard against binary representation of
// fractions like 1/3 landing an ulp under the intended integer.
std::size_t trim_count(double trim_fraction, std::size_t n) {
    if (!(trim_fraction >= 0.0 && trim_fraction < 0.5)) {
        throw InvalidParameter("trim fraction must lie in [0, 0.5), got " +
                               std::to_string(trim_fraction));
    }
    return static_cast<std::size_t>(std::floor(trim_fraction * static_cast<double>(n) + 1e-9));
}

double trimmed_mean_sorted(std::vector<double>& scratch, double trim_fraction) {
    const std::size_t n = scratch.size();
    const std::size_t m = trim_count(trim_fraction, n);
    if (2 * m >= n) {
        throw InvalidParameter("over-trim: 2*floor(trim*n) must be < n");
    }
    std::sort(scratch.begin(), scratch.end());
    double sum = 0.0;
    for (std::size_t i = m; i < n - m; ++i) sum += scratch[i];
    return sum / static_cast<double>(n - 2 * m);
}

} // namespace

double trimmed_mean(std::span<const double> samples, double trim_fraction) {
    if (samples.empty()) throw InvalidParameter("trimmed mean of an empty sample set");
    std::vector<double> scratch(samples.begin(), samples.end());
    return trimmed_mean_sorted(scratch, trim_fraction);
}

DeviationSet deviations(const Window& win, double trim_fraction) {
    DeviationSet d;
    d.trimmed_mean = trimmed_mean(win.samples, trim_fraction);
    d.deviation_vector.reserve(win.samples.size());
    d.tmad.reserve(win.samples.size());
    for (double s : win.samples) {
        const double dev = d.trimmed_mean - s;
        d.deviation_vector.push_back(dev);
        d.tmad.push_back(std::abs(dev));
    }
    d.ctmd = d.trimmed_mean - win.center_value;
    return d;
}

Image stmdf_filter(const Image& img, const TrimSpec& spec, double tau, int threads) {
    const std::size_t k = spec.window_size;
    if (k < 1 || k % 2 == 0) {
        throw InvalidParameter("window size must be odd and >= 1, got " + std::to_string(k));
    }
    // Validate the trim once up front instead of per pixel.
    {
        std::vector<double> probe(k * k, 0.0);
        trimmed_mean_sorted(probe, spec.trim_fraction);
    }
    if (!std::isfinite(tau)) {
        throw InvalidParameter("switching threshold must be finite");
    }

    const std::size_t w = img.width();
    const std::size_t h = img.height();
    std::vector<double> out(img.size());
    const long r = static_cast<long>(k / 2);

    detail::parallel_rows(h, threads, [&](std::size_t y0, std::size_t y1) {
        std::vector<double> scratch;
        scratch.reserve(k * k);
        for (std::size_t y = y0; y < y1; ++y) {
            for (std::size_t x = 0; x < w; ++x) {
                scratch.clear();
                for (long dy = -r; dy <= r; ++dy) {
                    const std::size_t yy = static_cast<std::size_t>(
                        std::clamp(static_cast<long>(y) + dy, 0L, static_cast<long>(h) - 1));
                    for (long dx = -r; dx <= r; ++dx) {
                        const std::size_t xx = static_cast<std::size_t>(
                            std::clamp(static_cast<long>(x) + dx, 0L, static_cast<long>(w) - 1));
                        scratch.push_back(img(xx, yy));
                    }
                }
                const double center = img(x, y);
                const double tm = trimmed_mean_sorted(scratch, spec.trim_fraction);
                out[y * w + x] = std::abs(tm - center) <= tau ? center : tm;
            }
        }
    });
    return Image(w, h, std::move(out));
}

} // namespace stmdf
