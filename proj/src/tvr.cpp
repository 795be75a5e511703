#include "stmdf/tvr.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "parallel.hpp"

namespace stmdf {

std::vector<double> tv_curvature(const Image& img, double epsilon, int threads) {
    if (!(epsilon > 0.0)) {
        throw InvalidParameter("epsilon must be positive, got " + std::to_string(epsilon));
    }
    const std::size_t w = img.width();
    const std::size_t h = img.height();
    const double eps2 = epsilon * epsilon;
    std::vector<double> out(img.size());

    detail::parallel_rows(h, threads, [&](std::size_t y0, std::size_t y1) {
        for (std::size_t y = y0; y < y1; ++y) {
            const std::size_t yn = y > 0 ? y - 1 : 0;
            const std::size_t ys = y + 1 < h ? y + 1 : h - 1;
            for (std::size_t x = 0; x < w; ++x) {
                const std::size_t xw = x > 0 ? x - 1 : 0;
                const std::size_t xe = x + 1 < w ? x + 1 : w - 1;
                const double c = img(x, y);
                const double e = img(xe, y), wv = img(xw, y);
                const double n = img(x, yn), s = img(x, ys);
                const double ux = (e - wv) / 2.0;
                const double uy = (s - n) / 2.0;
                const double uxx = e - 2.0 * c + wv;
                const double uyy = s - 2.0 * c + n;
                const double uxy =
                    (img(xe, ys) - img(xw, ys) - img(xe, yn) + img(xw, yn)) / 4.0;
                const double num =
                    (ux * ux + eps2) * uyy + (uy * uy + eps2) * uxx - 2.0 * ux * uy * uxy;
                const double den = std::pow(ux * ux + uy * uy + eps2, 1.5);
                out[y * w + x] = num / den;
            }
        }
    });
    return out;
}

Image tvr_stmdf_step(const Image& img, const TvrParams& params, double tau) {
    if (params.dt < 0.0) throw InvalidParameter("dt must be >= 0");
    if (params.lambda < 0.0) throw InvalidParameter("lambda must be >= 0");
    if (params.source_strength < 0.0) throw InvalidParameter("alpha must be >= 0");

    const Image f = stmdf_filter(img, params.trim, tau, params.threads);
    const std::vector<double> curv = tv_curvature(img, params.epsilon, params.threads);
    std::vector<double> out(img.size());
    const auto& u = img.pixels();
    const auto& src = f.pixels();
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double v = u[i] + (curv[i] + params.lambda * (src[i] - u[i])) * params.dt +
                         params.source_strength * src[i];
        out[i] = std::clamp(v, 0.0, 255.0);
    }
    return Image(img.width(), img.height(), std::move(out));
}

} // namespace stmdf
