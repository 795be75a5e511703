#include "stmdf/diffusion.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "parallel.hpp"
#include "stmdf/stats.hpp"

namespace stmdf {

namespace {

constexpr double kKappaFallback = 1.0; // zero-variance iterates are fixpoints anyway

double mean_abs_change(const Image& a, const Image& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sum += std::abs(a.pixels()[i] - b.pixels()[i]);
    }
    return sum / static_cast<double>(a.size());
}

double kappa_or_fallback(const Image& img) {
    try {
        return diffusion_kappa(img);
    } catch (const DegenerateImage&) {
        return kKappaFallback;
    }
}

// (1 - beta) U + div/4 + beta f, clamped.
Image blended_step(const Image& img, const Image& f, double beta, double kappa,
                   CoefficientKind kind, int threads) {
    const std::vector<double> div = pm_divergence(img, kappa, kind, threads);
    std::vector<double> out(img.size());
    const auto& u = img.pixels();
    const auto& src = f.pixels();
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double v = (1.0 - beta) * u[i] + div[i] / 4.0 + beta * src[i];
        out[i] = std::clamp(v, 0.0, 255.0);
    }
    return Image(img.width(), img.height(), std::move(out));
}

} // namespace

double diffusion_coefficient(double s, double kappa, CoefficientKind kind) {
    if (!(kappa > 0.0)) {
        throw InvalidParameter("kappa must be positive, got " + std::to_string(kappa));
    }
    const double t = s / kappa;
    switch (kind) {
    case CoefficientKind::Gaussian:
        return std::exp(-t * t);
    case CoefficientKind::Cauchy:
        return 1.0 / (1.0 + t * t);
    case CoefficientKind::Tukey: {
        if (std::abs(s) > kappa) return 0.0;
        const double q = 1.0 - t * t;
        return q * q;
    }
    }
    throw InvalidParameter("unknown coefficient kind");
}

std::vector<double> pm_divergence(const Image& img, double kappa, CoefficientKind kind,
                                  int threads) {
    if (!(kappa > 0.0)) {
        throw InvalidParameter("kappa must be positive, got " + std::to_string(kappa));
    }
    const std::size_t w = img.width();
    const std::size_t h = img.height();
    std::vector<double> out(img.size());

    detail::parallel_rows(h, threads, [&](std::size_t y0, std::size_t y1) {
        for (std::size_t y = y0; y < y1; ++y) {
            const std::size_t yn = y > 0 ? y - 1 : 0;
            const std::size_t ys = y + 1 < h ? y + 1 : h - 1;
            for (std::size_t x = 0; x < w; ++x) {
                const std::size_t xw = x > 0 ? x - 1 : 0;
                const std::size_t xe = x + 1 < w ? x + 1 : w - 1;
                const double c = img(x, y);
                const double gn = img(x, yn) - c;
                const double gs = img(x, ys) - c;
                const double ge = img(xe, y) - c;
                const double gw = img(xw, y) - c;
                out[y * w + x] = diffusion_coefficient(std::abs(gn), kappa, kind) * gn +
                                 diffusion_coefficient(std::abs(gs), kappa, kind) * gs +
                                 diffusion_coefficient(std::abs(ge), kappa, kind) * ge +
                                 diffusion_coefficient(std::abs(gw), kappa, kind) * gw;
            }
        }
    });
    return out;
}

Image stmdf_ad_step(const Image& img, const DiffusionParams& params, double tau, double kappa) {
    if (!(params.source_strength >= 0.0 && params.source_strength <= 1.0)) {
        throw InvalidParameter("source strength must lie in [0, 1]");
    }
    const Image f = stmdf_filter(img, params.trim, tau, params.threads);
    return blended_step(img, f, params.source_strength, kappa, params.coefficient,
                        params.threads);
}

Image mf_ad_step(const Image& img, double beta, double kappa, CoefficientKind kind, int threads) {
    if (!(beta >= 0.0 && beta <= 1.0)) {
        throw InvalidParameter("source strength must lie in [0, 1]");
    }
    const Image f = median3(img, threads);
    return blended_step(img, f, beta, kappa, kind, threads);
}

Image median3(const Image& img, int threads) {
    const std::size_t w = img.width();
    const std::size_t h = img.height();
    std::vector<double> out(img.size());

    detail::parallel_rows(h, threads, [&](std::size_t y0, std::size_t y1) {
        std::array<double, 9> win;
        for (std::size_t y = y0; y < y1; ++y) {
            const std::size_t yn = y > 0 ? y - 1 : 0;
            const std::size_t ys = y + 1 < h ? y + 1 : h - 1;
            for (std::size_t x = 0; x < w; ++x) {
                const std::size_t xw = x > 0 ? x - 1 : 0;
                const std::size_t xe = x + 1 < w ? x + 1 : w - 1;
                win = {img(xw, yn), img(x, yn), img(xe, yn), img(xw, y),  img(x, y),
                       img(xe, y),  img(xw, ys), img(x, ys), img(xe, ys)};
                std::nth_element(win.begin(), win.begin() + 4, win.end());
                out[y * w + x] = win[4];
            }
        }
    });
    return Image(w, h, std::move(out));
}

RunResult run_filter(const Image& img, Variant variant, const DiffusionParams& params,
                     const TvrParams& tvr) {
    if (params.max_iterations < 1 || tvr.max_iterations < 1) {
        throw InvalidParameter("max_iterations must be >= 1");
    }
    if (params.stop_tolerance < 0.0 || tvr.stop_tolerance < 0.0) {
        throw InvalidParameter("stop tolerance must be >= 0");
    }

    const bool uses_stmdf_source =
        variant == Variant::StmdfAd || variant == Variant::StmdfOnly || variant == Variant::TvrStmdf;
    const bool uses_diffusion = variant == Variant::StmdfAd || variant == Variant::MfAd;
    const std::size_t max_iterations =
        variant == Variant::TvrStmdf ? tvr.max_iterations : params.max_iterations;
    const double stop_tolerance =
        variant == Variant::TvrStmdf ? tvr.stop_tolerance : params.stop_tolerance;

    auto threshold_of = [&params](const Image& i) {
        const double t = entropy_threshold(i);
        return params.clamp_tau ? std::max(0.0, t) : t;
    };

    RunTrace trace;
    double tau = std::numeric_limits<double>::quiet_NaN();
    if (uses_stmdf_source) tau = threshold_of(img);

    double kappa = std::numeric_limits<double>::quiet_NaN();
    if (uses_diffusion && params.kappa_policy == KappaPolicy::Fixed) {
        kappa = kappa_or_fallback(img);
    }

    Image current = img;
    for (std::size_t iter = 0; iter < max_iterations; ++iter) {
        if (uses_stmdf_source && variant != Variant::TvrStmdf &&
            params.tau_policy == TauPolicy::RefreshPerIteration && iter > 0) {
            tau = threshold_of(current);
        }
        if (uses_diffusion && params.kappa_policy == KappaPolicy::RefreshPerIteration) {
            kappa = kappa_or_fallback(current);
        }

        Image next = [&]() {
            switch (variant) {
            case Variant::StmdfAd:
                return stmdf_ad_step(current, params, tau, kappa);
            case Variant::MfAd:
                return mf_ad_step(current, params.source_strength, kappa, params.coefficient,
                                  params.threads);
            case Variant::Median:
                return median3(current, params.threads);
            case Variant::StmdfOnly:
                return stmdf_filter(current, params.trim, tau, params.threads);
            case Variant::TvrStmdf:
                return tvr_stmdf_step(current, tvr, tau);
            }
            throw InvalidParameter("unknown variant");
        }();

        const double delta = mean_abs_change(next, current);
        trace.mean_abs_change.push_back(delta);
        current = std::move(next);
        if (delta < stop_tolerance) break;
    }

    trace.iterations_executed = trace.mean_abs_change.size();
    trace.tau = tau;
    trace.kappa = kappa;
    return {std::move(current), std::move(trace)};
}

} // namespace stmdf
