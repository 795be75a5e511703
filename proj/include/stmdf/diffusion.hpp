#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "stmdf/image.hpp"
#include "stmdf/trimmed.hpp"
#include "stmdf/tvr.hpp"

namespace stmdf {

/// Edge-stopping functions for the diffusion coefficient D(s).
enum class CoefficientKind {
    Gaussian, // exp(-(s/kappa)^2)
    Cauchy,   // 1 / (1 + (s/kappa)^2)
    Tukey,    // (1 - (s/kappa)^2)^2 for |s| <= kappa, else 0
};

enum class TauPolicy { FixedFromInput, RefreshPerIteration };
enum class KappaPolicy { RefreshPerIteration, Fixed };

/// Pipeline defaults calibrated on density sweeps: a 5x5 window trimmed down
/// to its middle three order statistics gives the source term usable
/// estimates deep into high densities, full source weight drives the
/// fastest convergence, and the 0.25 tolerance stops runs near their
/// per-density quality peak (a few iterations at low density, dozens at
/// 90%). Every field is a CLI knob.
struct DiffusionParams {
    double source_strength = 1.0; // beta, weight of the boosting source term
    CoefficientKind coefficient = CoefficientKind::Cauchy;
    TrimSpec trim{0.45, 5};
    std::size_t max_iterations = 120;
    double stop_tolerance = 0.25; // mean absolute change per pixel, gray levels
    TauPolicy tau_policy = TauPolicy::FixedFromInput;
    KappaPolicy kappa_policy = KappaPolicy::RefreshPerIteration;
    bool clamp_tau = false; // clamp negative thresholds to zero
    int threads = 1;
};

struct RunTrace {
    std::size_t iterations_executed = 0;
    std::vector<double> mean_abs_change; // one entry per executed iteration
    double tau = std::numeric_limits<double>::quiet_NaN();   // last threshold used
    double kappa = std::numeric_limits<double>::quiet_NaN(); // last kappa used
};

enum class Variant { StmdfAd, MfAd, Median, StmdfOnly, TvrStmdf };

/// D(s) for the selected kind; always in [0, 1], D(0) = 1. kappa must be > 0.
double diffusion_coefficient(double s, double kappa, CoefficientKind kind);

/// 4-neighbor discretization of div(D(|grad U|) grad U) with replicate
/// padding. Returns the per-pixel flux sum, same shape as the image.
std::vector<double> pm_divergence(const Image& img, double kappa, CoefficientKind kind,
                                  int threads = 1);

/// One explicit update (1-beta) U + div/4 + beta f, clamped, with f the
/// switching trimmed mean filter of the current iterate.
Image stmdf_ad_step(const Image& img, const DiffusionParams& params, double tau, double kappa);

/// Same update with f = 3x3 median of the current iterate.
Image mf_ad_step(const Image& img, double beta, double kappa, CoefficientKind kind,
                 int threads = 1);

/// Plain 3x3 median with replicate padding, non-recursive.
Image median3(const Image& img, int threads = 1);

struct RunResult {
    Image image;
    RunTrace trace;
};

/// Iterates the chosen variant. The switching threshold tau comes from the
/// input image (or each iterate, per tau_policy); kappa is refreshed from the
/// current iterate by default, falling back to 1 on zero-variance iterates.
/// Stops after max_iterations or once the mean absolute per-pixel change
/// drops below stop_tolerance, whichever comes first. TvrStmdf draws its
/// schedule and trim window from `tvr` instead of `params`.
RunResult run_filter(const Image& img, Variant variant, const DiffusionParams& params,
                     const TvrParams& tvr = {});

} // namespace stmdf
