#pragma once

#include <cstddef>
#include <vector>

#include "stmdf/image.hpp"
#include "stmdf/trimmed.hpp"

namespace stmdf {

/// Total-variation-regularized variant. The 7x7 trim window is the one
/// setting the method needs for usable output; the rest are stability
/// defaults, all overridable from the CLI.
struct TvrParams {
    double epsilon = 1e-3;        // regularizer in the gradient norm
    double lambda = 0.1;          // fidelity weight
    double source_strength = 0.1; // alpha, weight of the additive source term
    double dt = 0.2;
    TrimSpec trim{1.0 / 3.0, 7};
    std::size_t max_iterations = 200;
    double stop_tolerance = 0.05;
    int threads = 1;
};

/// Curvature term of the TV flow, evaluated with central differences and
/// replicate padding:
///   ((Ux^2+eps^2)Uyy + (Uy^2+eps^2)Uxx - 2 Ux Uy Uxy) / (Ux^2+Uy^2+eps^2)^(3/2)
std::vector<double> tv_curvature(const Image& img, double epsilon, int threads = 1);

/// One explicit step U + (curvature + lambda (f - U)) dt + alpha f with
/// f the switching trimmed mean filter output, clamped to [0, 255].
Image tvr_stmdf_step(const Image& img, const TvrParams& params, double tau);

} // namespace stmdf
