#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "stmdf/image.hpp"

namespace stmdf {

inline constexpr double kSaltValue = 255.0;
inline constexpr double kPepperValue = 0.0;

/// Fixed-value impulse noise model: each pixel is independently corrupted
/// with probability `density`, split evenly between pepper (0) and salt (255).
struct NoiseSpec {
    double density = 0.0;
    std::uint64_t seed = 0;
};

/// Row-major corruption flags, true exactly where a pixel was replaced.
struct NoiseMask {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<std::uint8_t> flags; // one per pixel, 0 or 1
};

struct InjectionResult {
    Image noisy;
    NoiseMask mask;
};

/// Visits pixels in row-major order, drawing one uniform u in [0,1) per pixel
/// from a generator seeded by spec.seed: u < d/2 -> pepper, u < d -> salt,
/// otherwise unchanged. Identical (img, spec) give bitwise identical results
/// on every platform.
InjectionResult inject_salt_pepper(const Image& img, const NoiseSpec& spec);

/// Mask file format: "MASK <width> <height>\n" then row-major bits packed
/// MSB-first, 8 per octet, zero-padded final octet.
std::string write_mask(const NoiseMask& mask);
NoiseMask read_mask(std::string_view bytes);

NoiseMask read_mask_file(const std::string& path);
void write_mask_file(const NoiseMask& mask, const std::string& path);

/// Seed for one cell of a density sweep: base + round(1000 * density), so
/// densities are independent yet reproducible.
std::uint64_t sweep_seed(std::uint64_t base, double density);

} // namespace stmdf
