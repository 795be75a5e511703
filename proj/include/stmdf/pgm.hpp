#pragma once

#include <string>
#include <string_view>

#include "stmdf/image.hpp"

namespace stmdf {

/// Parses a binary (P5) or ASCII (P2) PGM with maxval 255. Header comments
/// (# to end of line) are permitted. Anything else is rejected loudly:
/// wrong magic, maxval != 255, truncated raster, non-numeric header tokens.
Image read_pgm(std::string_view bytes);

/// Serializes as "P5\n<width> <height>\n255\n" followed by one octet per
/// pixel, rounded half-away-from-zero and clamped to [0, 255]. The header is
/// byte-identical across platforms.
std::string write_pgm(const Image& img);

Image read_pgm_file(const std::string& path);
void write_pgm_file(const Image& img, const std::string& path);

} // namespace stmdf
