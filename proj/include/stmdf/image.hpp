#pragma once

#include <cstddef>
#include <vector>

#include "stmdf/errors.hpp"

namespace stmdf {

/// Grayscale image: row-major real-valued pixels with [0, 255] gray-level
/// semantics. Filters never mutate their input; each step writes a fresh
/// buffer, so an Image can be shared read-only across threads.
class Image {
public:
    Image(std::size_t width, std::size_t height, double fill = 0.0);
    Image(std::size_t width, std::size_t height, std::vector<double> pixels);

    std::size_t width() const { return width_; }
    std::size_t height() const { return height_; }
    std::size_t size() const { return pixels_.size(); }

    double operator()(std::size_t x, std::size_t y) const { return pixels_[y * width_ + x]; }
    double& operator()(std::size_t x, std::size_t y) { return pixels_[y * width_ + x]; }

    const std::vector<double>& pixels() const { return pixels_; }
    std::vector<double>& pixels() { return pixels_; }

    bool same_shape(const Image& other) const {
        return width_ == other.width_ && height_ == other.height_;
    }

private:
    std::size_t width_;
    std::size_t height_;
    std::vector<double> pixels_;
};

/// k x k neighborhood in row-major scan order plus the unsorted center sample.
struct Window {
    std::vector<double> samples;
    double center_value = 0.0;
};

/// Samples the k x k neighborhood around (x, y). Out-of-bounds neighbors are
/// resolved by replicate (clamp-to-edge) padding. k must be odd and >= 1.
Window window_at(const Image& img, std::size_t x, std::size_t y, std::size_t k = 3);

/// Maps every pixel to min(255, max(0, v)).
Image clamp_image(const Image& img);

} // namespace stmdf
