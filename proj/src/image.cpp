#include "stmdf/image.hpp"

#include <algorithm>
#include <string>

namespace stmdf {

namespace {

void check_dims(std::size_t width, std::size_t height) {
    if (width < 1 || height < 1) {
        throw InvalidParameter("image dimensions must be positive, got " +
                               std::to_string(width) + "x" + std::to_string(height));
    }
}

} // namespace

Image::Image(std::size_t width, std::size_t height, double fill)
    : width_(width), height_(height), pixels_(width * height, fill) {
    check_dims(width, height);
}

Image::Image(std::size_t width, std::size_t height, std::vector<double> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
    check_dims(width, height);
    if (pixels_.size() != width_ * height_) {
        throw InvalidParameter("pixel buffer has " + std::to_string(pixels_.size()) +
                               " entries, expected " + std::to_string(width_ * height_));
    }
}

Window window_at(const Image& img, std::size_t x, std::size_t y, std::size_t k) {
    if (k < 1 || k % 2 == 0) {
        throw InvalidParameter("window size must be odd and >= 1, got " + std::to_string(k));
    }
    if (x >= img.width() || y >= img.height()) {
        throw InvalidParameter("window center outside the image");
    }
    Window win;
    win.samples.reserve(k * k);
    const long r = static_cast<long>(k / 2);
    const long w = static_cast<long>(img.width());
    const long h = static_cast<long>(img.height());
    for (long dy = -r; dy <= r; ++dy) {
        const long yy = std::clamp(static_cast<long>(y) + dy, 0L, h - 1);
        for (long dx = -r; dx <= r; ++dx) {
            const long xx = std::clamp(static_cast<long>(x) + dx, 0L, w - 1);
            win.samples.push_back(img(static_cast<std::size_t>(xx), static_cast<std::size_t>(yy)));
        }
    }
    win.center_value = img(x, y);
    return win;
}

Image clamp_image(const Image& img) {
    std::vector<double> out(img.size());
    const auto& in = img.pixels();
    for (std::size_t i = 0; i < in.size(); ++i) {
        out[i] = std::clamp(in[i], 0.0, 255.0);
    }
    return Image(img.width(), img.height(), std::move(out));
}

} // namespace stmdf
