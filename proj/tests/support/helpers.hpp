#pragma once

#include <random>
#include <string>
#include <vector>

#include "stmdf/image.hpp"

namespace test_support {

inline std::string data_path(const std::string& name) {
    return std::string(STMDF_TEST_DATA_DIR) + "/" + name;
}

inline stmdf::Image random_image(std::size_t w, std::size_t h, std::uint64_t seed,
                                 double lo = 0.0, double hi = 255.0) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> px(w * h);
    for (double& v : px) v = dist(gen);
    return stmdf::Image(w, h, std::move(px));
}

inline stmdf::Image random_integral_image(std::size_t w, std::size_t h, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<int> dist(0, 255);
    std::vector<double> px(w * h);
    for (double& v : px) v = static_cast<double>(dist(gen));
    return stmdf::Image(w, h, std::move(px));
}

} // namespace test_support
