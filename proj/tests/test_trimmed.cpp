#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <random>
#include <vector>

#include "stmdf/trimmed.hpp"
#include "support/helpers.hpp"

using namespace stmdf;

namespace {

// Brute-force reference: sort a copy, drop m = floor(trim*n) samples from
// each end, average what is left. Kept deliberately independent of the
// library path it checks.
double oracle_trimmed_mean(std::vector<double> samples, double trim) {
    std::sort(samples.begin(), samples.end());
    const std::size_t n = samples.size();
    std::size_t m = 0;
    while (static_cast<double>(m + 1) <= trim * static_cast<double>(n) + 1e-9) ++m;
    double sum = 0.0;
    std::size_t kept = 0;
    for (std::size_t i = m; i + m < n; ++i) {
        sum += samples[i];
        ++kept;
    }
    return sum / static_cast<double>(kept);
}

} // namespace

TEST_CASE("trim 0 reduces to the arithmetic mean") {
    const std::vector<double> s{1, 2, 3, 4, 5, 6, 7, 8, 9};
    CHECK(trimmed_mean(s, 0.0) == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("trim 1/3 of nine keeps the middle three") {
    const std::vector<double> s{0, 0, 0, 10, 20, 30, 255, 255, 255};
    CHECK(trimmed_mean(s, 1.0 / 3.0) == doctest::Approx(20.0).epsilon(1e-15));
    CHECK(oracle_trimmed_mean(s, 1.0 / 3.0) == doctest::Approx(20.0).epsilon(1e-15));
}

TEST_CASE("constant samples are a fixpoint for any legal trim") {
    const std::vector<double> s(9, 128.0);
    for (double trim : {0.0, 0.1, 1.0 / 4.0, 1.0 / 3.0, 0.44}) {
        CHECK(trimmed_mean(s, trim) == 128.0);
    }
}

TEST_CASE("over-trim and empty input are rejected") {
    const std::vector<double> s{1, 2};
    CHECK_THROWS_AS(trimmed_mean(s, 0.5), InvalidParameter);
    CHECK_THROWS_AS(trimmed_mean(s, -0.1), InvalidParameter);
    CHECK_THROWS_AS(trimmed_mean(std::vector<double>{}, 0.0), InvalidParameter);
    const std::vector<double> three{1, 2, 3};
    CHECK(trimmed_mean(three, 0.4) == 2.0); // m = 1 from each end leaves the median
}

TEST_CASE("matches the brute-force oracle on 10k random 9-sample windows") {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 gen(2024);
    std::uniform_real_distribution<double> value(0.0, 255.0);
    std::uniform_real_distribution<double> trim_dist(0.0, 0.49);
    for (int i = 0; i < 10'000; ++i) {
        std::vector<double> s(9);
        for (double& v : s) v = value(gen);
        const double trim = trim_dist(gen);
        const double got = trimmed_mean(s, trim);
        const double want = oracle_trimmed_mean(s, trim);
        REQUIRE(got == doctest::Approx(want).epsilon(1e-12));
        REQUIRE(got >= *std::min_element(s.begin(), s.end()));
        REQUIRE(got <= *std::max_element(s.begin(), s.end()));
    }
    const auto elapsed = std::chrono::steady_clock::now() - start;
    CHECK(std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() < 1000);
}

TEST_CASE("translation equivariance") {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> value(0.0, 255.0);
    for (int i = 0; i < 200; ++i) {
        std::vector<double> s(25);
        for (double& v : s) v = value(gen);
        std::vector<double> shifted = s;
        for (double& v : shifted) v += 17.25;
        CHECK(trimmed_mean(shifted, 0.2) ==
              doctest::Approx(trimmed_mean(s, 0.2) + 17.25).epsilon(1e-12));
    }
}

TEST_CASE("deviations report window-order deviations and the center gap") {
    SUBCASE("constant window") {
        const Window win{std::vector<double>(9, 128.0), 128.0};
        const DeviationSet d = deviations(win, 1.0 / 3.0);
        CHECK(d.trimmed_mean == 128.0);
        CHECK(d.ctmd == 0.0);
        for (double v : d.deviation_vector) CHECK(v == 0.0);
        for (double v : d.tmad) CHECK(v == 0.0);
    }
    SUBCASE("salt center") {
        // 255 sits at the center slot (index 4) of the unsorted window.
        const Window win{{0, 0, 0, 10, 255, 20, 30, 255, 255}, 255.0};
        const DeviationSet d = deviations(win, 1.0 / 3.0);
        CHECK(d.trimmed_mean == doctest::Approx(20.0).epsilon(1e-15));
        CHECK(d.ctmd == doctest::Approx(-235.0).epsilon(1e-15));
        for (std::size_t j = 0; j < win.samples.size(); ++j) {
            CHECK(d.deviation_vector[j] ==
                  doctest::Approx(d.trimmed_mean - win.samples[j]).epsilon(1e-15));
            CHECK(d.tmad[j] == doctest::Approx(std::abs(d.deviation_vector[j])).epsilon(1e-15));
        }
    }
    SUBCASE("all-pepper window") {
        const Window win{std::vector<double>(9, 0.0), 0.0};
        const DeviationSet d = deviations(win, 0.25);
        CHECK(d.trimmed_mean == 0.0);
        CHECK(d.ctmd == 0.0);
    }
}

TEST_CASE("switching filter keeps or replaces per the centered deviation") {
    SUBCASE("constant image is untouched for any nonnegative tau") {
        const Image img(5, 5, 200.0);
        for (double tau : {0.0, 1.0, 500.0}) {
            CHECK(stmdf_filter(img, TrimSpec{}, tau).pixels() == img.pixels());
        }
    }
    SUBCASE("huge tau is the identity") {
        const Image img = test_support::random_image(9, 7, 3);
        CHECK(stmdf_filter(img, TrimSpec{}, 1e18).pixels() == img.pixels());
    }
    SUBCASE("an isolated impulse is repaired, its neighbors kept") {
        Image img(5, 5, 128.0);
        img(2, 2) = 255.0;
        const Image out = stmdf_filter(img, TrimSpec{1.0 / 3.0, 3}, 10.0);
        for (std::size_t y = 0; y < 5; ++y) {
            for (std::size_t x = 0; x < 5; ++x) {
                CHECK(out(x, y) == 128.0); // every window's middle three are 128
            }
        }
    }
    SUBCASE("negative tau replaces every pixel with its window trimmed mean") {
        const Image img = test_support::random_image(8, 8, 21);
        const Image out = stmdf_filter(img, TrimSpec{}, -1.0);
        for (std::size_t y = 0; y < 8; ++y) {
            for (std::size_t x = 0; x < 8; ++x) {
                const Window win = window_at(img, x, y, 3);
                CHECK(out(x, y) ==
                      doctest::Approx(trimmed_mean(win.samples, 1.0 / 3.0)).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("filter output agrees with the window/deviations composition") {
    const Image img = test_support::random_image(16, 12, 31);
    const TrimSpec spec{0.2, 5};
    const double tau = 25.0;
    const Image out = stmdf_filter(img, spec, tau);
    for (std::size_t y = 0; y < img.height(); ++y) {
        for (std::size_t x = 0; x < img.width(); ++x) {
            const Window win = window_at(img, x, y, spec.window_size);
            const DeviationSet d = deviations(win, spec.trim_fraction);
            const double expected = std::abs(d.ctmd) <= tau ? win.center_value : d.trimmed_mean;
            REQUIRE(out(x, y) == doctest::Approx(expected).epsilon(1e-12));
        }
    }
}

TEST_CASE("filter preserves [0,255] and is thread-count independent") {
    const Image img = test_support::random_image(33, 17, 77);
    const Image a = stmdf_filter(img, TrimSpec{}, 5.0, 1);
    const Image b = stmdf_filter(img, TrimSpec{}, 5.0, 4);
    CHECK(a.pixels() == b.pixels());
    for (double v : a.pixels()) {
        CHECK(v >= 0.0);
        CHECK(v <= 255.0);
    }
}

TEST_CASE("filter validates parameters") {
    const Image img(4, 4, 0.0);
    CHECK_THROWS_AS(stmdf_filter(img, TrimSpec{0.5, 3}, 1.0), InvalidParameter);
    CHECK_THROWS_AS(stmdf_filter(img, TrimSpec{1.0 / 3.0, 4}, 1.0), InvalidParameter);
    CHECK_THROWS_AS(stmdf_filter(img, TrimSpec{}, std::numeric_limits<double>::infinity()),
                    InvalidParameter);
}
