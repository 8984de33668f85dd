#include "oracles.hpp"
#include "touchdown/specfun.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numbers>

namespace td = touchdown;

TEST_CASE("erf: fixed values") {
    CHECK(td::erf(0.0) == 0.0);
    CHECK(td::erf(1.0) == doctest::Approx(0.8427007929497149).epsilon(1e-15));
    CHECK(td::erf(-2.0) == -td::erf(2.0));
}

TEST_CASE("erf agrees with the series oracle on a log grid of 10000 points") {
    double worst = 0;
    for (int i = 0; i < 10000; ++i) {
        const double x = std::pow(10.0, -8 + (std::log10(6.0) + 8) * i / 9999.0);
        worst = std::max(worst, std::fabs(td::erf(x) - oracle::erf_series(x)));
        worst = std::max(worst, std::fabs(td::erf(-x) - oracle::erf_series(-x)));
    }
    CHECK(worst <= 1e-13);
}

TEST_CASE("erf is odd bit-exactly, monotone and bounded") {
    double prev = -1;
    for (int i = -3000; i <= 3000; ++i) {
        const double x = i * 0.0025;
        CHECK(td::erf(x) + td::erf(-x) == 0.0);
        CHECK(td::erf(x) >= prev);
        CHECK(std::fabs(td::erf(x)) <= 1.0);
        prev = td::erf(x);
    }
}

TEST_CASE("cot bar") {
    using touchdown::overline_cot;
    CHECK(overline_cot(std::numbers::pi / 4) == doctest::Approx(1.0));
    CHECK(overline_cot(2.0) == 0.0);
    CHECK(overline_cot(std::numbers::pi / 2) == 0.0);
    CHECK(overline_cot(0.3) == doctest::Approx(1 / std::tan(0.3)));
    CHECK_THROWS(overline_cot(0.0));
}

TEST_CASE("cos_pow guards its domain") {
    CHECK(touchdown::cos_pow(0.5, 2.5) == doctest::Approx(std::pow(std::cos(0.5), 2.5)));
    CHECK_THROWS_AS(touchdown::cos_pow(std::numbers::pi / 2 + 0.1, 1.5), std::domain_error);
}
