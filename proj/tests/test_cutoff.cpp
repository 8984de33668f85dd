#include "oracles.hpp"
#include "touchdown/cutoff.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>

using namespace touchdown;

TEST_CASE("q=0 cut-off at published optimum") {
    const auto c = build_q0(2, 2, 1.22, 0.7184, 1.0);
    REQUIRE(c);
    CHECK(c->delta0 <= 1);
    CHECK(eval_q0(*c, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(eval_q0(*c, 1 + 1.22) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(eval_q0(*c, 0.0) == doctest::Approx(c->D));
    // Both branch formulas meet at r0.
    CHECK(eval_q0(*c, c->r0) == doctest::Approx(eval_q0(*c, std::nextafter(c->r0, 0.0))).epsilon(1e-12));
    CHECK_THROWS_AS(eval_q0(*c, 2.3), std::domain_error);
}

TEST_CASE("q=0 cut-off feasibility") {
    // Small mu beta^2 makes the arch too wide.
    CHECK_FALSE(build_q0(2, 0.4, 0.3, 1.0, 1.0));
    // Large K eventually satisfies the K-side constraint.
    CHECK(build_q0(2, 2, 1.22, 50.0, 1.0));
    CHECK_THROWS(build_q0(2, 2, 1.22, 0.7, 1.5));
}

TEST_CASE("q=1 cut-off closed forms") {
    const double p = 2, mu = 2;
    const double beta = std::sqrt((p + 1) / (p * mu));
    const auto c = build_q1(p, mu, beta, p);
    REQUIRE(c);
    CHECK(c->delta2 == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(c->delta1 == doctest::Approx(std::atan(std::sqrt(p + 1)) / std::sqrt(p * mu)).epsilon(1e-12));

    const auto t5 = build_q1(2, 10, 0.545, 0.52);
    REQUIRE(t5);
    CHECK(eval_q1(*t5, 1.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(eval_q1(*t5, 1.545) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK_FALSE(build_q1(2, 10, 0.545, 2.5));
}

TEST_CASE("q=1 equality case gives zero second arch") {
    const double p = 2, mu = 3, K = 1.0;
    // One ulp inside the constraint so rounding cannot push K mu beta^2 past the bound.
    const double beta = std::nextafter(std::sqrt((p * (p + 2) - K) / (p * K * mu)), 0.0);
    const auto c = build_q1(p, mu, beta, K);
    REQUIRE(c);
    CHECK(c->delta2 == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("cut-off properties on random feasible parameters") {
    oracle::Sampler rng(20240601);
    int q0_done = 0, q1_done = 0;
    while (q0_done < 10) {
        const double p = rng.pick_p(), mu = rng.uniform(0.5, 10), beta = rng.uniform(0.3, 2), K = rng.uniform(0.1, 5),
                     eta = rng.uniform(0.3, 1);
        const auto c = build_q0(p, mu, beta, K, eta);
        if (!c) continue;
        ++q0_done;
        auto a = [&](double r) { return eval_q0(*c, r); };
        CHECK(a(1.0) == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(a(1 + beta) == 0.0);
        double prev = INFINITY;
        for (int i = 0; i <= 1000; ++i) {
            const double v = a((1 + beta) * i / 1000);
            CHECK(v <= prev);
            prev = v;
        }
        const auto [l, r] = oracle::side_slopes(a, 1.0);
        CHECK(l == doctest::Approx(-(p + 1) / beta).epsilon(1e-7));
        CHECK(r == doctest::Approx(-(p + 1) / beta).epsilon(1e-7));
        CHECK(oracle::ode_residual(a, c->r0, 1.0, c->m, c->M) <= 1e-5);
        CHECK(oracle::ode_residual(a, 1.0, 1 + beta, p / (p + 1), 0.0) <= 1e-5);
    }
    while (q1_done < 10) {
        const double p = rng.pick_p(), mu = rng.uniform(1, 10), beta = rng.uniform(0.2, 1.5), K = rng.uniform(0.05, p);
        const auto c = build_q1(p, mu, beta, K);
        if (!c) continue;
        ++q1_done;
        auto a = [&](double r) { return eval_q1(*c, r); };
        CHECK(a(1.0) == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(a(1 + beta) == 0.0);
        if (c->delta2 > 1e-3) {
            const auto [l, r] = oracle::side_slopes(a, c->r1);
            CHECK(l == doctest::Approx(r).epsilon(1e-7));
            CHECK(oracle::ode_residual(a, c->r1, 1.0, c->m2(), c->M2()) <= 1e-5);
        }
        CHECK(oracle::ode_residual(a, c->r0, c->r1, c->m1(), c->M1()) <= 1e-5);
        CHECK(oracle::ode_residual(a, 1.0, 1 + beta, p / (p + 1), 0.0) <= 1e-5);
    }
}
