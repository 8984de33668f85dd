#include "touchdown/pdesim.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>

using namespace touchdown;

TEST_CASE("one-bump demo profile") {
    const Profile f = build_profile(ProfileKind::OneBump, demo_one_bump());
    CHECK(f.R == 6);
    CHECK(f(-1) == 2);
    CHECK(f(-2.05) == doctest::Approx(1.21));
    CHECK(f(3) == doctest::Approx(0.42));
    CHECK(f.f_inf <= 2.25);
    CHECK(f(7) == 0);
}

TEST_CASE("constant and two-bump profiles") {
    Geometry g;
    g.level = 0.3;
    const Profile c = build_profile(ProfileKind::Constant, g);
    CHECK(c.pieces.size() == 1);
    CHECK(c(0.99) == 0.3);
    const Profile two = build_profile(ProfileKind::TwoBump, demo_two_bump());
    CHECK(two(0) == 2);
    CHECK(two(5) == 2);
    CHECK(two(2.5) == doctest::Approx(0.42));
    Geometry bad = demo_two_bump();
    bad.bumps = {{-1, 1}, {0.5, 2}};
    CHECK_THROWS_AS(build_profile(ProfileKind::TwoBump, bad), std::invalid_argument);
    bad.bumps = {{-1, 1}};
    CHECK_THROWS_AS(build_profile(ProfileKind::TwoBump, bad), std::invalid_argument);
}

TEST_CASE("comparison bound") {
    CHECK(comparison_bound(0, 2, 1) == 0);
    CHECK(comparison_bound(1.0 / 3, 2, 1) == 1);
    CHECK(comparison_bound(0.1, 2, 1) == doctest::Approx(1 - std::cbrt(0.7)));
}

namespace {
SimResult run_constant(double k, int n, double t_max = 50) {
    Geometry g;
    g.level = k;
    SimConfig cfg;
    cfg.n_grid = n;
    cfg.t_max = t_max;
    return simulate(build_profile(ProfileKind::Constant, g), 2, cfg);
}
} // namespace

TEST_CASE("pull-in bracket for a constant profile") {
    const SimResult low = run_constant(0.25, 201);
    CHECK_FALSE(low.quenched);
    CHECK(low.touchdown_set.empty());
    const SimResult high = run_constant(0.40, 201);
    CHECK(high.quenched);
    CHECK(high.comparison_excess <= 10 * high.dx * high.dx);
    CHECK(high.min_increment >= -1e-10);
    REQUIRE(high.touchdown_set.size() == 1);
    CHECK(std::fabs(high.touchdown_set[0].lo + high.touchdown_set[0].hi) <= high.dx);
}

TEST_CASE("quenching time converges under grid refinement") {
    const SimResult a = run_constant(1.0, 201), b = run_constant(1.0, 401);
    REQUIRE(a.quenched);
    REQUIRE(b.quenched);
    CHECK(std::fabs(a.T_est - b.T_est) <= 0.05 * b.T_est);
    // Quenching cannot happen before T* = 1/((p+1) f_inf).
    CHECK(b.T_est >= 1.0 / 3);
}

TEST_CASE("symmetric bump gives a symmetric touchdown set") {
    Geometry g = demo_one_bump();
    g.bumps = {{-1, 1}};
    SimConfig cfg;
    cfg.n_grid = 601;
    const SimResult r = simulate(build_profile(ProfileKind::OneBump, g), 2, cfg);
    REQUIRE(r.quenched);
    REQUIRE(r.touchdown_set.size() == 1);
    CHECK(std::fabs(r.touchdown_set[0].lo + r.touchdown_set[0].hi) <= r.dx);
}

TEST_CASE("touchdown stays inside the bump neighbourhoods") {
    SimConfig cfg;
    cfg.n_grid = 601;
    const Profile one = build_profile(ProfileKind::OneBump, demo_one_bump());
    const auto r1 = verify_localization(one, 2, 0.2111, 2, 0.42, {{-2.1, 0.1}}, cfg);
    CHECK(r1.premise_ok);
    CHECK(r1.localized);
    CHECK(r1.runs.size() == 2);
    const Profile two = build_profile(ProfileKind::TwoBump, demo_two_bump());
    cfg.n_grid = 1001;
    const auto r2 = verify_localization(two, 2, 0.2111, 2, 0.42, {{-1.1, 1.1}, {3.9, 6.1}}, cfg);
    CHECK(r2.localized);
    for (const auto& run : r2.runs) {
        CHECK(run.comparison_excess <= 10 * run.dx * run.dx);
        CHECK(run.min_increment >= -1e-10);
    }
}

TEST_CASE("simulation arguments are validated") {
    SimConfig cfg;
    cfg.n_grid = 10;
    Geometry g;
    CHECK_THROWS_AS(simulate(build_profile(ProfileKind::Constant, g), 2, cfg), std::invalid_argument);
}
