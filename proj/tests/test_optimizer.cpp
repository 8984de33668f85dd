#include "oracles.hpp"
#include "touchdown/errors.hpp"
#include "touchdown/optimizer.hpp"
#include "touchdown/reference.hpp"

#include <doctest.h>

#include <cmath>

using namespace touchdown;

namespace {
ProblemParams make(double p, double mu, double f_inf, double d, double d0) {
    ProblemParams pp;
    pp.p = p, pp.mu = mu, pp.f_inf = f_inf, pp.d = d, pp.d0 = d0;
    return pp;
}
bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }
bool same(const Candidate& a, const Candidate& b) {
    return a.tau == b.tau && a.beta == b.beta && a.K == b.K && a.eta == b.eta && a.lambda == b.lambda;
}
} // namespace

TEST_CASE("objective at published optima") {
    const SearchConfig cfg;
    CHECK(near(objective({Theorem::OP1, 0.8111, 1.22, 0.7184}, Mode::Certify, make(2, 2, 2.25, 0.1, 4), cfg), 0.1182,
               5e-4));
    CHECK(near(objective({Theorem::OP2, 0.58, 2.71, 0.8, 0.8}, Mode::Certify, make(2, 0.7, 0.8, 0.01, 8), cfg),
               0.0815, 5e-4));
    CHECK(near(objective({Theorem::OP3, 0.8, 1.14, 0.62, 1, 0.22}, Mode::Certify, make(2, 2, 2.25, 0.1, 4), cfg),
               0.2111, 5e-4));
}

TEST_CASE("objective reports infeasible candidates instead of throwing") {
    const SearchConfig cfg;
    const auto pp = make(2, 2, 2.25, 0.1, 4);
    const Evaluation ev = evaluate({Theorem::OP1, 0.5, 1.22, 0.7184}, Mode::Explore, pp, cfg);
    CHECK_FALSE(ev.ok());
    CHECK(ev.kind == Failure::Infeasible);
    CHECK(std::isinf(objective({Theorem::OP1, 0.8, 5.0, 0.7}, Mode::Explore, pp, cfg)));
    std::string why;
    CHECK_FALSE(admissible({Theorem::OP3, 0.8, 1.14, 2.5, 1, 0.22}, pp, &why));
    CHECK(why == "K > p");
}

TEST_CASE("lexicographic tie-break order") {
    CHECK(lex_less({Theorem::OP1, 0.5, 2, 3}, {Theorem::OP1, 0.6, 1, 1}));
    CHECK(lex_less({Theorem::OP1, 0.5, 1, 3}, {Theorem::OP1, 0.5, 2, 1}));
    CHECK_FALSE(lex_less({Theorem::OP1, 0.5, 1, 1}, {Theorem::OP1, 0.5, 1, 1}));
}

TEST_CASE("prune_admits boundary cases") {
    const auto pp = make(2, 2, 2.25, 0.1, 4);
    CHECK(prune_admits({Theorem::OP1, 0.01, 0.11, 100}, 0.0, pp));
    const double rho = 0.1;
    Candidate c{Theorem::OP1, std::pow(2 * rho, 1 / 2.0), 1.2, 0.5};
    CHECK(prune_admits(c, rho, pp));
    c.tau = std::nextafter(c.tau, 0.0);
    CHECK_FALSE(prune_admits(c, rho, pp));
}

TEST_CASE("pruned candidates never beat rho_opt") {
    const SearchConfig cfg;
    const auto pp = make(2, 2, 2.25, 0.1, 4);
    oracle::Sampler rng(99);
    const double rho_opt = 0.1;
    int pruned = 0;
    for (int k = 0; k < 10000; ++k) {
        Candidate c{Theorem::OP1, rng.uniform(0.6, 1.0), rng.uniform(0.1, 4.0), rng.uniform(0.01, 6.0)};
        if (prune_admits(c, rho_opt, pp)) continue;
        ++pruned;
        CHECK(objective(c, Mode::Explore, pp, cfg) < rho_opt);
    }
    CHECK(pruned > 1000);
}

TEST_CASE("lambda descent keeps lambda as a valid cap") {
    const SearchConfig cfg;
    const auto pp = make(2, 2, 2.25, 0.1, 4);
    Candidate c{Theorem::OP3, 0.8, 1.14, 0.62};
    const double v = lambda_descent(c, pp, cfg);
    CHECK(c.lambda <= 0.3 + 1e-12);
    CHECK(c.lambda == doctest::Approx(0.22));
    CHECK(v == doctest::Approx(objective(c, Mode::Explore, pp, cfg)));
}

TEST_CASE("certify_at fills components and error estimates") {
    const SearchConfig cfg;
    const auto r = certify_at({Theorem::OP1, 0.8111, 1.22, 0.7184}, make(2, 2, 2.25, 0.1, 4), cfg);
    CHECK(r.rho_lower <= r.rho_explore + 1e-3);
    CHECK(r.components.count("H"));
    CHECK(r.errors.at("G") <= 1e-4);
    CHECK(r.sizes.at("n_x_H") == 50000);
    CHECK_THROWS_AS(certify_at({Theorem::OP1, 0.8111, 1.22, 0.01}, make(2, 2, 2.25, 0.1, 4), cfg), Infeasible);
}

TEST_CASE("search reaches the published examples") {
    const SearchConfig cfg;
    CHECK(search(Theorem::OP1, make(2, 1, 1.1, 0.1, 5), cfg).rho_lower >= 0.104);
    CHECK(search(Theorem::OP3, make(2, 6, 6.2, 0.01, 10), cfg).rho_lower >= 0.284);
    CHECK(search(Theorem::OP2, make(2, 0.5, 0.5, 0.01, 7), cfg).rho_lower >= 0.0225);
}

TEST_CASE("search is deterministic across runs and thread counts") {
    SearchConfig one, many;
    one.threads = 1;
    many.threads = 4;
    const auto pp = make(2, 4, 4.1, 0.05, 5);
    const auto a = search(Theorem::OP1, pp, one), b = search(Theorem::OP1, pp, many),
               c = search(Theorem::OP1, pp, many);
    CHECK(a.rho_lower == b.rho_lower);
    CHECK(b.rho_lower == c.rho_lower);
    CHECK(same(a.candidate, b.candidate));
    const auto x = search(Theorem::OP3, make(2, 2, 2.25, 0.1, 4), one),
               y = search(Theorem::OP3, make(2, 2, 2.25, 0.1, 4), many);
    CHECK(x.rho_lower == y.rho_lower);
    CHECK(same(x.candidate, y.candidate));
}

TEST_CASE("pruning does not change the optimum") {
    SearchConfig unpruned;
    unpruned.prune = false;
    const SearchConfig pruned;
    const auto& rows = reference::table3();
    for (std::size_t i : {0u, 2u, 5u, 12u}) {
        const auto a = search(Theorem::OP1, rows[i].params, pruned);
        const auto b = search(Theorem::OP1, rows[i].params, unpruned);
        CHECK(a.rho_lower == b.rho_lower);
        CHECK(same(a.candidate, b.candidate));
    }
}

TEST_CASE("certified ratio does not grow with the margin d") {
    const SearchConfig cfg;
    double prev = INFINITY;
    for (double d : {0.01, 0.05, 0.1}) {
        const double v = search(Theorem::OP1, make(2, 2, 2.25, d, 4), cfg).rho_lower;
        CHECK(v <= prev);
        prev = v;
    }
}

TEST_CASE("no admissible candidate is reported") {
    SearchConfig cfg;
    cfg.k_max = 0.05;  // below the first K step
    CHECK_THROWS_AS(search(Theorem::OP1, make(2, 2, 2.25, 0.1, 4), cfg), NoFeasibleCandidate);
}
