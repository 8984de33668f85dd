#include "touchdown/cutoff.hpp"

#include "touchdown/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace touchdown {

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0) || !std::isfinite(v)) throw std::invalid_argument(what);
}

void require_domain(double r, double beta) {
    if (!(r >= 0 && r <= 1 + beta)) throw std::domain_error("cut-off evaluated outside [0, 1+beta]");
}

double tail(double r, double beta, double p) { return std::pow((1 + beta - r) / beta, p + 1); }

} // namespace

std::optional<CutoffQ0> build_q0(double p, double mu, double beta, double K, double eta) {
    require_positive(p, "p must be positive");
    require_positive(mu, "mu must be positive");
    require_positive(beta, "beta must be positive");
    require_positive(K, "K must be positive");
    if (!(eta > 0 && eta <= 1)) throw std::invalid_argument("eta must lie in (0,1]");

    const double ep = std::pow(eta, p);
    if (K < p * eta / (mu * beta * beta) - 1 / ((p + 1) * ep)) return std::nullopt;

    CutoffQ0 c{};
    c.p = p; c.mu = mu; c.beta = beta; c.K = K; c.eta = eta;
    c.m = p / ((p + 1) * (1 + K * ep));
    c.M = p * K * mu / (eta * (1 + K * ep));
    const double q = (p + 1) / beta * std::sqrt((1 - c.m) / c.M);
    c.delta0 = std::atan(q) / std::sqrt(c.M * (1 - c.m));
    if (!(c.delta0 <= 1)) return std::nullopt;
    c.r0 = 1 - c.delta0;
    c.D = std::pow(1 + q * q, 1 / (2 * (1 - c.m)));
    return c;
}

double eval_q0(const CutoffQ0& c, double r) {
    require_domain(r, c.beta);
    if (r > 1) return tail(r, c.beta, c.p);
    if (r < c.r0) return c.D;
    return c.D * cos_pow(std::sqrt(c.M * (1 - c.m)) * (r - c.r0), 1 / (1 - c.m));
}

double CutoffQ0::operator()(double r) const { return eval_q0(*this, r); }

std::optional<CutoffQ1> build_q1(double p, double mu, double beta, double K) {
    require_positive(p, "p must be positive");
    require_positive(mu, "mu must be positive");
    require_positive(beta, "beta must be positive");
    require_positive(K, "K must be positive");
    if (K > p) return std::nullopt;
    const double L = p * (p + 2) - K;
    const double kmb = K * mu * beta * beta;
    if (kmb > L / p) return std::nullopt;

    CutoffQ1 c{};
    c.p = p; c.mu = mu; c.beta = beta; c.K = K; c.L = L;
    const double skm = std::sqrt(K * mu);
    c.A0 = std::sqrt((p * (1 + K) + K * L) / (p * (1 + K) * (1 + K)));
    c.A1 = std::atan(std::sqrt(p * (1 + K) / L + K));
    c.A2 = std::atan(std::sqrt(p / L));
    c.A3 = std::atan(1 / std::sqrt(kmb));
    c.delta1 = c.A1 / (c.A0 * skm);
    // A3 >= A2 mathematically under the hypothesis above; clamp the rounding at equality.
    c.delta2 = std::max(0.0, (c.A3 - c.A2) / skm);
    if (!(c.delta1 + c.delta2 <= 1)) return std::nullopt;
    c.r0 = 1 - c.delta1 - c.delta2;
    c.r1 = 1 - c.delta2;
    c.alpha = (p + 1) / ((1 + K) * c.A0 * c.A0);
    c.D2 = std::pow(1 + 1 / kmb, (p + 1) / 2);
    c.D11 = std::sqrt(1 + K + p * (1 + K) / L);
    c.D12 = std::sqrt(1 + p / L);
    c.D1 = c.D2 * std::pow(c.D11, c.alpha) / std::pow(c.D12, p + 1);
    return c;
}

double eval_q1(const CutoffQ1& c, double r) {
    require_domain(r, c.beta);
    if (r > 1) return tail(r, c.beta, c.p);
    const double skm = std::sqrt(c.K * c.mu);
    if (r >= c.r1) return c.D2 * cos_pow(skm * (r - 1) + c.A3, c.p + 1);
    if (r >= c.r0) return c.D1 * cos_pow(c.A0 * skm * (r - c.r0), c.alpha);
    return c.D1;
}

double CutoffQ1::operator()(double r) const { return eval_q1(*this, r); }

double CutoffQ1::m1() const { return (p - K) * (p - K) / (p * (p + 1) * (1 + K)); }
double CutoffQ1::M1() const { return (p + 1) * K * mu / (1 + K); }
double CutoffQ1::m2() const { return p / (p + 1); }
double CutoffQ1::M2() const { return (p + 1) * K * mu; }

} // namespace touchdown
