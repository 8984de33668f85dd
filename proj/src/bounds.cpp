#include "touchdown/bounds.hpp"

#include "touchdown/errors.hpp"
#include "touchdown/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace touchdown {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double decay_factor(HeatDecay hd) { return hd == HeatDecay::Conservative ? 16.0 : 1.0; }

// erf(a / (2 sqrt(dt))) including the dt -> 0 limit.
double erf_over_root(double a, double dt) {
    if (dt > 0) return erf(a / (2 * std::sqrt(dt)));
    if (a > 0) return 1.0;
    if (a < 0) return -1.0;
    return 0.0;
}

// Shared shifted-quotient / node-quotient minimum over a decreasing pair (N, D).
// D[i] must be positive for i < n; D[n] may vanish.
BoundValue quotient_min(const std::vector<double>& N, const std::vector<double>& D, Mode mode) {
    const std::size_t n = N.size() - 1;
    double best = kInf;
    std::size_t arg = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(D[i] > 0)) throw std::logic_error("nonpositive denominator inside a cell");
        const double q = (mode == Mode::Certify ? N[i + 1] : N[i]) / D[i];
        if (q < best) {
            best = q;
            arg = i;
        }
    }
    if (mode == Mode::Explore && D[n] > 0) {
        const double q = N[n] / D[n];
        if (q < best) {
            best = q;
            arg = n;
        }
    }
    BoundValue out{best, mode == Mode::Certify, std::nullopt, static_cast<int>(arg)};
    if (mode == Mode::Certify) out.error_estimate = (N[arg] - N[arg + 1]) / D[arg];
    return out;
}

void require_cells(const BoundMode& m) {
    if (m.n < 2) throw std::invalid_argument("bound discretization needs at least 2 cells");
}

} // namespace

HeatDecay default_heat_decay(Theorem th) {
    return th == Theorem::OP3 ? HeatDecay::Sharp : HeatDecay::Conservative;
}

std::string_view to_string(HeatDecay hd) { return hd == HeatDecay::Sharp ? "sharp" : "conservative"; }

std::optional<HeatDecay> parse_heat_decay(std::string_view s) {
    if (s == "sharp") return HeatDecay::Sharp;
    if (s == "conservative") return HeatDecay::Conservative;
    return std::nullopt;
}

double S(double t, double beta, double d0, HeatDecay hd) {
    if (!(t > 0)) throw std::domain_error("S: t must be positive");
    if (!(beta >= 0 && beta < d0)) throw std::domain_error("S: beta must lie in [0, d0)");
    const double pi2 = std::numbers::pi * std::numbers::pi;
    const double decay = std::exp(-decay_factor(hd) * pi2 * t / (4 * (d0 + 1) * (d0 + 1)));
    return decay * -std::expm1(-d0 * (d0 - beta) / t);
}

BoundValue H_bound(double t, double beta, double p, BoundMode mode) {
    if (!(t > 0) || !(beta > 0)) throw std::domain_error("H_bound: t and beta must be positive");
    require_cells(mode);
    const int n = mode.n;
    const double rt = std::sqrt(t);
    std::vector<double> N(n + 1), D(n + 1);
    for (int i = 0; i <= n; ++i) {
        const double x = static_cast<double>(i) / n;
        N[i] = erf((1 + beta * x / 2) / rt) - erf(beta * x / (2 * rt));
        D[i] = std::pow(1 - x, p + 1);
    }
    D[n] = 0.0;
    return quotient_min(N, D, mode.mode);
}

GShape g_shape(double beta, double K, double eta, double p, double mu) {
    GShape g{};
    const double ep = std::pow(eta, p);
    g.L = 1 + (p + 1) * K * ep;
    g.Gamma = std::sqrt((p + 1) * eta * g.L / (p * K * mu * beta * beta));
    g.A = std::atan(g.Gamma);
    g.alpha = 1 + p / g.L;
    g.delta = g.A * (1 + K * ep) * std::sqrt((p + 1) * eta / (p * g.L * K * mu));
    return g;
}

double delta(double beta, double K, double eta, double p, double mu) {
    return g_shape(beta, K, eta, p, mu).delta;
}

BoundValue G_bound(double t, double beta, double K, double eta, double p, double mu, BoundMode mode) {
    if (!(t > 0) || !(beta > 0) || !(K > 0) || !(eta > 0) || !(eta <= 1))
        throw std::domain_error("G_bound: invalid argument");
    require_cells(mode);
    const GShape g = g_shape(beta, K, eta, p, mu);
    if (!(g.delta <= 1)) throw Infeasible("G_bound: delta > 1");
    const int n = mode.n;
    const double rt2 = 2 * std::sqrt(t);
    const double scale = std::pow(g.Gamma * g.Gamma + 1, g.alpha / 2);
    std::vector<double> N(n + 1), D(n + 1);
    for (int i = 0; i <= n; ++i) {
        const double x = static_cast<double>(i) / n;
        const double w = (1 - x) * g.delta;
        N[i] = erf((2 - w) / rt2) + erf(w / rt2);
        D[i] = scale * cos_pow(g.A * x, g.alpha);
    }
    return quotient_min(N, D, mode.mode);
}

double Y(double s, double p, double mu, double d0, HeatDecay hd) {
    if (s <= 0) return 0.0;
    return S(s, 0.0, d0, hd) * erf(1 / std::sqrt(s)) * (p + 1) * mu / 2 * s;
}

double Ytilde(double t, double s, double p, double mu, double d0, HeatDecay hd) {
    if (s <= 0) return 0.0;
    return S(t, 0.0, d0, hd) * erf(1 / std::sqrt(s)) * (p + 1) * mu / 2 * s;
}

LambdaQuadrature::LambdaQuadrature(double t, double p, double mu, double d0, int n_t, Mode mode, HeatDecay hd)
    : t_(t), n_(n_t), mode_(mode) {
    if (!(t > 0)) throw std::domain_error("Lambda: t must be positive");
    if (n_t < 1) throw std::invalid_argument("Lambda: need at least one panel");
    if (mode == Mode::Explore && n_ % 2 == 1) ++n_;
    const double expo = -p / (p + 1) - 1;
    s_.resize(n_ + 1);
    weight_.resize(n_ + 1);
    for (int j = 0; j <= n_; ++j) {
        s_[j] = t * j / n_;
        const double y = mode == Mode::Certify ? Ytilde(t, s_[j], p, mu, d0, hd) : Y(s_[j], p, mu, d0, hd);
        if (!(1 - y > 0)) throw SingularityReached("Lambda: 1 - Y vanishes inside [0,t]");
        weight_[j] = std::pow(1 - y, expo);
    }
}

double LambdaQuadrature::operator()(double r) const {
    const double h = t_ / n_;
    if (mode_ == Mode::Certify) {
        double sum = 0.0;
        for (int j = 0; j < n_; ++j) {
            const double tau_j = r <= 1 ? s_[j] : s_[j + 1];
            const double bracket = erf_over_root(r + 1, t_ - s_[j]) + erf_over_root(1 - r, t_ - tau_j);
            if (bracket > 0) sum += weight_[j] * bracket;
        }
        return 0.5 * h * sum;
    }
    double odd = 0.0, even = 0.0, ends = 0.0;
    for (int j = 0; j <= n_; ++j) {
        const double dt = j == n_ ? 0.0 : t_ - s_[j];
        const double v = weight_[j] * (erf_over_root(r + 1, dt) + erf_over_root(1 - r, dt));
        if (j == 0 || j == n_) ends += v;
        else if (j % 2 == 1) odd += v;
        else even += v;
    }
    return 0.5 * h / 3 * (ends + 4 * odd + 2 * even);
}

double Lambda_lower(double t, double r, double p, double mu, double d0, int n_t, Mode mode, HeatDecay hd) {
    return LambdaQuadrature(t, p, mu, d0, n_t, mode, hd)(r);
}

double u_tilde(double r, double lambda, double mu, double f_inf, double d, double p) {
    const double low = lambda * mu / f_inf;
    if (!(low <= 1)) throw std::domain_error("u_tilde: lambda mu must not exceed f_inf");
    const double arg = std::sqrt(c_p(p) * f_inf) * std::max(r - 1 - d, 0.0);
    return low + (1 - low) / std::cosh(arg);
}

double W(double r, double tau, double K, double lambda, double p, double mu, double f_inf, double d) {
    if (!(tau > 0 && tau < 1)) throw std::domain_error("W: tau must lie in (0,1)");
    if (!(K <= p)) throw std::domain_error("W: K must not exceed p");
    const double v = 1 - (1 - tau) * u_tilde(r, lambda, mu, f_inf, d, p);
    return K * v + std::pow(v, -p);
}

GstarEvaluator::GstarEvaluator(const ProblemParams& pp, double tau, double t, double beta, double K, int n_r,
                               int n_t, Mode mode, HeatDecay hd)
    : pp_(pp), tau_(tau), K_(K), mode_(mode) {
    if (n_r < 2) throw std::invalid_argument("G*: need at least 2 cells in r");
    auto c = build_q1(pp.p, pp.mu, beta, K);
    if (!c) throw Infeasible("G*: q=1 cut-off infeasible");
    cut_ = *c;
    const LambdaQuadrature lam(t, pp.p, pp.mu, pp.d0, n_t, mode, hd);
    const double amp = pp.p * pp.mu * S(t, beta, pp.d0, hd);
    const double rt2 = 2 * std::sqrt(t);
    const double lo = cut_.r0, hi = 1 + beta;
    r_.resize(n_r + 1);
    N_.resize(n_r + 1);
    a_.resize(n_r + 1);
    for (int i = 0; i <= n_r; ++i) {
        const double r = i == n_r ? hi : lo + (hi - lo) * i / n_r;
        r_[i] = r;
        N_[i] = (1 + amp * lam(r)) * (erf((r + 1) / rt2) + erf((1 - r) / rt2));
        a_[i] = eval_q1(cut_, r);
    }
}

std::vector<double> GstarEvaluator::weights(double lambda) const {
    std::vector<double> D(r_.size());
    for (std::size_t i = 0; i < r_.size(); ++i)
        D[i] = W(r_[i], tau_, K_, lambda, pp_.p, pp_.mu, pp_.f_inf, pp_.d) * a_[i];
    return D;
}

BoundValue GstarEvaluator::bound(double lambda) const { return quotient_min(N_, weights(lambda), mode_); }

std::vector<std::pair<double, double>> GstarEvaluator::samples(double lambda) const {
    const auto D = weights(lambda);
    std::vector<std::pair<double, double>> out;
    for (std::size_t i = 0; i + 1 < r_.size(); ++i) out.emplace_back(r_[i], N_[i] / D[i]);
    return out;
}

BoundValue Gstar_bound(const ProblemParams& pp, double tau, double t, double beta, double K, double lambda,
                       int n_r, int n_t, Mode mode, HeatDecay hd) {
    return GstarEvaluator(pp, tau, t, beta, K, n_r, n_t, mode, hd).bound(lambda);
}

double rho2(double tau, const ProblemParams& pp) {
    const auto dc = derive_constants(pp);
    const double gap = dc.t_bar - t0(tau, pp);
    if (!(gap > 0)) throw std::domain_error("rho2: T_bar <= t0");
    return std::pow(tau, pp.p + 1) / ((pp.p + 1) * gap * pp.mu);
}

} // namespace touchdown
