#pragma once

#include "touchdown/cutoff.hpp"
#include "touchdown/model.hpp"

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace touchdown {

/// Decay rate used in the semigroup comparison factor S.
///
/// Sharp is exp(-pi^2 t / (4 (d0+1)^2)). Conservative uses a 16 times larger
/// rate, exp(-4 pi^2 t / (d0+1)^2); it is smaller, so it stays a valid lower
/// bound, and it is the convention behind the published OP1/OP2 tables.
enum class HeatDecay { Sharp, Conservative };

HeatDecay default_heat_decay(Theorem th);
std::string_view to_string(HeatDecay hd);
std::optional<HeatDecay> parse_heat_decay(std::string_view s);

/// Semigroup comparison factor. Requires t > 0 and 0 <= beta < d0.
double S(double t, double beta, double d0, HeatDecay hd = HeatDecay::Sharp);

enum class Mode { Explore, Certify };

struct BoundMode {
    Mode mode;
    int n;  ///< number of subintervals, at least 2
    static BoundMode explore(int n) { return {Mode::Explore, n}; }
    static BoundMode certify(int n) { return {Mode::Certify, n}; }
};

struct BoundValue {
    double value;
    bool certified;
    std::optional<double> error_estimate;  ///< present iff certified
    int argmin = 0;                        ///< cell index of the minimum
};

/// Lower bound (Certify) or node estimate (Explore) of
/// inf_{0<x<1} [erf((1+beta x/2)/sqrt t) - erf(beta x/(2 sqrt t))] / (1-x)^{p+1}.
BoundValue H_bound(double t, double beta, double p, BoundMode mode);

struct GShape {
    double L, Gamma, A, alpha, delta;
};

/// Constants of the G functional for given (beta, K, eta); eta = 1 is the OP1 case.
GShape g_shape(double beta, double K, double eta, double p, double mu);
double delta(double beta, double K, double eta, double p, double mu);

/// Same two-mode contract as H_bound for G(t, beta, K, eta).
/// Throws Infeasible when delta > 1.
BoundValue G_bound(double t, double beta, double K, double eta, double p, double mu, BoundMode mode);

/// Y(s) = S(s,0) erf(1/sqrt s) (p+1) mu s / 2.
double Y(double s, double p, double mu, double d0, HeatDecay hd = HeatDecay::Sharp);
/// Lower estimate of Y on (0,t) that is increasing in s: S(t,0) replaces S(s,0).
double Ytilde(double t, double s, double p, double mu, double d0, HeatDecay hd = HeatDecay::Sharp);

/// Time integral Lambda(t, r) for a fixed t, reusable across many r.
///
/// Explore: composite Simpson on the exact integrand.
/// Certify: left/right rectangle rule with the bracket clipped at zero, a
/// guaranteed lower bound by monotonicity of each factor in s.
/// Throws SingularityReached if 1 - Y (or 1 - Ytilde) is not positive at a node.
class LambdaQuadrature {
public:
    LambdaQuadrature(double t, double p, double mu, double d0, int n_t, Mode mode,
                     HeatDecay hd = HeatDecay::Sharp);
    double operator()(double r) const;

private:
    double t_;
    int n_;
    Mode mode_;
    std::vector<double> s_;       // nodes
    std::vector<double> weight_;  // (1 - Y)^(-p/(p+1) - 1) at the nodes
};

double Lambda_lower(double t, double r, double p, double mu, double d0, int n_t, Mode mode,
                    HeatDecay hd = HeatDecay::Sharp);

/// Lower profile of u outside the bump used by the OP3 weight. Requires lambda mu <= f_inf.
double u_tilde(double r, double lambda, double mu, double f_inf, double d, double p);
/// K v + v^{-p} with v = 1 - (1 - tau) u_tilde(r). Requires tau in (0,1) and K <= p.
double W(double r, double tau, double K, double lambda, double p, double mu, double f_inf, double d);

/// G* for fixed (tau, t, beta, K). Everything except W depends only on these, so
/// the lambda descent reuses one evaluator.
class GstarEvaluator {
public:
    /// Throws Infeasible if the q=1 cut-off does not exist, SingularityReached from Lambda.
    GstarEvaluator(const ProblemParams& pp, double tau, double t, double beta, double K, int n_r,
                   int n_t, Mode mode, HeatDecay hd = HeatDecay::Sharp);

    BoundValue bound(double lambda) const;
    /// Node values (r_i, N(r_i) / D(r_i)) of the integrand, excluding r = 1 + beta.
    std::vector<std::pair<double, double>> samples(double lambda) const;
    const CutoffQ1& cutoff() const { return cut_; }

private:
    std::vector<double> weights(double lambda) const;

    ProblemParams pp_;
    double tau_, K_;
    Mode mode_;
    CutoffQ1 cut_;
    std::vector<double> r_, N_, a_;
};

BoundValue Gstar_bound(const ProblemParams& pp, double tau, double t, double beta, double K, double lambda,
                       int n_r, int n_t, Mode mode, HeatDecay hd = HeatDecay::Sharp);

/// tau^{p+1} / ((p+1)(T_bar - t0(tau)) mu). Requires mu > mu0.
double rho2(double tau, const ProblemParams& pp);

} // namespace touchdown
