#include "touchdown/model.hpp"

#include "touchdown/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace touchdown {

std::string_view to_string(Theorem th) {
    switch (th) {
        case Theorem::OP1: return "op1";
        case Theorem::OP2: return "op2";
        case Theorem::OP3: return "op3";
    }
    return "?";
}

std::optional<Theorem> parse_theorem(std::string_view s) {
    if (s == "op1" || s == "OP1") return Theorem::OP1;
    if (s == "op2" || s == "OP2") return Theorem::OP2;
    if (s == "op3" || s == "OP3") return Theorem::OP3;
    return std::nullopt;
}

void check_params(const ProblemParams& pp) {
    auto fail = [](const char* what) { throw std::invalid_argument(what); };
    if (!(pp.p > 0)) fail("p must be positive");
    if (!(pp.mu > 0)) fail("mu must be positive");
    if (!(pp.mu <= pp.f_inf)) fail("mu must not exceed f_inf");
    if (!(pp.d > 0)) fail("d must be positive");
    if (!(pp.d < pp.d0)) fail("d must be smaller than d0");
    if (pp.d1 && !(*pp.d1 > 0)) fail("d1 must be positive");
}

double mu0(double p) {
    return std::pow(p, p) / std::pow(p + 1, p + 1) * std::numbers::pi * std::numbers::pi / 4;
}

double mu1(double p) { return 2 * mu0(p); }

double c_p(double p) { return std::pow(p + 1, p + 1) / std::pow(p, p); }

DerivedConstants derive_constants(const ProblemParams& pp) {
    const double m0 = mu0(pp.p);
    if (!(pp.mu > m0)) throw std::domain_error("mu <= mu0: the upper bound T-bar is undefined");
    return {m0, 2 * m0, c_p(pp.p), 1 / ((pp.p + 1) * pp.f_inf), 1 / ((pp.p + 1) * (pp.mu - m0))};
}

double t0(double tau, const ProblemParams& pp) {
    if (!(tau > 0 && tau < 1)) throw std::domain_error("t0: tau must lie in (0,1)");
    return (1 - std::pow(tau, pp.p + 1)) / ((pp.p + 1) * pp.f_inf);
}

bool HypothesisReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.ok; });
}

std::string HypothesisReport::summary() const {
    std::ostringstream os;
    os << to_string(theorem) << (ok() ? ": hypotheses hold" : ": hypotheses violated");
    for (const auto& c : checks) os << "\n  [" << (c.ok ? "ok" : "FAIL") << "] " << c.name << "  " << c.detail;
    return os.str();
}

ProblemParams effective_params(Theorem th, const ProblemParams& pp) {
    ProblemParams out = pp;
    if (th == Theorem::OP3 && pp.d1) out.d0 = std::min(pp.d0, *pp.d1);
    return out;
}

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

} // namespace

HypothesisReport validate_hypotheses(Theorem th, const ProblemParams& raw) {
    HypothesisReport rep{th, {}};
    auto add = [&](std::string name, bool ok, std::string detail) {
        rep.checks.push_back({std::move(name), ok, std::move(detail)});
    };
    try {
        check_params(raw);
        add("parameter ranges", true, "p>0, 0<mu<=f_inf, 0<d<d0");
    } catch (const std::invalid_argument& e) {
        add("parameter ranges", false, e.what());
        return rep;
    }
    const ProblemParams pp = effective_params(th, raw);
    const double p = pp.p, mu = pp.mu;
    switch (th) {
        case Theorem::OP1: {
            const double m1 = mu1(p);
            add("mu > mu1", mu > m1, "mu=" + fmt(mu) + ", mu1=" + fmt(m1));
            const double s = std::sqrt(p * mu);
            const double need = (p + 1) / s * overline_cot(s);
            add("d0 > (p+1)/sqrt(p mu) cotbar(sqrt(p mu))", pp.d0 > need,
                "d0=" + fmt(pp.d0) + ", bound=" + fmt(need));
            break;
        }
        case Theorem::OP2: {
            const double m0 = mu0(p);
            add("mu > mu0", mu > m0, "mu=" + fmt(mu) + ", mu0=" + fmt(m0));
            add("d0 > 0", pp.d0 > 0, "d0=" + fmt(pp.d0));
            break;
        }
        case Theorem::OP3: {
            const double m0 = mu0(p);
            const double a = std::atan(std::sqrt(p + 1));
            const double m3 = std::max(m0, a * a / p);
            add("mu > max(mu0, atan^2(sqrt(p+1))/p)", mu > m3, "mu=" + fmt(mu) + ", bound=" + fmt(m3));
            const double w = std::sqrt((p + 1) / (p * mu));
            add("d < sqrt((p+1)/(p mu))", pp.d < w, "d=" + fmt(pp.d) + ", width=" + fmt(w));
            add(raw.d1 ? "sqrt((p+1)/(p mu)) < min(d0,d1)" : "sqrt((p+1)/(p mu)) < d0", w < pp.d0,
                "width=" + fmt(w) + ", d0=" + fmt(pp.d0));
            break;
        }
    }
    return rep;
}

} // namespace touchdown
