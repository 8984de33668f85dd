#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace touchdown {

/// The three optimization problems. OP1 covers the one- and two-bump local
/// criterion, OP2 the variant with the extra parameter eta (valid for mu > mu0),
/// OP3 the global criterion with the lambda-dependent weight W.
enum class Theorem { OP1, OP2, OP3 };

std::string_view to_string(Theorem th);
std::optional<Theorem> parse_theorem(std::string_view s);

struct ProblemParams {
    double p = 2.0;      ///< nonlinearity exponent
    double mu = 1.0;     ///< lower bound of f on the bump
    double f_inf = 1.0;  ///< global bound on f
    double d = 0.1;      ///< exclusion margin
    double d0 = 5.0;     ///< distance from bump edge to the boundary
    std::optional<double> d1;  ///< half-gap between bumps minus 1 (multi-bump)
};

/// Throws std::invalid_argument when the basic invariants fail
/// (p > 0, 0 < mu <= f_inf, 0 < d < d0, d1 > 0).
void check_params(const ProblemParams& pp);

double mu0(double p);
double mu1(double p);
double c_p(double p);

struct DerivedConstants {
    double mu0;
    double mu1;
    double cp;
    double t_star;  ///< lower bound on the quenching time
    double t_bar;   ///< upper bound on the quenching time
};

/// Throws std::domain_error when mu <= mu0, where t_bar is undefined.
DerivedConstants derive_constants(const ProblemParams& pp);

/// Time at which the comparison ODE reaches the level 1 - tau.
/// Throws std::domain_error outside tau in (0,1).
double t0(double tau, const ProblemParams& pp);

struct HypothesisCheck {
    std::string name;
    bool ok;
    std::string detail;
};

struct HypothesisReport {
    Theorem theorem;
    std::vector<HypothesisCheck> checks;
    bool ok() const;
    std::string summary() const;
};

HypothesisReport validate_hypotheses(Theorem th, const ProblemParams& pp);

/// For OP3 with two or more bumps the clearance d0 is replaced by min(d0, d1).
/// Other problems use d0 unchanged.
ProblemParams effective_params(Theorem th, const ProblemParams& pp);

} // namespace touchdown
