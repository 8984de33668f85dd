#pragma once

#include <optional>

namespace touchdown {

/// Cut-off with a plateau, a cosine-power arch and a polynomial tail, used by
/// OP1 (eta = 1) and OP2. Satisfies a a'' = m a'^2 - M a^2 on [r0,1] and
/// a a'' = p/(p+1) a'^2 on (1, 1+beta].
struct CutoffQ0 {
    double p, mu, beta, K, eta;
    double m;       ///< p / ((p+1)(1 + K eta^p))
    double M;       ///< p K mu / (eta (1 + K eta^p))
    double delta0;  ///< width of the arch
    double r0;      ///< 1 - delta0
    double D;       ///< plateau height

    double operator()(double r) const;
};

/// Cut-off with a plateau, two cosine-power arches and a polynomial tail, used by OP3.
struct CutoffQ1 {
    double p, mu, beta, K;
    double L;  ///< p(p+2) - K
    double A0, A1, A2, A3;
    double delta1, delta2;
    double r0, r1;
    double alpha;
    double D1, D2, D11, D12;

    double operator()(double r) const;

    /// Coefficients (m, M) of a a'' = m a'^2 - M a^2 on [r0, r1) and [r1, 1].
    double m1() const;
    double M1() const;
    double m2() const;
    double M2() const;
};

/// Returns nullopt when the construction is infeasible (delta0 > 1 or the lower
/// bound K >= p eta/(mu beta^2) - 1/((p+1) eta^p) fails).
/// Throws std::invalid_argument on nonpositive inputs or eta outside (0,1].
std::optional<CutoffQ0> build_q0(double p, double mu, double beta, double K, double eta = 1.0);

/// Returns nullopt when delta1 + delta2 > 1, K > p, or K mu beta^2 > (p(p+2)-K)/p.
std::optional<CutoffQ1> build_q1(double p, double mu, double beta, double K);

/// Evaluation on [0, 1+beta]; throws std::domain_error outside.
double eval_q0(const CutoffQ0& c, double r);
double eval_q1(const CutoffQ1& c, double r);

} // namespace touchdown
