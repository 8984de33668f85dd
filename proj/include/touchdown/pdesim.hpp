#pragma once

#include <string>
#include <vector>

namespace touchdown {

struct Interval {
    double lo, hi;
    bool contains(double x) const { return x >= lo && x <= hi; }
};

/// Linear piece of f on [x0, x1], from v0 to v1.
struct Piece {
    double x0, x1, v0, v1;
};

/// Piecewise-linear permittivity profile on (-R, R). Zero outside every piece.
struct Profile {
    double R = 1;
    std::vector<Piece> pieces;
    std::vector<Interval> bumps;
    double f_inf = 0;  ///< largest value taken by f

    double operator()(double x) const;
};

enum class ProfileKind { OneBump, TwoBump, Constant, Custom };

struct Geometry {
    double R = 1;
    std::vector<Interval> bumps;  ///< one entry for OneBump, two for TwoBump
    double level = 1;             ///< value on the bumps (and the constant value)
    double plateau = 0;           ///< value away from the bumps
    double ramp = 0.1;            ///< width of the linear transitions
    std::vector<Piece> pieces;    ///< Custom only
};

/// Throws std::invalid_argument on bumps outside (-R,R), overlaps, wrong order,
/// nonpositive ramp width or negative values.
Profile build_profile(ProfileKind kind, const Geometry& g);

/// Bump (-2,0) in (-6,6) at level 2, plateau 0.42, ramps 0.1.
Geometry demo_one_bump();
/// Bumps (-1,1) and (4,6) in (-10,10) at level 2, plateau 0.42, ramps 0.1.
Geometry demo_two_bump();

struct SimConfig {
    int n_grid = 801;               ///< nodes including both boundary nodes
    double dt_safety = 0.5;
    double quench_threshold = 1e-4; ///< stop when 1 - max u falls below this
    double t_max = 50;
    double steady_tol = 1e-10;      ///< stop early when max u_t falls below this
    int snapshots = 12;             ///< taken at t_max/snapshots spacing and at max u = k/(snapshots+1)
};

struct Snapshot {
    double t;
    std::vector<double> u;
};

struct SimResult {
    bool quenched = false;
    bool steady = false;
    double T_est = 0;          ///< extrapolated quenching time
    double T_uncertainty = 0;  ///< spread between two extrapolations, at least T_est - t_final
    double t_final = 0;
    double min_gap = 1;        ///< 1 - max u at the final time
    long steps = 0;
    std::vector<double> x;
    std::vector<Snapshot> snapshots;
    std::vector<Interval> touchdown_set;  ///< {1-u <= 2 min(1-u)} at the final time; empty without quenching
    double comparison_excess = 0;  ///< max of (max u - y(t)) over steps with t < T*
    double min_increment = 0;      ///< smallest u(t_{n+1}) - u(t_n) seen at any node
    double dx = 0;
};

/// y(t) = 1 - (1 - (p+1) f_inf t)^{1/(p+1)}, the spatially constant supersolution; 1 beyond T*.
double comparison_bound(double t, double p, double f_inf);

/// u_t - u_xx = f(x)(1-u)^{-p} on (-R,R), u = 0 on the boundary and at t = 0.
/// Linearly implicit diffusion with explicit reaction. Throws std::runtime_error
/// (NonConvergence) if the time step underflows before the quench threshold.
SimResult simulate(const Profile& f, double p, const SimConfig& cfg);

struct VerificationReport {
    bool premise_ok = false;  ///< plateau level below rho * mu
    bool localized = false;   ///< every run's touchdown set lies inside the allowed set
    std::vector<SimResult> runs;
    std::vector<int> grids;
    std::string detail;
};

/// Simulates at n_grid and 2 n_grid - 1 nodes and checks the touchdown set against allowed.
VerificationReport verify_localization(const Profile& f, double p, double rho_certified, double mu,
                                       double plateau, const std::vector<Interval>& allowed,
                                       const SimConfig& cfg);

} // namespace touchdown
