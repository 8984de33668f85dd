#include "touchdown/pdesim.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace touchdown {

double Profile::operator()(double x) const {
    for (const auto& pc : pieces) {
        if (x >= pc.x0 && x <= pc.x1) {
            if (pc.x1 == pc.x0) return std::max(pc.v0, pc.v1);
            return pc.v0 + (pc.v1 - pc.v0) * (x - pc.x0) / (pc.x1 - pc.x0);
        }
    }
    return 0.0;
}

namespace {

void finish(Profile& f) {
    f.f_inf = 0;
    for (const auto& pc : f.pieces) {
        if (pc.v0 < 0 || pc.v1 < 0) throw std::invalid_argument("profile values must be nonnegative");
        if (pc.x1 < pc.x0) throw std::invalid_argument("profile piece with reversed endpoints");
        f.f_inf = std::max({f.f_inf, pc.v0, pc.v1});
    }
}

} // namespace

Profile build_profile(ProfileKind kind, const Geometry& g) {
    if (!(g.R > 0)) throw std::invalid_argument("R must be positive");
    Profile f;
    f.R = g.R;
    switch (kind) {
        case ProfileKind::Constant:
            f.pieces = {{-g.R, g.R, g.level, g.level}};
            f.bumps = {{-g.R, g.R}};
            break;
        case ProfileKind::Custom:
            f.pieces = g.pieces;
            f.bumps = g.bumps;
            break;
        case ProfileKind::OneBump:
        case ProfileKind::TwoBump: {
            const std::size_t want = kind == ProfileKind::OneBump ? 1 : 2;
            if (g.bumps.size() != want) throw std::invalid_argument("wrong number of bumps for the profile kind");
            if (!(g.ramp > 0)) throw std::invalid_argument("ramp width must be positive");
            double left = -g.R;
            for (const auto& b : g.bumps) {
                if (!(b.lo < b.hi)) throw std::invalid_argument("bump with empty interior");
                if (!(b.lo - g.ramp > left)) throw std::invalid_argument("bumps overlap or leave (-R,R)");
                f.pieces.push_back({left, b.lo - g.ramp, g.plateau, g.plateau});
                f.pieces.push_back({b.lo - g.ramp, b.lo, g.plateau, g.level});
                f.pieces.push_back({b.lo, b.hi, g.level, g.level});
                f.pieces.push_back({b.hi, b.hi + g.ramp, g.level, g.plateau});
                left = b.hi + g.ramp;
            }
            if (!(left < g.R)) throw std::invalid_argument("bump leaves (-R,R)");
            f.pieces.push_back({left, g.R, g.plateau, g.plateau});
            f.bumps = g.bumps;
            break;
        }
    }
    finish(f);
    return f;
}

Geometry demo_one_bump() {
    Geometry g;
    g.R = 6;
    g.bumps = {{-2, 0}};
    g.level = 2;
    g.plateau = 0.42;
    g.ramp = 0.1;
    return g;
}

Geometry demo_two_bump() {
    Geometry g = demo_one_bump();
    g.R = 10;
    g.bumps = {{-1, 1}, {4, 6}};
    return g;
}

double comparison_bound(double t, double p, double f_inf) {
    const double base = 1 - (p + 1) * f_inf * t;
    if (base <= 0) return 1.0;
    return 1 - std::pow(base, 1 / (p + 1));
}

namespace {

// Zero of the line through (t1, g1), (t2, g2) with g = (1 - max u)^{p+1}.
double extrapolate(double t1, double g1, double t2, double g2) {
    const double slope = (g2 - g1) / (t2 - t1);
    if (!(slope < 0)) return t2;
    return t2 - g2 / slope;
}

std::vector<Interval> level_set(const std::vector<double>& x, const std::vector<double>& u) {
    double gmin = 1;
    for (std::size_t i = 1; i + 1 < u.size(); ++i) gmin = std::min(gmin, 1 - u[i]);
    std::vector<Interval> out;
    bool open = false;
    for (std::size_t i = 1; i + 1 < u.size(); ++i) {
        const bool in = 1 - u[i] <= 2 * gmin;
        if (in && !open) out.push_back({x[i], x[i]});
        if (in) out.back().hi = x[i];
        open = in;
    }
    return out;
}

} // namespace

SimResult simulate(const Profile& f, double p, const SimConfig& cfg) {
    if (cfg.n_grid < 64) throw std::invalid_argument("n_grid must be at least 64");
    if (!(cfg.quench_threshold > 0 && cfg.quench_threshold < 1)) throw std::invalid_argument("bad quench threshold");
    if (!(cfg.dt_safety > 0 && cfg.dt_safety < 1)) throw std::invalid_argument("dt_safety must lie in (0,1)");
    if (!(p > 0)) throw std::invalid_argument("p must be positive");

    const int n = cfg.n_grid;
    const double dx = 2 * f.R / (n - 1);
    SimResult res;
    res.dx = dx;
    res.x.resize(n);
    std::vector<double> fx(n), u(n, 0.0), rhs(n), next(n), cp(n);
    for (int i = 0; i < n; ++i) {
        res.x[i] = -f.R + i * dx;
        fx[i] = f(res.x[i]);
    }
    const double f_inf = std::max(f.f_inf, 1e-300);
    const double t_star = 1 / ((p + 1) * f_inf);
    const double snap_dt = cfg.t_max / std::max(cfg.snapshots, 1);
    double next_snap = snap_dt;
    int next_level = 1;  // also snapshot when max u crosses next_level / (snapshots + 1)
    const int levels = std::max(cfg.snapshots, 1) + 1;
    double t = 0;
    double min_inc = 0;
    std::vector<std::pair<double, double>> history;  // (t, (1 - max u)^{p+1})

    while (true) {
        double umax = 0;
        for (int i = 1; i < n - 1; ++i) umax = std::max(umax, u[i]);
        const double gap = 1 - umax;
        history.emplace_back(t, std::pow(gap, p + 1));
        if (gap < cfg.quench_threshold) {
            res.quenched = true;
            break;
        }
        if (t >= cfg.t_max) break;
        double dt = cfg.dt_safety * std::min(dx * dx / 2, std::pow(gap, p + 1) / ((p + 1) * f_inf));
        dt = std::min(dt, cfg.t_max - t);
        if (!(dt > 1e-300) || t + dt == t) throw std::runtime_error("NonConvergence: time step underflow");

        // (I - dt D2) next = u + dt f (1-u)^{-p}, Dirichlet zero at both ends (Thomas algorithm).
        const double lam = dt / (dx * dx);
        for (int i = 1; i < n - 1; ++i) rhs[i] = u[i] + dt * fx[i] * std::pow(1 - u[i], -p);
        const double diag = 1 + 2 * lam, off = -lam;
        cp[1] = off / diag;
        next[1] = rhs[1] / diag;
        for (int i = 2; i < n - 1; ++i) {
            const double m = diag - off * cp[i - 1];
            cp[i] = off / m;
            next[i] = (rhs[i] - off * next[i - 1]) / m;
        }
        for (int i = n - 3; i >= 1; --i) next[i] -= cp[i] * next[i + 1];
        next[0] = next[n - 1] = 0;

        double max_rate = 0;
        for (int i = 1; i < n - 1; ++i) {
            const double inc = next[i] - u[i];
            min_inc = std::min(min_inc, inc);
            max_rate = std::max(max_rate, std::fabs(inc) / dt);
        }
        u.swap(next);
        t += dt;
        ++res.steps;

        if (t < t_star) {
            double m = 0;
            for (int i = 1; i < n - 1; ++i) m = std::max(m, u[i]);
            res.comparison_excess = std::max(res.comparison_excess, m - comparison_bound(t, p, f_inf));
        }
        double top = 0;
        for (int i = 1; i < n - 1; ++i) top = std::max(top, u[i]);
        const bool time_due = t >= next_snap, level_due = top >= double(next_level) / levels;
        if (time_due || level_due) res.snapshots.push_back({t, u});
        while (t >= next_snap) next_snap += snap_dt;
        while (next_level < levels && top >= double(next_level) / levels) ++next_level;
        if (max_rate < cfg.steady_tol) {
            res.steady = true;
            break;
        }
    }

    res.t_final = t;
    double umax = 0;
    for (int i = 1; i < n - 1; ++i) umax = std::max(umax, u[i]);
    res.min_gap = 1 - umax;
    res.min_increment = min_inc;
    res.snapshots.push_back({t, u});
    if (res.quenched) res.touchdown_set = level_set(res.x, u);
    const std::size_t k = history.size();
    if (res.quenched && k >= 2) {
        res.T_est = extrapolate(history[k - 2].first, history[k - 2].second, history[k - 1].first,
                                history[k - 1].second);
        // Second estimate from the last segment where the gap^{p+1} was still 100 times larger.
        std::size_t j = k - 2;
        while (j > 0 && history[j].second < 100 * history[k - 1].second) --j;
        const double T2 = extrapolate(history[j].first, history[j].second, history[j + 1].first,
                                      history[j + 1].second);
        res.T_uncertainty = std::max(std::fabs(res.T_est - T2), res.T_est - t);
    } else if (res.quenched) {
        res.T_est = t;
    }
    return res;
}

VerificationReport verify_localization(const Profile& f, double p, double rho_certified, double mu,
                                       double plateau, const std::vector<Interval>& allowed,
                                       const SimConfig& cfg) {
    VerificationReport rep;
    rep.premise_ok = plateau < rho_certified * mu;
    rep.localized = true;
    std::ostringstream os;
    for (int grid : {cfg.n_grid, 2 * cfg.n_grid - 1}) {
        SimConfig c = cfg;
        c.n_grid = grid;
        SimResult r = simulate(f, p, c);
        bool inside = r.quenched;
        for (const auto& iv : r.touchdown_set) {
            const bool ok = std::any_of(allowed.begin(), allowed.end(),
                                        [&](const Interval& a) { return iv.lo >= a.lo && iv.hi <= a.hi; });
            inside = inside && ok;
        }
        os << "grid " << grid << ": " << (r.quenched ? "quenched" : "no quench") << ", T~" << r.T_est
           << ", touchdown set";
        for (const auto& iv : r.touchdown_set) os << " [" << iv.lo << ", " << iv.hi << "]";
        os << (inside ? " inside" : " NOT inside") << " the allowed set\n";
        rep.localized = rep.localized && inside;
        rep.grids.push_back(grid);
        rep.runs.push_back(std::move(r));
    }
    rep.detail = os.str();
    return rep;
}

} // namespace touchdown
