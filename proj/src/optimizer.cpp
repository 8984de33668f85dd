#include "touchdown/optimizer.hpp"

#include "touchdown/errors.hpp"
#include "touchdown/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace touchdown {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kInf = std::numeric_limits<double>::infinity();

double bracket(double beta, const ProblemParams& pp) { return std::pow((beta - pp.d) / beta, pp.p + 1); }

// Lower end of the admissible K range for the q=0 cut-off.
double k_lower(double beta, double eta, const ProblemParams& pp) {
    return pp.p * eta / (pp.mu * beta * beta) - 1 / ((pp.p + 1) * std::pow(eta, pp.p));
}

// Upper end of the OP3 K range: K <= p and K mu beta^2 <= (p(p+2) - K)/p.
double k_upper_op3(double beta, const ProblemParams& pp) {
    return std::min(pp.p, pp.p * (pp.p + 2) / (1 + pp.p * pp.mu * beta * beta));
}

double tau_floor(Theorem th, const ProblemParams& pp) {
    return th == Theorem::OP1 ? pp.mu / (2 * pp.mu - mu1(pp.p)) : 0.0;
}

// The coarse tau grid spans (mu/(2mu-mu0), 1), a slightly wider interval than
// the admissible one; points below tau_floor are rejected by admissible().
double tau_grid_floor(Theorem th, const ProblemParams& pp) {
    return th == Theorem::OP1 ? pp.mu / (2 * pp.mu - mu0(pp.p)) : 0.0;
}

BoundMode mode_for(Mode m, int explore_n, int certify_n) {
    return m == Mode::Certify ? BoundMode::certify(certify_n) : BoundMode::explore(explore_n);
}

void put_error(Evaluation& ev, const char* name, const BoundValue& b) {
    if (b.error_estimate) ev.errors[name] = *b.error_estimate;
}

Evaluation eval_op1(const Candidate& c, Mode m, const ProblemParams& pp, const SearchConfig& cfg, HeatDecay hd) {
    Evaluation ev;
    const double t = t0(c.tau, pp);
    const auto H = H_bound(t, c.beta, pp.p, mode_for(m, cfg.n_x_explore, cfg.n_x_certify_H));
    const auto G = G_bound(t, c.beta, c.K, 1.0, pp.p, pp.mu, mode_for(m, cfg.n_x_explore, cfg.n_x_certify_G));
    const double s = S(t, c.beta, pp.d0, hd);
    const double b = bracket(c.beta, pp);
    const double w0 = c.K + std::pow(c.tau, -pp.p);
    ev.rho = 0.5 * b * s / w0 * std::min(H.value, G.value);
    ev.components = {{"t0", t}, {"bracket", b}, {"S", s}, {"H", H.value}, {"G", G.value},
                     {"K+tau^-p", w0}, {"delta", delta(c.beta, c.K, 1.0, pp.p, pp.mu)}};
    put_error(ev, "H", H);
    put_error(ev, "G", G);
    return ev;
}

Evaluation eval_op2(const Candidate& c, Mode m, const ProblemParams& pp, const SearchConfig& cfg, HeatDecay hd) {
    Evaluation ev;
    const double t = t0(c.tau, pp);
    const double tb = derive_constants(pp).t_bar;
    const auto gm = mode_for(m, cfg.n_x_explore, cfg.n_x_certify_G);
    const auto GT = G_bound(tb, c.beta, c.K, c.eta, pp.p, pp.mu, gm);
    const auto G0 = G_bound(t, c.beta, c.K, c.eta, pp.p, pp.mu, gm);
    const auto H0 = H_bound(t, c.beta, pp.p, mode_for(m, cfg.n_x_explore, cfg.n_x_certify_H));
    const double sT = S(tb, 0.0, pp.d0, hd);
    const double s0 = S(t, c.beta, pp.d0, hd);
    const double b = bracket(c.beta, pp);
    const double first = sT / (c.K + std::pow(c.eta, -pp.p)) * GT.value;
    const double second = s0 / (c.K + std::pow(c.tau, -pp.p)) * std::min(H0.value, G0.value);
    const double r1 = 0.5 * b * std::min(first, second);
    const double r2 = rho2(c.tau, pp);
    ev.rho = std::min(r1, r2);
    ev.components = {{"t0", t},       {"T_bar", tb},      {"bracket", b},       {"S(T_bar)", sT},
                     {"S(t0)", s0},   {"G(T_bar)", GT.value}, {"H(t0)", H0.value}, {"G(t0)", G0.value},
                     {"rho1", r1},    {"rho2", r2},       {"delta", delta(c.beta, c.K, c.eta, pp.p, pp.mu)}};
    put_error(ev, "G(T_bar)", GT);
    put_error(ev, "G(t0)", G0);
    put_error(ev, "H(t0)", H0);
    return ev;
}

Evaluation eval_op3(const Candidate& c, Mode m, const ProblemParams& pp, const SearchConfig& cfg, HeatDecay hd) {
    Evaluation ev;
    const double t = t0(c.tau, pp);
    const bool cert = m == Mode::Certify;
    const GstarEvaluator g(pp, c.tau, t, c.beta, c.K, cert ? cfg.n_r_certify : cfg.n_r_explore,
                           cert ? cfg.n_t_certify : cfg.n_t_explore, m, hd);
    const auto Gs = g.bound(c.lambda);
    const double s = S(t, c.beta, pp.d0, hd);
    const double b = bracket(c.beta, pp);
    const double main = 0.5 * b * s * Gs.value;
    const double r2 = rho2(c.tau, pp);
    ev.rho = std::min({main, r2, c.lambda});
    ev.components = {{"t0", t},     {"bracket", b}, {"S", s},          {"G*", Gs.value},
                     {"rho2", r2},  {"lambda", c.lambda}, {"rho_hat", std::min(main, r2)},
                     {"delta1+delta2", g.cutoff().delta1 + g.cutoff().delta2}};
    put_error(ev, "G*", Gs);
    return ev;
}

Evaluation evaluate_impl(const Candidate& c, Mode mode, const ProblemParams& pp, const SearchConfig& cfg,
                         double tau_lo);

// Exploration admits tau down to the grid floor; only the certified point must be admissible.
double explore_score(Candidate& c, const ProblemParams& pp, const SearchConfig& cfg) {
    if (c.theorem == Theorem::OP3) {
        try {
            return lambda_descent(c, pp, cfg);
        } catch (const std::exception&) {
            return kNegInf;
        }
    }
    return evaluate_impl(c, Mode::Explore, pp, cfg, tau_grid_floor(c.theorem, pp)).rho;
}

struct Best {
    double value = kNegInf;
    Candidate c;
    bool found() const { return value > kNegInf; }
    void consider(double v, const Candidate& cand) {
        if (!(v > kNegInf)) return;
        if (v > value || (v == value && lex_less(cand, c))) {
            value = v;
            c = cand;
        }
    }
};

// Overall argmax steers the refinement; the admissible one is what gets certified.
struct Tracker {
    Best any, admissible;
    double tau_lo = 0;
    void consider(double v, const Candidate& cand) {
        any.consider(v, cand);
        if (cand.tau >= tau_lo) admissible.consider(v, cand);
    }
};

// Scores a batch in parallel and folds it into best in index order.
long score_batch(std::vector<Candidate>& batch, Tracker& best, const ProblemParams& pp, const SearchConfig& cfg) {
    std::vector<double> vals(batch.size(), kNegInf);
    const int threads = cfg.threads > 0 ? cfg.threads : thread_count();
    parallel_for(batch.size(), [&](std::size_t i) { vals[i] = explore_score(batch[i], pp, cfg); }, threads);
    for (std::size_t i = 0; i < batch.size(); ++i) best.consider(vals[i], batch[i]);
    return static_cast<long>(batch.size());
}

std::vector<double> tau_grid(Theorem th, const ProblemParams& pp, int n) {
    const double lo = tau_grid_floor(th, pp);
    std::vector<double> out;
    for (int i = 0; i < n; ++i) out.push_back(lo + (i + 0.5) * (1 - lo) / n);
    return out;
}

std::vector<double> local_grid(double center, double eps, int R) {
    std::vector<double> out;
    for (int i = 0; i <= R; ++i) out.push_back(i * 2 == R ? center : center - eps + 2 * eps * i / R);
    return out;
}

} // namespace

double SearchConfig::lambda_start_for(double p) const {
    if (lambda_start) return *lambda_start;
    return p == 2.0 ? 0.3 : 0.4;
}

HeatDecay SearchConfig::decay_for(Theorem th) const { return heat_decay.value_or(default_heat_decay(th)); }

bool lex_less(const Candidate& a, const Candidate& b) {
    return std::tie(a.tau, a.beta, a.K, a.eta, a.lambda) < std::tie(b.tau, b.beta, b.K, b.eta, b.lambda);
}

namespace {

bool admissible_with_floor(const Candidate& c, const ProblemParams& pp, std::string* why, double tau_lo) {
    auto no = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    if (!(c.tau > 0 && c.tau < 1)) return no("tau outside (0,1)");
    if (!(c.beta > pp.d && c.beta < pp.d0)) return no("beta outside (d,d0)");
    if (!(c.K > 0)) return no("K not positive");
    switch (c.theorem) {
        case Theorem::OP1:
            if (!(pp.mu > mu1(pp.p))) return no("mu <= mu1");
            if (c.tau < tau_lo) return no("tau < mu/(2mu-mu1)");
            if (c.K < k_lower(c.beta, 1.0, pp)) return no("K below p/(mu beta^2) - 1/(p+1)");
            if (!(delta(c.beta, c.K, 1.0, pp.p, pp.mu) <= 1)) return no("delta > 1");
            return true;
        case Theorem::OP2:
            if (!(pp.mu > mu0(pp.p))) return no("mu <= mu0");
            if (!(c.eta > 0 && c.eta < 1)) return no("eta outside (0,1)");
            if (c.K < k_lower(c.beta, c.eta, pp)) return no("K below p eta/(mu beta^2) - 1/((p+1) eta^p)");
            if (!(delta(c.beta, c.K, c.eta, pp.p, pp.mu) <= 1)) return no("delta > 1");
            return true;
        case Theorem::OP3:
            if (!(pp.mu > mu0(pp.p))) return no("mu <= mu0");
            if (!(c.lambda > 0 && c.lambda < 1)) return no("lambda outside (0,1)");
            if (!(c.lambda * pp.mu <= pp.f_inf)) return no("lambda mu > f_inf");
            if (c.K > pp.p) return no("K > p");
            if (c.K * pp.mu * c.beta * c.beta > (pp.p * (pp.p + 2) - c.K) / pp.p)
                return no("K mu beta^2 > (p(p+2)-K)/p");
            if (!build_q1(pp.p, pp.mu, c.beta, c.K)) return no("delta1 + delta2 > 1");
            return true;
    }
    return no("unknown theorem");
}

} // namespace

bool admissible(const Candidate& c, const ProblemParams& pp, std::string* why) {
    return admissible_with_floor(c, pp, why, tau_floor(c.theorem, pp));
}

namespace {

Evaluation evaluate_impl(const Candidate& c, Mode mode, const ProblemParams& pp, const SearchConfig& cfg,
                         double tau_lo) {
    Evaluation ev;
    std::string why;
    if (!admissible_with_floor(c, pp, &why, tau_lo)) {
        ev.rho = kNegInf;
        ev.kind = Failure::Infeasible;
        ev.failure = why;
        return ev;
    }
    const HeatDecay hd = cfg.decay_for(c.theorem);
    try {
        switch (c.theorem) {
            case Theorem::OP1: return eval_op1(c, mode, pp, cfg, hd);
            case Theorem::OP2: return eval_op2(c, mode, pp, cfg, hd);
            case Theorem::OP3: return eval_op3(c, mode, pp, cfg, hd);
        }
    } catch (const Infeasible& e) {
        ev.kind = Failure::Infeasible;
        ev.failure = e.what();
    } catch (const SingularityReached& e) {
        ev.kind = Failure::Singular;
        ev.failure = e.what();
    } catch (const std::domain_error& e) {
        ev.kind = Failure::Domain;
        ev.failure = e.what();
    }
    ev.rho = kNegInf;
    return ev;
}

} // namespace

Evaluation evaluate(const Candidate& c, Mode mode, const ProblemParams& pp, const SearchConfig& cfg) {
    return evaluate_impl(c, mode, pp, cfg, tau_floor(c.theorem, pp));
}

double objective(const Candidate& c, Mode mode, const ProblemParams& pp, const SearchConfig& cfg) {
    return evaluate(c, mode, pp, cfg).rho;
}

double lambda_descent(Candidate& c, const ProblemParams& pp, const SearchConfig& cfg) {
    const HeatDecay hd = cfg.decay_for(Theorem::OP3);
    const double t = t0(c.tau, pp);
    const GstarEvaluator g(pp, c.tau, t, c.beta, c.K, cfg.n_r_explore, cfg.n_t_explore, Mode::Explore, hd);
    const double scale = 0.5 * bracket(c.beta, pp) * S(t, c.beta, pp.d0, hd);
    const double r2 = rho2(c.tau, pp);
    const double l0 = cfg.lambda_start_for(pp.p);
    double prev = kNegInf, prev_lambda = l0;
    for (int i = 0;; ++i) {
        const double lam = l0 - i * cfg.lambda_step;
        if (!(lam > 0) || lam * pp.mu > pp.f_inf) break;
        const double hat = std::min(scale * g.bound(lam).value, r2);
        const double cur = std::min(hat, lam);
        if (hat >= lam) {
            if (prev > cur) {
                c.lambda = prev_lambda;
                return prev;
            }
            c.lambda = lam;
            return cur;
        }
        prev = cur;
        prev_lambda = lam;
    }
    c.lambda = prev_lambda;
    return prev;
}

bool prune_admits(const Candidate& c, double rho_opt, const ProblemParams& pp) {
    if (!(rho_opt > 0)) return true;
    const double two = 2 * rho_opt;
    if (two >= 1) return false;
    if (c.beta < pp.d / (1 - std::pow(two, 1 / (pp.p + 1)))) return false;
    if (c.K > 1 / two - 1) return false;
    if (c.tau < std::pow(two, 1 / pp.p)) return false;
    return true;
}

CertifiedResult certify_at(const Candidate& c, const ProblemParams& pp, const SearchConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    CertifiedResult res;
    res.theorem = c.theorem;
    res.candidate = c;
    res.config = cfg;
    res.rho_explore = objective(c, Mode::Explore, pp, cfg);
    const Evaluation ev = evaluate(c, Mode::Certify, pp, cfg);
    if (!ev.ok()) {
        if (ev.kind == Failure::Singular) throw SingularityReached(ev.failure);
        throw Infeasible(ev.failure);
    }
    res.rho_lower = ev.rho;
    res.components = ev.components;
    res.errors = ev.errors;
    if (c.theorem == Theorem::OP3) {
        res.sizes = {{"n_r", cfg.n_r_certify}, {"n_t", cfg.n_t_certify}};
    } else {
        res.sizes = {{"n_x_H", cfg.n_x_certify_H}, {"n_x_G", cfg.n_x_certify_G}};
    }
    res.evaluations = 2;
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

CertifiedResult search(Theorem th, const ProblemParams& pp, const SearchConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    const bool prune = cfg.prune && th != Theorem::OP3;
    const double p = pp.p;
    const double lam0 = cfg.lambda_start_for(p);
    const auto taus = tau_grid(th, pp, cfg.n_tau);
    Tracker best;
    best.tau_lo = tau_floor(th, pp);
    long evaluations = 0;
    std::map<std::string, long> rejections;

    auto k_cap = [&] {
        double cap = cfg.k_max;
        if (prune && best.any.value > 0) cap = std::min(cap, 1 / (2 * best.any.value) - 1);
        return cap;
    };
    auto push = [&](std::vector<Candidate>& batch, const Candidate& c) {
        std::string why;
        if (!admissible_with_floor(c, pp, &why, tau_grid_floor(th, pp))) {
            ++rejections[why];
            return;
        }
        if (prune && !prune_admits(c, best.any.value, pp)) return;
        batch.push_back(c);
    };

    // Step 1: coarse exploration, one batch per beta.
    auto run_beta = [&](double beta) {
        std::vector<Candidate> batch;
        Candidate c;
        c.theorem = th;
        c.beta = beta;
        c.lambda = th == Theorem::OP3 ? lam0 : 0.0;
        if (th == Theorem::OP1) {
            const double K0 = std::max(k_lower(beta, 1.0, pp), cfg.eps_K);
            const double cap = k_cap();
            for (int j = 0; K0 + j * cfg.eps_K <= cap; ++j) {
                c.K = K0 + j * cfg.eps_K;
                if (!(delta(beta, c.K, 1.0, p, pp.mu) <= 1)) {
                    ++rejections["delta > 1"];
                    continue;
                }
                for (double tau : taus) {
                    c.tau = tau;
                    push(batch, c);
                }
            }
        } else if (th == Theorem::OP2) {
            const double cap = k_cap();
            for (int j = 1; j * cfg.eps_K <= cap; ++j) {
                c.K = j * cfg.eps_K;
                for (int e = 0; e < cfg.n_eta; ++e) {
                    c.eta = (e + 0.5) / cfg.n_eta;
                    if (c.K < k_lower(beta, c.eta, pp) || !(delta(beta, c.K, c.eta, p, pp.mu) <= 1)) {
                        ++rejections["K below range or delta > 1"];
                        continue;
                    }
                    for (double tau : taus) {
                        c.tau = tau;
                        push(batch, c);
                    }
                }
            }
        } else {
            const double cap = k_upper_op3(beta, pp);
            for (int j = 1; j * cfg.eps_K <= cap; ++j) {
                c.K = j * cfg.eps_K;
                if (!build_q1(p, pp.mu, beta, c.K)) {
                    ++rejections["delta1 + delta2 > 1"];
                    continue;
                }
                for (double tau : taus) {
                    c.tau = tau;
                    push(batch, c);
                }
            }
        }
        evaluations += score_batch(batch, best, pp, cfg);
    };

    const double beta0 = std::min(1 + pp.d, (pp.d0 + pp.d) / 2);
    for (int k = 0;; ++k) {
        const double beta = beta0 + k * cfg.eps_beta;
        if (!(beta < pp.d0)) break;
        if (th == Theorem::OP3 && k_upper_op3(beta, pp) < cfg.eps_K) break;
        run_beta(beta);
    }
    for (int k = 1;; ++k) {
        const double beta = beta0 - k * cfg.eps_beta;
        if (!(beta > pp.d)) break;
        if (prune && best.any.value > 0) {
            const double two = 2 * best.any.value;
            if (beta < pp.d / (1 - std::pow(two, 1 / (p + 1)))) break;
        }
        run_beta(beta);
    }

    auto no_candidate = [&] {
        std::string binding = "grid never evaluated a candidate";
        long most = 0;
        for (const auto& [why, n] : rejections)
            if (n > most) {
                most = n;
                binding = why;
            }
        throw NoFeasibleCandidate("no admissible candidate on the search grid; most frequent violation: " +
                                  binding);
    };

    // Step 2: refined exploration around the Step-1 argmax.
    if (!best.any.found()) no_candidate();
    const Candidate c1 = best.any.c;
    const double eps_tau = (1 - tau_grid_floor(th, pp)) / cfg.n_tau;
    const int R = cfg.refine_points;
    std::vector<Candidate> batch;
    const auto etas = th == Theorem::OP2 ? local_grid(c1.eta, 1.0 / cfg.n_eta, R) : std::vector<double>{c1.eta};
    for (double tau : local_grid(c1.tau, eps_tau, R))
        for (double beta : local_grid(c1.beta, cfg.eps_beta, R))
            for (double K : local_grid(c1.K, cfg.eps_K, R))
                for (double eta : etas) {
                    Candidate c = c1;
                    c.tau = tau;
                    c.beta = beta;
                    c.K = K;
                    c.eta = eta;
                    if (th == Theorem::OP3) c.lambda = lam0;
                    push(batch, c);
                }
    evaluations += score_batch(batch, best, pp, cfg);

    // Step 3: certified evaluation at the refined argmax.
    if (!best.admissible.found()) no_candidate();
    CertifiedResult res = certify_at(best.admissible.c, pp, cfg);
    res.rho_explore = best.admissible.value;
    res.evaluations = evaluations + 2;
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

} // namespace touchdown
