#include "cli.hpp"

#include "output.hpp"
#include "touchdown/errors.hpp"
#include "touchdown/parallel.hpp"
#include "touchdown/pdesim.hpp"
#include "touchdown/reference.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace touchdown::cli {

ProblemParams Options::params() const {
    ProblemParams pp;
    pp.p = p;
    pp.mu = mu;
    pp.f_inf = f_inf;
    pp.d = d;
    pp.d0 = d0;
    pp.d1 = d1;
    return pp;
}

void build_app(CLI::App& app, Options& o) {
    app.description("Certified no-touchdown thresholds for the MEMS quenching problem");
    app.require_subcommand(1);
    app.set_config("--config", "", "Flat `key = value` file; command-line flags take precedence");

    const char* prob = "Problem";
    app.add_option("--theorem", o.theorem, "op1, op2 or op3")->group(prob);
    app.add_option("--p", o.p, "Nonlinearity exponent")->group(prob);
    app.add_option("--mu", o.mu, "Lower bound of f on the bump")->group(prob);
    app.add_option("--finf", o.f_inf, "Global bound on f")->group(prob);
    app.add_option("--d", o.d, "Exclusion margin")->group(prob);
    app.add_option("--d0", o.d0, "Distance from the bump to the boundary")->group(prob);
    app.add_option("--d1", o.d1, "Half-gap to the next bump (multi-bump op3)")->group(prob);

    const char* point = "Point evaluation";
    app.add_option("--tau", o.tau)->group(point);
    app.add_option("--beta", o.beta)->group(point);
    app.add_option("--K", o.K)->group(point);
    app.add_option("--eta", o.eta, "op2 only")->group(point);
    app.add_option("--lambda", o.lambda, "op3 only; omitted means run the lambda descent")->group(point);

    const char* knobs = "Search";
    auto& s = o.search;
    app.add_option("--heat-decay", o.heat_decay, "sharp or conservative")->group(knobs);
    app.add_option("--eps-beta", s.eps_beta)->group(knobs);
    app.add_option("--eps-K", s.eps_K)->group(knobs);
    app.add_option("--n-tau", s.n_tau)->group(knobs);
    app.add_option("--n-eta", s.n_eta)->group(knobs);
    app.add_option("--n-x-explore", s.n_x_explore)->group(knobs);
    app.add_option("--n-x-certify-H", s.n_x_certify_H)->group(knobs);
    app.add_option("--n-x-certify-G", s.n_x_certify_G)->group(knobs);
    app.add_option("--n-r-explore", s.n_r_explore)->group(knobs);
    app.add_option("--n-r-certify", s.n_r_certify)->group(knobs);
    app.add_option("--n-t-explore", s.n_t_explore)->group(knobs);
    app.add_option("--n-t-certify", s.n_t_certify)->group(knobs);
    app.add_option("--refine-points", s.refine_points)->group(knobs);
    app.add_option("--lambda-start", s.lambda_start)->group(knobs);
    app.add_option("--lambda-step", s.lambda_step)->group(knobs);
    app.add_option("--k-max", s.k_max)->group(knobs);
    app.add_option("--threads", s.threads, "0 means all cores (capped by TOUCHDOWN_CERT_THREADS)")->group(knobs);

    app.add_option("--out", o.out, "Output file (certify, table) or path prefix (simulate, plot)");

    auto* certify = app.add_subcommand("certify", "Certify a threshold ratio (search, or a single point)");
    certify->fallthrough();
    certify->add_flag("--json", o.json, "Print the result as JSON");

    auto* table = app.add_subcommand("table", "Recompute one of the published tables");
    table->fallthrough();
    table->add_option("--id", o.table_id, "Table number 1-5")->check(CLI::Range(1, 5));
    table->add_flag("--reference-only", o.reference_only, "Skip the full search per row");

    // Shared by simulate and plot (profile, solution).
    auto add_profile_options = [&o](CLI::App* sub) {
        sub->add_option("--profile", o.profile, "one-bump, two-bump or constant");
        sub->add_option("--level", o.level, "Value on the bumps (or the constant)");
        sub->add_option("--R", o.R, "Half-length of the domain");
        sub->add_option("--plateau", o.plateau, "Value away from the bumps");
        sub->add_option("--ramp", o.ramp, "Width of the linear transitions");
        sub->add_option("--bump", o.bumps, "Bump endpoints, repeated: --bump -2 0")->expected(2, 4);
        sub->add_option("--n-grid", o.n_grid, "Nodes including the boundary");
        sub->add_option("--t-max", o.t_max);
    };

    auto* sim = app.add_subcommand("simulate", "Finite-difference simulation of the quenching problem");
    sim->fallthrough();
    add_profile_options(sim);
    sim->add_flag("--verify", o.verify, "Check the touchdown set on two grids");
    sim->add_option("--rho", o.rho, "Certified ratio for the localization premise");

    auto* plot = app.add_subcommand("plot", "Write CSV and SVG curve data");
    plot->fallthrough();
    plot->add_option("--what", o.what, "cutoff, gstar-integrand, profile or solution");
    add_profile_options(plot);
}

namespace {

Theorem theorem_of(const Options& o) {
    auto th = parse_theorem(o.theorem);
    if (!th) throw std::invalid_argument("unknown theorem '" + o.theorem + "'");
    return *th;
}

SearchConfig config_of(const Options& o) {
    SearchConfig cfg = o.search;
    if (!o.heat_decay.empty()) {
        auto hd = parse_heat_decay(o.heat_decay);
        if (!hd) throw std::invalid_argument("unknown heat decay '" + o.heat_decay + "'");
        cfg.heat_decay = *hd;
    }
    return cfg;
}

std::vector<std::string> csv_header() {
    return {"theorem", "p", "mu", "f_inf", "d", "d0", "tau", "beta", "K", "eta", "lambda", "rho_lower",
            "rho_explore", "heat_decay", "error"};
}

std::vector<std::string> csv_cells(const ProblemParams& pp, const CertifiedResult& r, const SearchConfig& cfg) {
    const Candidate& c = r.candidate;
    return {std::string(to_string(r.theorem)), fmt(pp.p), fmt(pp.mu), fmt(pp.f_inf), fmt(pp.d), fmt(pp.d0),
            fmt(c.tau), fmt(c.beta), fmt(c.K), fmt(c.eta), fmt(c.lambda), fmt(r.rho_lower), fmt(r.rho_explore),
            std::string(to_string(cfg.decay_for(r.theorem))), ""};
}

void print_result(std::ostream& out, const CertifiedResult& r, const SearchConfig& cfg, bool point) {
    const Candidate& c = r.candidate;
    out << "theorem = " << to_string(r.theorem) << "\n"
        << "mode = " << (point ? "point" : "search") << "\n"
        << "heat_decay = " << to_string(cfg.decay_for(r.theorem)) << "\n"
        << "tau = " << fmt(c.tau) << "\nbeta = " << fmt(c.beta) << "\nK = " << fmt(c.K) << "\n";
    if (r.theorem == Theorem::OP2) out << "eta = " << fmt(c.eta) << "\n";
    if (r.theorem == Theorem::OP3) out << "lambda = " << fmt(c.lambda) << "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", r.rho_lower);
    out << "rho_lower = " << buf << "\n";
    std::snprintf(buf, sizeof buf, "%.6f", r.rho_explore);
    out << "rho_explore = " << buf << "\n";
    for (const auto& [k, v] : r.components) out << "component." << k << " = " << fmt(v) << "\n";
    for (const auto& [k, v] : r.errors) out << "error." << k << " = " << fmt(v) << "\n";
    for (const auto& [k, v] : r.sizes) out << "size." << k << " = " << v << "\n";
    out << "evaluations = " << r.evaluations << "\nseconds = " << r.seconds << "\n";
}

nlohmann::json to_json(const CertifiedResult& r, const SearchConfig& cfg) {
    nlohmann::json j;
    j["theorem"] = to_string(r.theorem);
    j["heat_decay"] = to_string(cfg.decay_for(r.theorem));
    j["candidate"] = {{"tau", r.candidate.tau}, {"beta", r.candidate.beta}, {"K", r.candidate.K},
                      {"eta", r.candidate.eta}, {"lambda", r.candidate.lambda}};
    j["rho_lower"] = r.rho_lower;
    j["rho_explore"] = r.rho_explore;
    j["components"] = r.components;
    j["errors"] = r.errors;
    j["sizes"] = r.sizes;
    j["evaluations"] = r.evaluations;
    j["seconds"] = r.seconds;
    return j;
}

bool point_requested(const Options& o) { return o.tau || o.beta || o.K; }

CertifiedResult certify_point(Theorem th, const Options& o, const ProblemParams& pp, const SearchConfig& cfg) {
    if (!(o.tau && o.beta && o.K)) throw std::invalid_argument("point evaluation needs --tau, --beta and --K");
    Candidate c;
    c.theorem = th;
    c.tau = *o.tau;
    c.beta = *o.beta;
    c.K = *o.K;
    if (th == Theorem::OP2) {
        if (!o.eta) throw std::invalid_argument("op2 point evaluation needs --eta");
        c.eta = *o.eta;
    }
    if (th == Theorem::OP3) {
        if (o.lambda) {
            c.lambda = *o.lambda;
        } else {
            lambda_descent(c, pp, cfg);
        }
    }
    return certify_at(c, pp, cfg);
}

int cmd_certify(const Options& o, std::ostream& out, std::ostream& err) {
    const Theorem th = theorem_of(o);
    const ProblemParams raw = o.params();
    check_params(raw);
    const HypothesisReport rep = validate_hypotheses(th, raw);
    if (!rep.ok()) {
        err << rep.summary() << "\n";
        return kHypothesis;
    }
    const ProblemParams pp = effective_params(th, raw);
    const SearchConfig cfg = config_of(o);
    const bool point = point_requested(o);
    CertifiedResult r = point ? certify_point(th, o, pp, cfg) : search(th, pp, cfg);
    if (o.json) {
        out << to_json(r, cfg).dump(2) << "\n";
    } else {
        print_result(out, r, cfg, point);
    }
    if (!o.out.empty()) {
        std::ostringstream csv;
        write_csv_row(csv, csv_header());
        write_csv_row(csv, csv_cells(pp, r, cfg));
        write_file(o.out, csv.str());
    }
    return kOk;
}

// --- table -------------------------------------------------------------

struct RowJob {
    ProblemParams pp;
    Candidate at;
    std::vector<std::pair<std::string, double>> printed;  // column name, published value
};

struct RowOutcome {
    std::optional<CertifiedResult> at_reference, searched;
    std::string error;
};

std::vector<RowJob> jobs_for(int id) {
    using namespace reference;
    std::vector<RowJob> jobs;
    auto op1 = [](const Op1Row& r) {
        return RowJob{r.params, {Theorem::OP1, r.tau, r.beta, r.K}, {{"H", r.H}, {"G", r.G}, {"S", r.S}, {"rho", r.rho}}};
    };
    auto op2 = [](const Op2Row& r) {
        return RowJob{r.params,
                      {Theorem::OP2, r.tau, r.beta, r.K, r.eta},
                      {{"G(T_bar)", r.G_Tbar}, {"H(t0)", r.H_t0}, {"G(t0)", r.G_t0}, {"S(T_bar)", r.S_Tbar},
                       {"S(t0)", r.S_t0}, {"rho2", r.rho2}, {"rho", r.rho}}};
    };
    auto op3 = [](const Op3Row& r) {
        return RowJob{r.params,
                      {Theorem::OP3, r.tau, r.beta, r.K, 1.0, r.lambda},
                      {{"G*", r.Gstar}, {"S", r.S_t0}, {"rho2", r.rho2}, {"lambda", r.lambda}, {"rho", r.rho}}};
    };
    auto same = [](const ProblemParams& a, const ProblemParams& b) {
        return a.p == b.p && a.mu == b.mu && a.f_inf == b.f_inf && a.d == b.d && a.d0 == b.d0;
    };
    switch (id) {
        case 1:
            for (const auto& s : table1()) {
                for (const auto& r : table3())
                    if (same(r.params, s.params)) jobs.push_back(op1(r)), jobs.back().printed = {{"rho", s.rho_op1}};
                for (const auto& r : table5())
                    if (same(r.params, s.params)) jobs.push_back(op3(r)), jobs.back().printed = {{"rho", s.rho_op3}};
            }
            break;
        case 2:
            for (const auto& s : table2())
                for (const auto& r : table4())
                    if (same(r.params, s.params)) jobs.push_back(op2(r)), jobs.back().printed = {{"rho", s.rho}};
            break;
        case 3:
            for (const auto& r : table3()) jobs.push_back(op1(r));
            break;
        case 4:
            for (const auto& r : table4()) jobs.push_back(op2(r));
            break;
        case 5:
            for (const auto& r : table5()) jobs.push_back(op3(r));
            break;
        default:
            throw std::invalid_argument("table id must be 1-5");
    }
    return jobs;
}

double computed_column(const CertifiedResult& r, const std::string& name) {
    if (name == "rho") return r.rho_lower;
    if (name == "lambda") return r.candidate.lambda;
    auto it = r.components.find(name);
    return it != r.components.end() ? it->second : NAN;
}

int cmd_table(const Options& o, std::ostream& out, std::ostream& err) {
    const auto jobs = jobs_for(o.table_id);
    const SearchConfig base = config_of(o);
    std::vector<RowOutcome> outcomes(jobs.size());
    // Rows run concurrently; each row's own search stays single-threaded so the
    // result does not depend on how the rows are scheduled.
    SearchConfig row_cfg = base;
    row_cfg.threads = 1;
    parallel_for(jobs.size(), [&](std::size_t i) {
        const RowJob& job = jobs[i];
        RowOutcome& res = outcomes[i];
        try {
            res.at_reference = certify_at(job.at, job.pp, row_cfg);
            if (!o.reference_only) res.searched = search(job.at.theorem, job.pp, row_cfg);
        } catch (const std::exception& e) {
            res.error = e.what();
        }
    }, base.threads > 0 ? base.threads : thread_count());

    std::vector<std::string> header = {"theorem", "p", "mu", "f_inf", "d", "d0", "tau", "beta", "K"};
    if (o.table_id == 2 || o.table_id == 4) header.push_back("eta");
    for (const auto& [name, v] : jobs.front().printed) {
        header.push_back(name + " printed");
        header.push_back(name + " computed");
        header.push_back(name + " delta");
    }
    if (!o.reference_only) {
        for (const char* h : {"search rho_lower", "search tau", "search beta", "search K", "search eta", "search lambda"})
            header.push_back(h);
    }
    header.push_back("error");

    std::ostringstream csv;
    write_csv_row(csv, header);
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const RowJob& job = jobs[i];
        const RowOutcome& res = outcomes[i];
        std::vector<std::string> cells = {std::string(to_string(job.at.theorem)), fmt(job.pp.p),  fmt(job.pp.mu),
                                          fmt(job.pp.f_inf), fmt(job.pp.d), fmt(job.pp.d0), fmt(job.at.tau),
                                          fmt(job.at.beta),  fmt(job.at.K)};
        if (o.table_id == 2 || o.table_id == 4) cells.push_back(fmt(job.at.eta));
        for (const auto& [name, printed] : job.printed) {
            const double v = res.at_reference ? computed_column(*res.at_reference, name) : NAN;
            cells.push_back(fmt(printed));
            cells.push_back(fmt(v));
            cells.push_back(fmt(v - printed));
        }
        if (!o.reference_only) {
            if (res.searched) {
                const auto& s = *res.searched;
                for (double v : {s.rho_lower, s.candidate.tau, s.candidate.beta, s.candidate.K, s.candidate.eta,
                                 s.candidate.lambda})
                    cells.push_back(fmt(v));
            } else {
                cells.insert(cells.end(), 6, "");
            }
        }
        cells.push_back(res.error);
        write_csv_row(csv, cells);
        if (!res.error.empty()) err << "row " << i + 1 << ": " << res.error << "\n";
    }
    if (o.out.empty()) {
        out << csv.str();
    } else {
        write_file(o.out, csv.str());
        out << "wrote " << jobs.size() << " rows to " << o.out << "\n";
    }
    return kOk;
}

// --- simulate ------------------------------------------------------------

Geometry geometry_of(const Options& o, ProfileKind& kind) {
    Geometry g;
    if (o.profile == "one-bump") {
        kind = ProfileKind::OneBump;
        g = demo_one_bump();
    } else if (o.profile == "two-bump") {
        kind = ProfileKind::TwoBump;
        g = demo_two_bump();
    } else if (o.profile == "constant") {
        kind = ProfileKind::Constant;
        g.R = 1;
        g.level = 0.4;
    } else {
        throw std::invalid_argument("unknown profile '" + o.profile + "'");
    }
    if (o.level) g.level = *o.level;
    if (o.R) g.R = *o.R;
    if (o.plateau) g.plateau = *o.plateau;
    if (o.ramp) g.ramp = *o.ramp;
    if (!o.bumps.empty()) {
        if (o.bumps.size() % 2) throw std::invalid_argument("--bump takes pairs of endpoints");
        g.bumps.clear();
        for (std::size_t i = 0; i < o.bumps.size(); i += 2) g.bumps.push_back({o.bumps[i], o.bumps[i + 1]});
    }
    return g;
}

void write_solution(const std::string& prefix, const SimResult& r) {
    std::ostringstream csv;
    std::vector<std::string> header = {"x"};
    for (const auto& s : r.snapshots) header.push_back("u(t=" + fmt(s.t) + ")");
    write_csv_row(csv, header);
    for (std::size_t i = 0; i < r.x.size(); ++i) {
        std::vector<std::string> row = {fmt(r.x[i])};
        for (const auto& s : r.snapshots) row.push_back(fmt(s.u[i]));
        write_csv_row(csv, row);
    }
    write_file(prefix + ".csv", csv.str());
    std::vector<Series> series;
    for (const auto& s : r.snapshots) series.push_back({"t = " + fmt(std::round(s.t * 1e4) / 1e4), r.x, s.u});
    write_file(prefix + ".svg", svg_plot(series, "u(x, t)", "x", "u"));
}

void print_sim(std::ostream& out, const SimResult& r, int grid) {
    out << "grid = " << grid << "\nquenched = " << (r.quenched ? "yes" : "no") << "\n";
    if (r.quenched) out << "T_est = " << r.T_est << "\nT_uncertainty = " << r.T_uncertainty << "\n";
    if (r.steady) out << "steady = yes\n";
    out << "t_final = " << r.t_final << "\nmin_gap = " << r.min_gap << "\nsteps = " << r.steps << "\n"
        << "comparison_excess = " << r.comparison_excess << "\nmin_increment = " << r.min_increment << "\n";
    out << "touchdown_set =";
    for (const auto& iv : r.touchdown_set) out << " [" << iv.lo << ", " << iv.hi << "]";
    out << "\n";
}

int cmd_simulate(const Options& o, std::ostream& out, std::ostream&) {
    ProfileKind kind{};
    const Geometry g = geometry_of(o, kind);
    const Profile f = build_profile(kind, g);
    SimConfig sc;
    sc.n_grid = o.n_grid;
    sc.t_max = o.t_max;
    if (!o.verify) {
        const SimResult r = simulate(f, o.p, sc);
        print_sim(out, r, sc.n_grid);
        if (!o.out.empty()) write_solution(o.out, r);
        return kOk;
    }
    if (!o.rho) throw std::invalid_argument("--verify needs --rho");
    std::vector<Interval> allowed;
    for (const auto& b : g.bumps) allowed.push_back({b.lo - o.d, b.hi + o.d});
    const VerificationReport rep = verify_localization(f, o.p, *o.rho, g.level, g.plateau, allowed, sc);
    for (std::size_t i = 0; i < rep.runs.size(); ++i) print_sim(out, rep.runs[i], rep.grids[i]);
    out << rep.detail << "premise = " << (rep.premise_ok ? "plateau < rho mu" : "plateau >= rho mu") << "\n"
        << "localized = " << (rep.localized ? "yes" : "no") << "\n";
    if (!o.out.empty()) write_solution(o.out, rep.runs.back());
    return kOk;
}

// --- plot ----------------------------------------------------------------

int cmd_plot(const Options& o, std::ostream& out, std::ostream&) {
    const std::string prefix = o.out.empty() ? o.what : o.out;
    std::vector<Series> series;
    std::string title, xl, yl;
    if (o.what == "cutoff") {
        if (!o.beta || !o.K) throw std::invalid_argument("cutoff plot needs --beta and --K");
        const Theorem th = theorem_of(o);
        Series s;
        const int n = 1000;
        if (th == Theorem::OP3) {
            auto c = build_q1(o.p, o.mu, *o.beta, *o.K);
            if (!c) throw Infeasible("q=1 cut-off does not exist for these parameters");
            for (int i = 0; i <= n; ++i) s.x.push_back((1 + *o.beta) * i / n), s.y.push_back(eval_q1(*c, s.x.back()));
            s.label = "q = 1";
        } else {
            auto c = build_q0(o.p, o.mu, *o.beta, *o.K, o.eta.value_or(1.0));
            if (!c) throw Infeasible("q=0 cut-off does not exist for these parameters");
            for (int i = 0; i <= n; ++i) s.x.push_back((1 + *o.beta) * i / n), s.y.push_back(eval_q0(*c, s.x.back()));
            s.label = "q = 0";
        }
        series.push_back(std::move(s));
        title = "cut-off a(r)", xl = "r", yl = "a";
    } else if (o.what == "gstar-integrand") {
        if (!(o.tau && o.beta && o.K && o.lambda))
            throw std::invalid_argument("gstar-integrand needs --tau, --beta, --K and --lambda");
        const ProblemParams pp = effective_params(Theorem::OP3, o.params());
        const SearchConfig cfg = config_of(o);
        GstarEvaluator ev(pp, *o.tau, t0(*o.tau, pp), *o.beta, *o.K, 400, cfg.n_t_certify, Mode::Explore,
                          cfg.decay_for(Theorem::OP3));
        Series s{"G(r)", {}, {}};
        for (const auto& [r, v] : ev.samples(*o.lambda)) s.x.push_back(r), s.y.push_back(v);
        series.push_back(std::move(s));
        title = "G*(r) integrand", xl = "r", yl = "G(r)";
    } else if (o.what == "profile" || o.what == "solution") {
        ProfileKind kind{};
        const Profile f = build_profile(kind, geometry_of(o, kind));
        if (o.what == "solution") {
            SimConfig sc;
            sc.n_grid = o.n_grid;
            sc.t_max = o.t_max;
            write_solution(prefix, simulate(f, o.p, sc));
            out << "wrote " << prefix << ".csv and " << prefix << ".svg\n";
            return kOk;
        }
        Series s{"f(x)", {}, {}};
        const int n = 2000;
        for (int i = 0; i <= n; ++i) {
            const double x = -f.R + 2 * f.R * i / n;
            s.x.push_back(x);
            s.y.push_back(f(x));
        }
        series.push_back(std::move(s));
        title = "permittivity profile", xl = "x", yl = "f";
    } else {
        throw std::invalid_argument("unknown plot '" + o.what + "'");
    }
    std::ostringstream csv;
    write_csv_row(csv, {xl, yl});
    for (std::size_t i = 0; i < series[0].x.size(); ++i) write_csv_row(csv, {fmt(series[0].x[i]), fmt(series[0].y[i])});
    write_file(prefix + ".csv", csv.str());
    write_file(prefix + ".svg", svg_plot(series, title, xl, yl));
    out << "wrote " << prefix << ".csv and " << prefix << ".svg\n";
    return kOk;
}

} // namespace

int run(const CLI::App& app, const Options& o, std::ostream& out, std::ostream& err) {
    try {
        if (app.got_subcommand("certify")) return cmd_certify(o, out, err);
        if (app.got_subcommand("table")) return cmd_table(o, out, err);
        if (app.got_subcommand("simulate")) return cmd_simulate(o, out, err);
        if (app.got_subcommand("plot")) return cmd_plot(o, out, err);
        err << "no subcommand\n";
        return kUsage;
    } catch (const NoFeasibleCandidate& e) {
        err << "no feasible candidate: " << e.what() << "\n";
        return kNoCandidate;
    } catch (const SingularityReached& e) {
        err << "numerical singularity: " << e.what() << "\n";
        return kSingular;
    } catch (const Infeasible& e) {
        err << "infeasible: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

} // namespace touchdown::cli
