#pragma once

#include "touchdown/bounds.hpp"
#include "touchdown/model.hpp"

#include <map>
#include <optional>
#include <string>

namespace touchdown {

struct SearchConfig {
    double eps_beta = 0.1;
    double eps_K = 0.1;
    int n_tau = 10;
    int n_eta = 25;
    int n_x_explore = 20;
    int n_x_certify_H = 50000;
    int n_x_certify_G = 2000;
    int n_r_explore = 20;
    int n_r_certify = 5000;
    int n_t_explore = 10;
    int n_t_certify = 100;
    int refine_points = 10;             ///< subintervals per axis in Step 2
    std::optional<double> lambda_start; ///< default 0.3 for p = 2, else 0.4
    double lambda_step = 0.01;
    double k_max = 20;                  ///< hard cap on K before pruning kicks in (OP1/OP2)
    bool prune = true;
    std::optional<HeatDecay> heat_decay; ///< default depends on the theorem
    int threads = 0;                     ///< 0 means thread_count()

    double lambda_start_for(double p) const;
    HeatDecay decay_for(Theorem th) const;
};

/// A point of the admissible set. eta is used by OP2 only, lambda by OP3 only.
struct Candidate {
    Theorem theorem = Theorem::OP1;
    double tau = 0, beta = 0, K = 0, eta = 1, lambda = 0;
};

/// Lexicographic order on (tau, beta, K, eta, lambda), used to break ties.
bool lex_less(const Candidate& a, const Candidate& b);

/// Checks membership in the theorem's admissible set; on failure writes the
/// violated constraint to *why when given.
bool admissible(const Candidate& c, const ProblemParams& pp, std::string* why = nullptr);

enum class Failure { None, Infeasible, Singular, Domain };

struct Evaluation {
    double rho = -1;  ///< negative infinity when the candidate had to be skipped
    std::map<std::string, double> components;
    std::map<std::string, double> errors;
    Failure kind = Failure::None;
    std::string failure;
    bool ok() const { return kind == Failure::None; }
};

/// The theorem-specific objective with every bound computed in the given mode.
Evaluation evaluate(const Candidate& c, Mode mode, const ProblemParams& pp, const SearchConfig& cfg);
/// Shorthand for evaluate(...).rho; infeasible candidates give -infinity.
double objective(const Candidate& c, Mode mode, const ProblemParams& pp, const SearchConfig& cfg);

/// Step-descent in lambda for fixed (tau, beta, K): start at lambda_start and
/// decrease by lambda_step while the lambda-free part stays below lambda.
/// Returns the explored value and writes the chosen lambda into c.
double lambda_descent(Candidate& c, const ProblemParams& pp, const SearchConfig& cfg);

/// False only when the candidate provably scores below rho_opt (OP1/OP2 bound).
bool prune_admits(const Candidate& c, double rho_opt, const ProblemParams& pp);

struct CertifiedResult {
    Theorem theorem = Theorem::OP1;
    double rho_lower = 0;    ///< certified value (Step 3)
    double rho_explore = 0;  ///< explored value at the same candidate
    Candidate candidate;
    std::map<std::string, double> components;
    std::map<std::string, double> errors;
    std::map<std::string, int> sizes;
    SearchConfig config;
    long evaluations = 0;
    double seconds = 0;
};

/// Explore and certify a single candidate (Step 3 without the search).
CertifiedResult certify_at(const Candidate& c, const ProblemParams& pp, const SearchConfig& cfg);

/// Full three-step search. Throws NoFeasibleCandidate when Step 1 never enters
/// the admissible set and SingularityReached if the certified evaluation fails.
CertifiedResult search(Theorem th, const ProblemParams& pp, const SearchConfig& cfg);

} // namespace touchdown
