#pragma once

#include "touchdown/optimizer.hpp"

#include <CLI11.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace touchdown::cli {

enum ExitCode { kOk = 0, kUsage = 1, kHypothesis = 2, kNoCandidate = 3, kSingular = 4 };

struct Options {
    std::string theorem = "op1";
    double p = 2, mu = 1, f_inf = 1, d = 0.1, d0 = 5;
    std::optional<double> d1;

    std::optional<double> tau, beta, K, eta, lambda;
    std::string heat_decay;  ///< empty: the theorem's default
    SearchConfig search;
    std::string out;
    bool json = false;

    int table_id = 3;
    bool reference_only = false;

    std::string profile = "one-bump";
    std::optional<double> level, R, plateau, ramp;
    std::vector<double> bumps;  ///< flattened (lo, hi) pairs
    int n_grid = 801;
    double t_max = 50;
    bool verify = false;
    std::optional<double> rho;

    std::string what = "cutoff";

    ProblemParams params() const;
};

/// Registers the shared options on the parent app (so a flat `key = value`
/// config file can set them) and the four subcommands, which fall through.
void build_app(CLI::App& app, Options& o);

/// Runs whichever subcommand was parsed. Returns the process exit code.
int run(const CLI::App& app, const Options& o, std::ostream& out, std::ostream& err);

} // namespace touchdown::cli
