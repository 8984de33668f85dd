#pragma once

#include <stdexcept>
#include <string>

namespace touchdown {

/// A candidate lies outside the admissible set (for example delta > 1).
struct Infeasible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// 1 - Y reached zero inside the Lambda quadrature.
struct SingularityReached : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The search grid never entered the admissible set.
struct NoFeasibleCandidate : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace touchdown
