#pragma once

namespace touchdown {

/// Error function. Odd symmetry is exact: erf(-x) == -erf(x) bit for bit.
double erf(double x);

/// cot(s) on (0, pi/2], 0 beyond. Throws std::domain_error for s <= 0.
double overline_cot(double s);

/// cos(x)^alpha for x in [0, pi/2), evaluated as exp(alpha * log cos x).
/// Throws std::domain_error if cos(x) <= 0 so a NaN can never leak into an infimum.
double cos_pow(double x, double alpha);

} // namespace touchdown
