#include "touchdown/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace touchdown {

double erf(double x) {
    const double v = std::erf(std::fabs(x));
    return std::signbit(x) ? -v : v;
}

double overline_cot(double s) {
    if (!(s > 0.0)) throw std::domain_error("overline_cot: argument must be positive");
    if (s >= std::numbers::pi / 2) return 0.0;
    return std::cos(s) / std::sin(s);
}

double cos_pow(double x, double alpha) {
    const double c = std::cos(x);
    if (!(c > 0.0)) throw std::domain_error("cos_pow: cosine is not positive");
    if (alpha == 1.0) return c;
    return std::exp(alpha * std::log(c));
}

} // namespace touchdown
