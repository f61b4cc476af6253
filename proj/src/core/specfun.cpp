#include "core/specfun.hpp"

#include <cmath>
#include <limits>

#include "core/errors.hpp"

namespace connmass {
namespace {

constexpr int kMaxIter = 10000;
constexpr double kEps = 1e-16;
constexpr double kTiny = 1e-300;

// P(a,x) by the ascending series, valid/fast for x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double term = 1.0 / a;
    double sum = term;
    for (int i = 0; i < kMaxIter; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * kEps) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Q(a,x) by the modified-Lentz continued fraction, valid for x >= a + 1.
double gamma_q_cf(double a, double x) {
    double b = x + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        const double an = -static_cast<double>(i) * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

} // namespace

double reg_lower_gamma(double a, double x) {
    require(a > 0.0, ErrorCode::InvalidArgument, "reg_lower_gamma: a must be > 0");
    require(x >= 0.0, ErrorCode::InvalidArgument, "reg_lower_gamma: x must be >= 0");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_cf(a, x);
}

double reg_upper_gamma(double a, double x) {
    require(a > 0.0, ErrorCode::InvalidArgument, "reg_upper_gamma: a must be > 0");
    require(x >= 0.0, ErrorCode::InvalidArgument, "reg_upper_gamma: x must be >= 0");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

double log_gamma_ratio(double a_plus_c, double a) {
    return std::lgamma(a_plus_c) - std::lgamma(a);
}

} // namespace connmass
