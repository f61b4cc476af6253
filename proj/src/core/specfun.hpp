#pragma once

namespace connmass {

// Regularized lower incomplete gamma P(a, x) = γ(a, x)/Γ(a), for a > 0,
// x >= 0. Series expansion for x < a + 1, Lentz continued fraction for the
// complementary function otherwise. Relative accuracy ~1e-14 over the ranges
// used here (a up to a few thousand).
double reg_lower_gamma(double a, double x);

// Complementary function Q(a, x) = 1 - P(a, x), accurate in the far tail
// where P is close to 1.
double reg_upper_gamma(double a, double x);

// log Γ(a+c) − log Γ(a), stable for large a.
double log_gamma_ratio(double a_plus_c, double a);

} // namespace connmass
