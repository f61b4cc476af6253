#pragma once

#include <cstdint>
#include <functional>

#include "core/connectivity.hpp"
#include "core/geometry.hpp"

namespace connmass {

enum class MassMethod {
    SpatialMc,
    RadialQuadrature,
    ClosedFormDc,
    AsymptoticDc,
    AsymptoticBf,
    LeadingPower,
};

// A connectivity mass value (length^d units) with its provenance and an
// error estimate: a standard error for Monte Carlo backed numbers, the
// quadrature error bound otherwise.
struct MassResult {
    double value = 0.0;
    MassMethod method = MassMethod::LeadingPower;
    double error_estimate = 0.0;
};

using RadialFn = std::function<double(double)>;

// Monte Carlo spatial average: volume * mean H(|r_j - origin|) over uniform
// receiver positions. Deterministic for a given seed.
MassResult mass_spatial(const RadialFn& h, const Domain& domain, const Point& origin,
                        long samples, uint64_t seed);

// Radial boundary integral omega * int_0^inf r^(d-1) H(r) dr, evaluated in
// the u = r^d variable (removes the endpoint weight uniformly in C) by
// adaptive quadrature, truncated where H < 1e-12. H must be nonincreasing
// and decay at least exponentially past its transition.
MassResult mass_radial(const RadialFn& h, double omega, int d, double rel_tol = 1e-9);

// ConnectionFunction-aware variant: for beamforming links the error estimate
// additionally carries the lambda_max sampling standard error derived from
// the tabulated law.
MassResult mass_radial(const ConnectionFunction& h, double omega, int d,
                       double rel_tol = 1e-9);

// Leading-order SISO mass omega * Gamma(C) / (eta * (threshold*beta)^C).
MassResult mass_leading_siso(double omega, int d, double eta, double threshold_beta);

// Diversity-coding mass (omega/d) (zeta_m/(m threshold beta))^C
// Gamma(mn+C)/Gamma(mn), in log-gamma arithmetic.
MassResult mass_dc_closed(double omega, int d, double eta, double threshold_beta, int m, int n);

// Stirling limit (omega/d) (zeta_m n/(threshold beta))^C. Real-valued n so
// design rules can plug fractional antenna counts into the identity.
MassResult mass_dc_asymptotic(double omega, int d, double eta, double threshold_beta,
                              int m, double n);

// Beamforming limit (omega/d) ((1+sqrt(y))^2 n/(threshold beta))^C.
MassResult mass_bf_asymptotic(double omega, int d, double eta, double threshold_beta,
                              double n, double y);

// Finite-n beamforming error term: exact radial MRC mass minus the step
// integral (omega/d) ((1+sqrt(y))^2 n/(threshold beta))^C, y = m/n. The
// error estimate propagates quadrature and sampling uncertainty.
MassResult mass_bf_error_term(int n, int m, const ChannelParams& params, double omega, int d,
                              long cdf_samples, uint64_t seed);

} // namespace connmass
