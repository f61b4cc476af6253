#pragma once

#include <cstdint>

#include "core/mass.hpp"

namespace connmass {

// Homogeneous SISO reference mass Omega * Gamma(1+C) / ((threshold*beta)^C d)
// that boundary mitigation rules aim to restore at a feature of solid angle
// omega.
struct DesignTarget {
    double reference_mass;
    double feature_omega;
    double exponent;  // C

    DesignTarget(int d, double eta, double threshold_beta, double feature_omega_);
};

// Transmit power restoring the reference mass at a boundary feature:
// (Omega/omega)^(1/C) * P_T0.
double power_for_boundary(double omega, int d, double c_exp, double p_t0);

// Receive antennas (as a real number; callers round up) restoring the
// reference mass via the scheme's asymptotic law: n = ((Omega/omega)
// Gamma(1+C))^(1/C) / w with w = zeta for diversity coding and (1+sqrt(y))^2
// for beamforming.
double antennas_for_boundary(double omega, int d, double c_exp, SchemeKind kind,
                             double y_or_zeta);

long antennas_ceil(double n_real);

// Antenna ratio m/n at which the two schemes' leading-order masses coincide
// under the SNR metric: (sqrt(2)-1)^2 = 3 - 2 sqrt(2).
double critical_ratio();

struct CompareBudget {
    long cdf_samples = 100000;
    double quad_tol = 1e-9;
    uint64_t seed = 1;
};

// Scheme comparison at full solid angle. Masses are exact where closed forms
// exist (diversity coding) and numeric radial quadrature over the tabulated
// lambda_max law for beamforming; the leading-order ratio uses the
// asymptotic laws at y_leading (pass 0 for the fixed-m regime, a negative
// value to mean m/n).
struct CompareReport {
    MassResult dc_mass;
    MassResult bf_mass;
    SchemeKind preferred;          // by exact/numeric mass
    double margin_sigmas;          // |dc - bf| over the combined error
    double leading_order_ratio;    // dc asymptotic over bf asymptotic
    SchemeKind preferred_leading;  // by leading order
};

CompareReport compare_schemes(int m, int n, const ChannelParams& params, Metric metric,
                              double rate, const CompareBudget& budget,
                              double y_leading = -1.0);

} // namespace connmass
