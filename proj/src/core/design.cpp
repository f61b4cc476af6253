#include "core/design.hpp"

#include <cmath>
#include <limits>

#include "core/errors.hpp"

namespace connmass {

DesignTarget::DesignTarget(int d, double eta, double threshold_beta, double feature_omega_)
    : reference_mass(0.0), feature_omega(feature_omega_), exponent(d / eta) {
    const double omega_full = full_solid_angle(d);
    require(feature_omega > 0.0 && feature_omega <= omega_full, ErrorCode::InvalidArgument,
            "DesignTarget: feature omega must lie in (0, Omega]");
    reference_mass = omega_full * std::tgamma(1.0 + exponent) /
                     (std::pow(threshold_beta, exponent) * d);
}

double power_for_boundary(double omega, int d, double c_exp, double p_t0) {
    const double omega_full = full_solid_angle(d);
    require(omega > 0.0 && omega <= omega_full, ErrorCode::InvalidArgument,
            "power_for_boundary: omega must lie in (0, Omega]");
    require(c_exp > 0.0 && p_t0 > 0.0, ErrorCode::InvalidArgument,
            "power_for_boundary: C and P_T0 must be positive");
    return std::pow(omega_full / omega, 1.0 / c_exp) * p_t0;
}

double antennas_for_boundary(double omega, int d, double c_exp, SchemeKind kind,
                             double y_or_zeta) {
    const double omega_full = full_solid_angle(d);
    require(omega > 0.0 && omega <= omega_full, ErrorCode::InvalidArgument,
            "antennas_for_boundary: omega must lie in (0, Omega]");
    require(c_exp > 0.0, ErrorCode::InvalidArgument, "antennas_for_boundary: C must be positive");
    double w = 1.0;
    if (kind == SchemeKind::Beamforming) {
        require(y_or_zeta >= 0.0, ErrorCode::InvalidArgument,
                "antennas_for_boundary: beamforming needs y >= 0");
        const double s = std::sqrt(y_or_zeta);
        w = (1.0 + s) * (1.0 + s);
    } else {
        require(y_or_zeta == 1.0 || y_or_zeta == 2.0, ErrorCode::InvalidArgument,
                "antennas_for_boundary: diversity coding needs zeta in {1, 2}");
        w = y_or_zeta;
    }
    const double target = std::pow(omega_full / omega * std::tgamma(1.0 + c_exp), 1.0 / c_exp);
    return target / w;
}

long antennas_ceil(double n_real) {
    require(n_real > 0.0, ErrorCode::InvalidArgument, "antennas_ceil: need a positive count");
    return static_cast<long>(std::ceil(n_real - 1e-12));
}

double critical_ratio() {
    return 3.0 - 2.0 * std::sqrt(2.0);
}

CompareReport compare_schemes(int m, int n, const ChannelParams& params, Metric metric,
                              double rate, const CompareBudget& budget, double y_leading) {
    require(m >= 1 && n >= 1, ErrorCode::InvalidArgument,
            "compare_schemes: antenna counts must be >= 1");

    const AntennaScheme dc = AntennaScheme::diversity_coding(m, n);
    const AntennaScheme bf = AntennaScheme::beamforming(m, n);
    const int d = params.dim;
    const double omega = full_solid_angle(d);

    // metric-adjusted thresholds per scheme
    const ChannelParams dc_params =
        metric == Metric::RateOutage
            ? params.with_threshold(std::exp2(rate_zeta(dc) * rate) - 1.0)
            : params;
    const ChannelParams bf_params =
        metric == Metric::RateOutage
            ? params.with_threshold(std::exp2(rate_zeta(bf) * rate) - 1.0)
            : params;

    CompareReport rep;
    rep.dc_mass = mass_dc_closed(omega, d, params.eta, dc_params.threshold_beta(), m, n);
    auto cdf = gain_cdf_mrc(m, n, budget.cdf_samples, budget.seed);
    ConnectionFunction h_bf(bf, params, metric, rate, cdf);
    rep.bf_mass = mass_radial(h_bf, omega, d, budget.quad_tol);

    rep.preferred = rep.bf_mass.value > rep.dc_mass.value ? SchemeKind::Beamforming
                                                          : SchemeKind::DiversityCoding;
    const double err = rep.dc_mass.error_estimate + rep.bf_mass.error_estimate;
    rep.margin_sigmas =
        err > 0.0 ? std::fabs(rep.bf_mass.value - rep.dc_mass.value) / err
                  : std::numeric_limits<double>::infinity();

    const double y = y_leading >= 0.0 ? y_leading : static_cast<double>(m) / n;
    const double dc_lead =
        mass_dc_asymptotic(omega, d, params.eta, dc_params.threshold_beta(), m, n).value;
    const double bf_lead =
        mass_bf_asymptotic(omega, d, params.eta, bf_params.threshold_beta(), n, y).value;
    rep.leading_order_ratio = dc_lead / bf_lead;
    rep.preferred_leading = rep.leading_order_ratio < 1.0 ? SchemeKind::Beamforming
                                                          : SchemeKind::DiversityCoding;
    return rep;
}

} // namespace connmass
