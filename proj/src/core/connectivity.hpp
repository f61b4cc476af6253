#pragma once

#include <memory>

#include "core/channel.hpp"

namespace connmass {

enum class Metric { SnrOutage, RateOutage };

// Pairwise connection probability H(r) for the SISO scheme,
// exp(-threshold*beta*(epsilon + r^eta)).
double pair_conn_siso(double r, const ChannelParams& params);

// STBC connection probability, 1 - P(mn, m*threshold*beta*(eps + r^eta)/zeta_m).
double pair_conn_dc(double r, int m, int n, const ChannelParams& params);

// Beamforming connection probability via a tabulated lambda_max law:
// 1 - F(threshold*beta*(eps + r^eta)).
double pair_conn_mrc(double r, int m, int n, const ChannelParams& params,
                     const EmpiricalCdf& cdf);

// Large-n indicator approximation of the beamforming link: 1 inside the
// cutoff radius ((1+sqrt(y))^2 n / (threshold*beta))^(1/eta), else 0.
// epsilon plays no role here.
double pair_conn_mrc_step(double r, int m, int n, const ChannelParams& params);

// Rate threshold in zeta units: 1 for SISO, STBC with m <= 2 and
// beamforming; 2 for STBC with m > 2.
int rate_zeta(const AntennaScheme& scheme);

// Mutual-information-outage connectivity: the matching SNR-outage function
// with the threshold replaced by 2^(zeta*R) - 1. Beamforming requires a cdf.
double pair_conn_rate(double r, const AntennaScheme& scheme, const ChannelParams& params,
                      double rate, const EmpiricalCdf* cdf = nullptr);

// Immutable, thread-safe evaluable H(r) bundling scheme, parameters and
// metric; the form consumed by the mass and network modules.
class ConnectionFunction {
public:
    ConnectionFunction(AntennaScheme scheme, ChannelParams params, Metric metric,
                       double rate = 0.0,
                       std::shared_ptr<const EmpiricalCdf> cdf = nullptr);

    double operator()(double r) const;

    // threshold for snr-outage, 2^(zeta*R) - 1 for rate-outage
    double effective_threshold() const noexcept { return effective_.threshold; }

    const AntennaScheme& scheme() const noexcept { return scheme_; }
    const ChannelParams& params() const noexcept { return effective_; }
    Metric metric() const noexcept { return metric_; }
    double rate() const noexcept { return rate_; }
    const std::shared_ptr<const EmpiricalCdf>& cdf() const noexcept { return cdf_; }

private:
    AntennaScheme scheme_;
    ChannelParams effective_;  // threshold already metric-adjusted
    Metric metric_;
    double rate_;
    std::shared_ptr<const EmpiricalCdf> cdf_;
};

} // namespace connmass
