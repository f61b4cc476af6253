#include "core/connectivity.hpp"

#include <cmath>

#include "core/errors.hpp"
#include "core/specfun.hpp"

namespace connmass {

double pair_conn_siso(double r, const ChannelParams& params) {
    require(r >= 0.0, ErrorCode::InvalidArgument, "pair_conn_siso: r must be >= 0");
    return std::exp(-params.threshold_beta() * (params.epsilon + std::pow(r, params.eta)));
}

double pair_conn_dc(double r, int m, int n, const ChannelParams& params) {
    require(r >= 0.0, ErrorCode::InvalidArgument, "pair_conn_dc: r must be >= 0");
    require(m >= 1 && n >= 1, ErrorCode::InvalidArgument, "pair_conn_dc: m, n must be >= 1");
    const double zeta = (m > 2) ? 2.0 : 1.0;
    const double x = m * params.threshold_beta() * (params.epsilon + std::pow(r, params.eta)) / zeta;
    return reg_upper_gamma(static_cast<double>(m) * n, x);
}

double pair_conn_mrc(double r, int m, int n, const ChannelParams& params,
                     const EmpiricalCdf& cdf) {
    require(r >= 0.0, ErrorCode::InvalidArgument, "pair_conn_mrc: r must be >= 0");
    require(cdf.m() == m && cdf.n() == n, ErrorCode::InvalidArgument,
            "pair_conn_mrc: cdf was built for a different (m, n)");
    const double x = params.threshold_beta() * (params.epsilon + std::pow(r, params.eta));
    return 1.0 - cdf.eval(x);
}

double pair_conn_mrc_step(double r, int m, int n, const ChannelParams& params) {
    require(r >= 0.0, ErrorCode::InvalidArgument, "pair_conn_mrc_step: r must be >= 0");
    require(m >= 1 && n >= 1, ErrorCode::InvalidArgument,
            "pair_conn_mrc_step: m, n must be >= 1");
    const double y = static_cast<double>(m) / n;
    const double edge = (1.0 + std::sqrt(y)) * (1.0 + std::sqrt(y)) * n;
    const double cutoff = std::pow(edge / params.threshold_beta(), 1.0 / params.eta);
    return r < cutoff ? 1.0 : 0.0;
}

int rate_zeta(const AntennaScheme& scheme) {
    return (scheme.kind == SchemeKind::DiversityCoding && scheme.m > 2) ? 2 : 1;
}

double pair_conn_rate(double r, const AntennaScheme& scheme, const ChannelParams& params,
                      double rate, const EmpiricalCdf* cdf) {
    require(rate > 0.0, ErrorCode::InvalidArgument, "pair_conn_rate: rate must be > 0");
    const double threshold = std::exp2(rate_zeta(scheme) * rate) - 1.0;
    const ChannelParams eff = params.with_threshold(threshold);
    switch (scheme.kind) {
        case SchemeKind::Siso:
            return pair_conn_siso(r, eff);
        case SchemeKind::DiversityCoding:
            return pair_conn_dc(r, scheme.m, scheme.n, eff);
        case SchemeKind::Beamforming:
            require(cdf != nullptr, ErrorCode::InvalidArgument,
                    "pair_conn_rate: beamforming requires a lambda_max cdf");
            return pair_conn_mrc(r, scheme.m, scheme.n, eff, *cdf);
    }
    return 0.0;
}

ConnectionFunction::ConnectionFunction(AntennaScheme scheme, ChannelParams params, Metric metric,
                                       double rate, std::shared_ptr<const EmpiricalCdf> cdf)
    : scheme_(scheme),
      effective_(metric == Metric::RateOutage
                     ? params.with_threshold(std::exp2(rate_zeta(scheme) * rate) - 1.0)
                     : params),
      metric_(metric),
      rate_(rate),
      cdf_(std::move(cdf)) {
    if (metric == Metric::RateOutage) {
        require(rate > 0.0, ErrorCode::InvalidArgument,
                "ConnectionFunction: rate metric needs R > 0");
    }
    if (scheme_.kind == SchemeKind::Beamforming) {
        require(cdf_ != nullptr, ErrorCode::InvalidArgument,
                "ConnectionFunction: beamforming requires a lambda_max cdf");
        require(cdf_->m() == scheme_.m && cdf_->n() == scheme_.n, ErrorCode::InvalidArgument,
                "ConnectionFunction: cdf built for a different (m, n)");
    }
}

double ConnectionFunction::operator()(double r) const {
    switch (scheme_.kind) {
        case SchemeKind::Siso:
            return pair_conn_siso(r, effective_);
        case SchemeKind::DiversityCoding:
            return pair_conn_dc(r, scheme_.m, scheme_.n, effective_);
        case SchemeKind::Beamforming:
            return pair_conn_mrc(r, scheme_.m, scheme_.n, effective_, *cdf_);
    }
    return 0.0;
}

} // namespace connmass
