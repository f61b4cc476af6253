#include "core/mass.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"
#include "core/parallel.hpp"
#include "core/quadrature.hpp"
#include "core/rng.hpp"
#include "core/specfun.hpp"

namespace connmass {
namespace {

constexpr double kTruncThreshold = 1e-12;

// Smallest dyadic radius past the decay edge: H(edge) < 1e-12 and
// H(edge/2) >= 1e-12 (or edge hit the floating-point floor, in which case H
// is negligible everywhere and the mass is zero). Throws if H never decays.
double decay_edge(const RadialFn& h) {
    double edge = 1.0;
    if (h(edge) >= kTruncThreshold) {
        while (h(edge) >= kTruncThreshold) {
            edge *= 2.0;
            if (edge > 1e300) {
                throw NumericalError("mass_radial: H(r) does not decay; radial mass diverges",
                                     0.0, 0.0);
            }
        }
        return edge;
    }
    while (edge > 1e-280 && h(0.5 * edge) < kTruncThreshold) edge *= 0.5;
    return edge > 1e-280 ? edge : 0.0;
}

} // namespace

MassResult mass_spatial(const RadialFn& h, const Domain& domain, const Point& origin,
                        long samples, uint64_t seed) {
    require(domain.finite(), ErrorCode::UnsupportedDomain,
            "mass_spatial: domain must have finite volume");
    require(domain.contains(origin), ErrorCode::OutOfDomain,
            "mass_spatial: origin lies outside the domain");
    require(samples >= 1, ErrorCode::InvalidArgument, "mass_spatial: samples must be >= 1");

    constexpr long kChunk = 1 << 16;
    const std::size_t chunks = static_cast<std::size_t>((samples + kChunk - 1) / kChunk);
    std::vector<long double> sums(chunks, 0.0L);
    std::vector<long double> sq_sums(chunks, 0.0L);
    const int dim = domain.dim();
    parallel_chunks(chunks, [&](std::size_t c) {
        Rng rng(derive_seed(seed, c));
        const long lo = static_cast<long>(c) * kChunk;
        const long hi = std::min(samples, lo + kChunk);
        long double acc = 0.0L, acc2 = 0.0L;
        for (long i = lo; i < hi; ++i) {
            const Point p = domain.sample_one(rng);
            const double v = h(distance(p, origin, dim));
            acc += v;
            acc2 += static_cast<long double>(v) * v;
        }
        sums[c] = acc;
        sq_sums[c] = acc2;
    });
    long double sum = 0.0L, sq = 0.0L;
    for (std::size_t c = 0; c < chunks; ++c) {
        sum += sums[c];
        sq += sq_sums[c];
    }
    const double vol = domain.volume();
    const double count = static_cast<double>(samples);
    const double mean = static_cast<double>(sum / count);
    double var = static_cast<double>(sq / count) - mean * mean;
    if (var < 0.0) var = 0.0;
    const double se = samples > 1 ? vol * std::sqrt(var / (count - 1.0)) : 0.0;
    return {vol * mean, MassMethod::SpatialMc, se};
}

namespace {

MassResult mass_radial_impl(const RadialFn& h, double omega, int d, double rel_tol,
                            std::vector<double> u_breaks) {
    require(omega > 0.0, ErrorCode::InvalidArgument, "mass_radial: omega must be > 0");
    require(d >= 1 && d <= 3, ErrorCode::InvalidArgument, "mass_radial: d must be 1..3");
    require(rel_tol > 0.0, ErrorCode::InvalidArgument, "mass_radial: rel_tol must be > 0");

    const double edge = decay_edge(h);
    if (edge == 0.0) return {0.0, MassMethod::RadialQuadrature, 0.0};

    const double upper = std::pow(edge, d);
    const double inv_d = 1.0 / static_cast<double>(d);
    auto integrand = [&](double u) { return h(std::pow(u, inv_d)); };
    const double scale = omega / static_cast<double>(d);
    if (u_breaks.empty()) {
        for (int i = 1; i < 16; ++i) u_breaks.push_back(upper * i / 16.0);
    }
    try {
        QuadResult q = integrate_adaptive_breaks(integrand, 0.0, upper, std::move(u_breaks),
                                                 rel_tol, 1e-300);
        return {scale * q.value, MassMethod::RadialQuadrature, scale * q.error};
    } catch (const NumericalError& e) {
        throw NumericalError("mass_radial: quadrature did not converge",
                             scale * e.partial_value(), scale * e.error_estimate());
    }
}

} // namespace

MassResult mass_radial(const RadialFn& h, double omega, int d, double rel_tol) {
    return mass_radial_impl(h, omega, d, rel_tol, {});
}

MassResult mass_radial(const ConnectionFunction& h, double omega, int d, double rel_tol) {
    std::vector<double> u_breaks;
    if (h.scheme().kind == SchemeKind::Beamforming) {
        // align starter segments with the tabulated cdf's kinks: u = r^d and
        // x = tb (eps + r^eta) meet at u = ((x/tb - eps)_+)^(d/eta)
        const ChannelParams& p = h.params();
        const double c_exp = static_cast<double>(d) / p.eta;
        const double tb = p.threshold_beta();
        u_breaks.reserve(h.cdf()->grid().size());
        for (double x : h.cdf()->grid()) {
            const double t = x / tb - p.epsilon;
            if (t > 0.0) u_breaks.push_back(std::pow(t, c_exp));
        }
    }
    MassResult res = mass_radial_impl([&h](double r) { return h(r); }, omega, d, rel_tol,
                                      std::move(u_breaks));
    if (h.scheme().kind == SchemeKind::Beamforming) {
        const ChannelParams& p = h.params();
        const double c_exp = static_cast<double>(d) / p.eta;
        const double tb = p.threshold_beta();
        const double shift = tb * p.epsilon;
        const auto& cdf = *h.cdf();
        const double g1 = cdf.moment_shifted_pow(shift, c_exp);
        const double g2 = cdf.moment_shifted_pow(shift, 2.0 * c_exp);
        double var = g2 - g1 * g1;
        if (var < 0.0) var = 0.0;
        const double se = omega / d * std::pow(tb, -c_exp) *
                          std::sqrt(var / static_cast<double>(cdf.sample_count()));
        res.error_estimate += se;
    }
    return res;
}

MassResult mass_leading_siso(double omega, int d, double eta, double threshold_beta) {
    require(omega > 0.0 && eta >= 2.0 && threshold_beta > 0.0 && d >= 1 && d <= 3,
            ErrorCode::InvalidArgument, "mass_leading_siso: invalid parameters");
    const double c_exp = static_cast<double>(d) / eta;
    const double value = omega * std::tgamma(c_exp) / (eta * std::pow(threshold_beta, c_exp));
    return {value, MassMethod::LeadingPower, 0.0};
}

MassResult mass_dc_closed(double omega, int d, double eta, double threshold_beta, int m, int n) {
    require(omega > 0.0 && eta >= 2.0 && threshold_beta > 0.0 && d >= 1 && d <= 3 && m >= 1 &&
                n >= 1,
            ErrorCode::InvalidArgument, "mass_dc_closed: invalid parameters");
    const double c_exp = static_cast<double>(d) / eta;
    const double zeta = (m > 2) ? 2.0 : 1.0;
    const double mn = static_cast<double>(m) * n;
    const double log_value = std::log(omega / d) +
                             c_exp * std::log(zeta / (m * threshold_beta)) +
                             log_gamma_ratio(mn + c_exp, mn);
    return {std::exp(log_value), MassMethod::ClosedFormDc, 0.0};
}

MassResult mass_dc_asymptotic(double omega, int d, double eta, double threshold_beta,
                              int m, double n) {
    require(omega > 0.0 && eta >= 2.0 && threshold_beta > 0.0 && d >= 1 && d <= 3 && m >= 1 &&
                n > 0.0,
            ErrorCode::InvalidArgument, "mass_dc_asymptotic: invalid parameters");
    const double c_exp = static_cast<double>(d) / eta;
    const double zeta = (m > 2) ? 2.0 : 1.0;
    const double value = omega / d * std::pow(zeta * n / threshold_beta, c_exp);
    return {value, MassMethod::AsymptoticDc, 0.0};
}

MassResult mass_bf_asymptotic(double omega, int d, double eta, double threshold_beta,
                              double n, double y) {
    require(omega > 0.0 && eta >= 2.0 && threshold_beta > 0.0 && d >= 1 && d <= 3 && n > 0.0 &&
                y >= 0.0,
            ErrorCode::InvalidArgument, "mass_bf_asymptotic: invalid parameters");
    const double c_exp = static_cast<double>(d) / eta;
    const double edge = (1.0 + std::sqrt(y)) * (1.0 + std::sqrt(y));
    const double value = omega / d * std::pow(edge * n / threshold_beta, c_exp);
    return {value, MassMethod::AsymptoticBf, 0.0};
}

MassResult mass_bf_error_term(int n, int m, const ChannelParams& params, double omega, int d,
                              long cdf_samples, uint64_t seed) {
    require(n >= 1 && m >= 1, ErrorCode::InvalidArgument,
            "mass_bf_error_term: antenna counts must be >= 1");
    auto cdf = gain_cdf_mrc(m, n, cdf_samples, seed);
    ConnectionFunction h(AntennaScheme::beamforming(m, n), params, Metric::SnrOutage, 0.0, cdf);
    MassResult exact = mass_radial(h, omega, d, 1e-9);
    const double y = static_cast<double>(m) / n;
    MassResult step = mass_bf_asymptotic(omega, d, params.eta, params.threshold_beta(), n, y);
    return {exact.value - step.value, MassMethod::RadialQuadrature, exact.error_estimate};
}

} // namespace connmass
