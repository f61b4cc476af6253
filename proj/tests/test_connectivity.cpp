#include <doctest.h>

#include <cmath>

#include "core/connectivity.hpp"
#include "core/errors.hpp"
#include "oracles.hpp"

using namespace connmass;

namespace {
const ChannelParams kUnit(2.0, 0.0, 1.0, 1.0, 2);  // threshold*beta = 1, eps = 0
}

TEST_CASE("siso connection probability") {
    CHECK(pair_conn_siso(0.0, kUnit) == doctest::Approx(1.0));
    CHECK(pair_conn_siso(1.0, kUnit) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    double prev = 1.1;
    for (double r = 0.0; r < 12.0; r += 0.05) {
        const double h = pair_conn_siso(r, kUnit);
        CHECK(h <= prev);
        CHECK(h >= 0.0);
        prev = h;
    }
    CHECK(pair_conn_siso(40.0, kUnit) < 1e-300);
}

TEST_CASE("diversity-coding connection probability") {
    // m=n=1 collapses to SISO at 1e-12 relative accuracy
    for (double r = 0.0; r < 6.0; r += 0.11) {
        const double siso = pair_conn_siso(r, kUnit);
        const double dc = pair_conn_dc(r, 1, 1, kUnit);
        if (siso > 1e-290) {
            CHECK(dc == doctest::Approx(siso).epsilon(1e-12));
        }
    }
    // Erlang tail at x = m*tb*r^eta/zeta = 2
    CHECK(pair_conn_dc(1.0, 2, 1, kUnit) ==
          doctest::Approx(oracle::erlang_tail(2, 2.0)).epsilon(1e-12));
    CHECK(pair_conn_dc(1.0, 2, 1, kUnit) == doctest::Approx(3.0 * std::exp(-2.0)).epsilon(1e-12));
    // zeta = 2 for m = 3; zero distance with eps = 0 connects surely
    CHECK(pair_conn_dc(0.0, 3, 1, kUnit) == doctest::Approx(1.0));
}

TEST_CASE("mrc connection probability: exponential case and limits") {
    auto cdf11 = gain_cdf_mrc(1, 1, 10000, 5);
    double worst = 0.0;
    for (double r = 0.0; r < 4.0; r += 0.01) {
        const double h = pair_conn_mrc(r, 1, 1, kUnit, *cdf11);
        worst = std::max(worst, std::fabs(h - pair_conn_siso(r, kUnit)));
    }
    CHECK(worst < 0.02);
    CHECK(pair_conn_mrc(1e9, 1, 1, kUnit, *cdf11) == 0.0);

    auto cdf22 = gain_cdf_mrc(2, 2, 10000, 5);
    CHECK_THROWS_AS(pair_conn_mrc(1.0, 2, 3, kUnit, *cdf22), Error);
}

TEST_CASE("mrc dominates diversity coding at m = 2") {
    // lambda_max >= ||H||_F^2 / 2 pointwise, so the MRC link can only beat
    // the power-normalized STBC link; allow the tabulation error on top.
    auto cdf = gain_cdf_mrc(2, 2, 20000, 8);
    for (double r = 0.0; r < 3.0; r += 0.03) {
        const double mrc = pair_conn_mrc(r, 2, 2, kUnit, *cdf);
        const double dc = pair_conn_dc(r, 2, 2, kUnit);
        CHECK(mrc >= dc - 0.02);
    }
}

TEST_CASE("step approximation of the beamforming link") {
    const ChannelParams p(2.0, 0.37, 1.0, 1.0, 2);  // eps must be ignored
    CHECK(pair_conn_mrc_step(5.9, 9, 9, p) == 1.0);
    CHECK(pair_conn_mrc_step(6.1, 9, 9, p) == 0.0);
    CHECK(pair_conn_mrc_step(0.0, 9, 9, p) == 1.0);
    // m << n: cutoff approaches (n/(threshold beta))^(1/eta)
    const int m = 1, n = 10000;
    const double cutoff = std::pow(static_cast<double>(n), 0.5);
    CHECK(pair_conn_mrc_step(cutoff * 0.98, m, n, p) == 1.0);
    CHECK(pair_conn_mrc_step(cutoff * 1.05, m, n, p) == 0.0);
}

TEST_CASE("rate-outage metric: threshold substitution is exact") {
    const ChannelParams base(2.0, 1e-3, 2.0, 7.0, 2);  // threshold irrelevant below
    // SISO with R = 1: threshold 2^1 - 1 = 1
    for (double r = 0.0; r < 4.0; r += 0.13) {
        CHECK(pair_conn_rate(r, AntennaScheme::siso(), base, 1.0) ==
              doctest::Approx(pair_conn_siso(r, base.with_threshold(1.0))).epsilon(1e-14));
    }
    // STBC m=3 (zeta 2) with R = 1: threshold 2^2 - 1 = 3
    for (double r = 0.0; r < 4.0; r += 0.13) {
        CHECK(pair_conn_rate(r, AntennaScheme::diversity_coding(3, 2), base, 1.0) ==
              doctest::Approx(pair_conn_dc(r, 3, 2, base.with_threshold(3.0))).epsilon(1e-14));
    }
    // MIMO-MRC keeps zeta = 1
    auto cdf = gain_cdf_mrc(3, 2, 10000, 12);
    for (double r = 0.0; r < 4.0; r += 0.13) {
        CHECK(pair_conn_rate(r, AntennaScheme::beamforming(3, 2), base, 1.0, cdf.get()) ==
              doctest::Approx(pair_conn_mrc(r, 3, 2, base.with_threshold(1.0), *cdf))
                  .epsilon(1e-14));
    }
    CHECK_THROWS_AS(pair_conn_rate(1.0, AntennaScheme::beamforming(2, 2), base, 1.0), Error);
    CHECK_THROWS_AS(pair_conn_rate(1.0, AntennaScheme::siso(), base, 0.0), Error);
}

TEST_CASE("rate penalty inequality (2^2R - 1) > 2 (2^R - 1)") {
    for (double rate = 0.05; rate < 8.0; rate += 0.12) {
        CHECK(std::exp2(2.0 * rate) - 1.0 > 2.0 * (std::exp2(rate) - 1.0));
    }
}

TEST_CASE("connection functions map to [0,1] and are nonincreasing") {
    const ChannelParams p(3.0, 1e-6, 1.0, 2.0, 3);
    std::vector<ConnectionFunction> funcs;
    funcs.emplace_back(AntennaScheme::siso(), p, Metric::SnrOutage);
    for (int m : {1, 2, 5, 8}) {
        for (int n : {1, 3, 8}) {
            funcs.emplace_back(AntennaScheme::diversity_coding(m, n), p, Metric::SnrOutage);
            funcs.emplace_back(AntennaScheme::beamforming(m, n), p, Metric::SnrOutage, 0.0,
                               gain_cdf_mrc(m, n, 10000, 3));
            funcs.emplace_back(AntennaScheme::diversity_coding(m, n), p, Metric::RateOutage, 1.5);
        }
    }
    for (const auto& h : funcs) {
        double prev = 1.0 + 1e-15;
        for (int i = 0; i <= 1000; ++i) {
            const double r = 8.0 * i / 1000.0;
            const double v = h(r);
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
            CHECK(v <= prev + 1e-12);
            prev = v;
        }
    }
}

TEST_CASE("effective threshold bookkeeping") {
    const ChannelParams p(2.0, 0.0, 0.5, 9.0, 2);
    ConnectionFunction snr(AntennaScheme::diversity_coding(3, 3), p, Metric::SnrOutage);
    CHECK(snr.effective_threshold() == doctest::Approx(9.0));
    ConnectionFunction rate(AntennaScheme::diversity_coding(3, 3), p, Metric::RateOutage, 2.0);
    CHECK(rate.effective_threshold() == doctest::Approx(15.0));  // 2^(2*2) - 1
    ConnectionFunction rate_bf(AntennaScheme::beamforming(2, 2), p, Metric::RateOutage, 2.0,
                               gain_cdf_mrc(2, 2, 10000, 3));
    CHECK(rate_bf.effective_threshold() == doctest::Approx(3.0));  // 2^2 - 1
}

TEST_CASE("step-function convergence toward the exact mrc link") {
    // absolute integrated difference shrinks with n when C < 2/3
    const ChannelParams p(4.0, 0.0, 1.0, 1.0, 2);  // C = 1/2
    auto band_area = [&](int n) {
        auto cdf = gain_cdf_mrc(n, n, 20000, 21);
        auto f = [&](double r) {
            return std::fabs(pair_conn_mrc(r, n, n, p, *cdf) - pair_conn_mrc_step(r, n, n, p));
        };
        const double cutoff = std::pow(4.0 * n, 1.0 / 4.0);
        return oracle::radial_mass(f, 1.0, 2, 3.0 * cutoff, 4000);
    };
    const double a4 = band_area(4);
    const double a16 = band_area(16);
    const double a64 = band_area(64);
    CHECK(a16 < a4);
    CHECK(a64 < a16);

    // mass-relative version shrinks for C = 3/2 as well
    const ChannelParams p32(2.0, 0.0, 1.0, 1.0, 3);
    auto rel_band = [&](int n) {
        auto cdf = gain_cdf_mrc(n, n, 20000, 21);
        auto f = [&](double r) {
            return std::fabs(pair_conn_mrc(r, n, n, p32, *cdf) -
                             pair_conn_mrc_step(r, n, n, p32));
        };
        const double cutoff = std::pow(4.0 * n, 1.0 / 2.0);
        const double band = oracle::radial_mass(f, 1.0, 3, 2.0 * cutoff, 4000);
        return band / std::pow(4.0 * n, 1.5);
    };
    const double b4 = rel_band(4);
    const double b16 = rel_band(16);
    const double b64 = rel_band(64);
    CHECK(b16 < b4);
    CHECK(b64 < b16);
}
