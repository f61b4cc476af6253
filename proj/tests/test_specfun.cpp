#include <doctest.h>

#include <cmath>

#include "core/errors.hpp"
#include "core/specfun.hpp"
#include "oracles.hpp"

using namespace connmass;

TEST_CASE("regularized lower gamma: known values") {
    CHECK(reg_lower_gamma(1.0, 1.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-13));
    CHECK(reg_lower_gamma(2.0, 0.0) == 0.0);
    // 1 - e^{-3} (1 + 3 + 9/2)
    CHECK(reg_lower_gamma(3.0, 3.0) == doctest::Approx(0.5768099189).epsilon(1e-9));
}

TEST_CASE("regularized lower gamma matches Erlang sums for integer a") {
    for (int a : {1, 2, 3, 5, 8, 16, 40, 64, 120, 200}) {
        for (double x : {0.05, 0.5, 1.0, 3.0, 10.0, 35.0, 80.0, 150.0, 260.0}) {
            const double q_oracle = oracle::erlang_tail(a, x);
            const double q = reg_upper_gamma(static_cast<double>(a), x);
            const double p = reg_lower_gamma(static_cast<double>(a), x);
            CHECK(p == doctest::Approx(1.0 - q_oracle).epsilon(1e-10));
            if (q_oracle > 1e-280) {
                CHECK(q == doctest::Approx(q_oracle).epsilon(1e-10));
            }
            CHECK(p + q == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("regularized lower gamma: monotone in x, bounded in [0,1]") {
    for (double a : {0.4, 0.75, 1.5, 6.0, 33.3, 199.0}) {
        double prev = -1.0;
        for (double x = 0.0; x <= 4.0 * a + 20.0; x += 0.37) {
            const double p = reg_lower_gamma(a, x);
            CHECK(p >= 0.0);
            CHECK(p <= 1.0);
            CHECK(p >= prev - 1e-14);
            prev = p;
        }
    }
}

TEST_CASE("regularized lower gamma: domain errors") {
    CHECK_THROWS_AS(reg_lower_gamma(0.0, 1.0), Error);
    CHECK_THROWS_AS(reg_lower_gamma(-2.0, 1.0), Error);
    CHECK_THROWS_AS(reg_lower_gamma(1.0, -0.5), Error);
}

TEST_CASE("log gamma ratio tracks direct evaluation") {
    CHECK(std::exp(log_gamma_ratio(5.0, 4.0)) == doctest::Approx(4.0).epsilon(1e-13));
    CHECK(std::exp(log_gamma_ratio(4096.0 + 1.5, 4096.0)) ==
          doctest::Approx(std::pow(4096.0, 1.5) * (1.0 + 1.5 * 0.5 / 4096.0)).epsilon(1e-4));
}
