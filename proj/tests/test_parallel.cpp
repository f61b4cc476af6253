#include <doctest.h>

#include <cstdlib>
#include <cstring>

#include "core/channel.hpp"
#include "core/geometry.hpp"
#include "core/mass.hpp"
#include "core/network.hpp"
#include "core/parallel.hpp"

using namespace connmass;

namespace {

struct ThreadEnv {
    explicit ThreadEnv(const char* value) { setenv("CONNMASS_THREADS", value, 1); }
    ~ThreadEnv() { unsetenv("CONNMASS_THREADS"); }
};

} // namespace

TEST_CASE("worker count honours the environment override") {
    {
        ThreadEnv env("5");
        CHECK(worker_count() == 5);
    }
    {
        ThreadEnv env("1");
        CHECK(worker_count() == 1);
    }
    CHECK(worker_count() >= 1);
}

TEST_CASE("chunked sampling is identical for any worker count") {
    std::vector<double> lam_serial, lam_pool;
    std::vector<Point> pts_serial, pts_pool;
    MassResult mass_serial, mass_pool;
    PfcEstimate pfc_serial, pfc_pool;

    const Domain square = Domain::hyperrectangle({1.0, 1.0});
    const ChannelParams p(2.0, 1e-6, 1.0, 30.0, 2);
    RadialFn h = [&](double r) { return pair_conn_siso(r, p); };

    {
        ThreadEnv env("1");
        lam_serial = sample_lambda_max(3, 4, 77, 5000);
        pts_serial = square.sample_uniform(200000, 13);
        mass_serial = mass_spatial(h, square, {{0.25, 0.5, 0.0}}, 200000, 5);
        pfc_serial = simulate_pfc(40, square, h, 64, 21);
    }
    {
        ThreadEnv env("7");
        lam_pool = sample_lambda_max(3, 4, 77, 5000);
        pts_pool = square.sample_uniform(200000, 13);
        mass_pool = mass_spatial(h, square, {{0.25, 0.5, 0.0}}, 200000, 5);
        pfc_pool = simulate_pfc(40, square, h, 64, 21);
    }

    CHECK(lam_serial == lam_pool);
    REQUIRE(pts_serial.size() == pts_pool.size());
    CHECK(std::memcmp(pts_serial.data(), pts_pool.data(),
                      pts_serial.size() * sizeof(Point)) == 0);
    CHECK(mass_serial.value == mass_pool.value);
    CHECK(mass_serial.error_estimate == mass_pool.error_estimate);
    CHECK(pfc_serial.value == pfc_pool.value);
}

TEST_CASE("parallel_chunks covers every chunk exactly once and propagates errors") {
    ThreadEnv env("4");
    std::vector<int> hits(257, 0);
    parallel_chunks(hits.size(), [&](std::size_t c) { hits[c] += 1; });
    for (int h_count : hits) CHECK(h_count == 1);

    CHECK_THROWS_AS(
        parallel_chunks(16, [](std::size_t c) {
            if (c == 9) throw std::runtime_error("boom");
        }),
        std::runtime_error);
}
