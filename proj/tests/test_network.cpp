#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"
#include "core/network.hpp"
#include "core/rng.hpp"

using namespace connmass;

namespace {
const Domain kSquare = Domain::hyperrectangle({1.0, 1.0});
const RadialFn kAlways = [](double) { return 1.0; };
const RadialFn kNever = [](double) { return 0.0; };
}

TEST_CASE("realizations: complete, empty and randomized graphs") {
    NetworkRealization full = simulate_realization(12, kSquare, kAlways, 5);
    CHECK(full.edge_count() == 12 * 11 / 2);
    CHECK(full.mean_degree() == doctest::Approx(11.0));
    CHECK(is_fully_connected(full));

    NetworkRealization empty = simulate_realization(6, kSquare, kNever, 5);
    CHECK(empty.edge_count() == 0);
    CHECK_FALSE(is_fully_connected(empty));

    // symmetric and irreflexive adjacency
    const ChannelParams p(2.0, 1e-6, 1.0, 20.0, 2);
    RadialFn h = [&](double r) { return pair_conn_siso(r, p); };
    NetworkRealization net = simulate_realization(60, kSquare, h, 77);
    for (int i = 0; i < net.node_count(); ++i) {
        for (int j : net.adjacency[static_cast<std::size_t>(i)]) {
            CHECK(j != i);
            const auto& back = net.adjacency[static_cast<std::size_t>(j)];
            CHECK(std::find(back.begin(), back.end(), i) != back.end());
        }
    }
    // deterministic in the seed
    NetworkRealization net2 = simulate_realization(60, kSquare, h, 77);
    CHECK(net.edge_count() == net2.edge_count());
}

TEST_CASE("is_fully_connected on hand-built graphs") {
    NetworkRealization path;
    path.points.resize(3);
    path.adjacency = {{1}, {0, 2}, {1}};
    CHECK(is_fully_connected(path));
    NetworkRealization split;
    split.points.resize(4);
    split.adjacency = {{1}, {0}, {3}, {2}};
    CHECK_FALSE(is_fully_connected(split));
}

TEST_CASE("simulated full connectivity: degenerate links") {
    PfcEstimate sure = simulate_pfc(8, kSquare, kAlways, 200, 4);
    CHECK(sure.value == 1.0);
    CHECK(sure.std_error == 0.0);
    PfcEstimate never = simulate_pfc(8, kSquare, kNever, 200, 4);
    CHECK(never.value == 0.0);

    PfcEstimate iso_none = isolation_probability(8, kSquare, kAlways, 200, 4);
    CHECK(iso_none.value == 0.0);
    PfcEstimate iso_all = isolation_probability(8, kSquare, kNever, 200, 4);
    CHECK(iso_all.value == 1.0);
}

TEST_CASE("two-node isolation probability equals 1 - p") {
    const double p_link = 0.3;
    RadialFn h = [&](double) { return p_link; };
    PfcEstimate iso = isolation_probability(2, kSquare, h, 6000, 11);
    const double se = std::sqrt(p_link * (1.0 - p_link) / 6000.0);
    CHECK(std::fabs(iso.value - (1.0 - p_link)) < 4.0 * se);
    // for N = 2 connectivity and non-isolation coincide
    PfcEstimate pfc = simulate_pfc(2, kSquare, h, 6000, 11);
    CHECK(pfc.value == doctest::Approx(1.0 - iso.value));
}

TEST_CASE("isolation events are a subset of disconnection events") {
    const ChannelParams p(2.0, 1e-6, 1.0, 40.0, 2);
    RadialFn h = [&](double r) { return pair_conn_siso(r, p); };
    for (int n : {20, 60}) {
        PfcEstimate pfc = simulate_pfc(n, kSquare, h, 400, 21);
        PfcEstimate iso = isolation_probability(n, kSquare, h, 400, 21);
        // identical seeds drive identical realizations, so this is exact
        CHECK(iso.value <= 1.0 - pfc.value + 1e-12);
    }
}

TEST_CASE("mean degree matches (N-1) <M>/V") {
    const ChannelParams p(2.0, 1e-6, 1.0, 30.0, 2);
    RadialFn h = [&](double r) { return pair_conn_siso(r, p); };
    const int n_nodes = 50;
    const long trials = 400;
    double deg_sum = 0.0, deg_sq = 0.0;
    for (long t = 0; t < trials; ++t) {
        NetworkRealization net = simulate_realization(n_nodes, kSquare, h, 1000 + t);
        const double d = net.mean_degree();
        deg_sum += d;
        deg_sq += d * d;
    }
    const double deg_mean = deg_sum / trials;
    const double deg_se =
        std::sqrt(std::max(0.0, deg_sq / trials - deg_mean * deg_mean) / trials);

    // spatially averaged mass over uniform transmitter positions
    Rng rng(9);
    double mass_sum = 0.0, mass_sq = 0.0;
    const int origins = 300;
    for (int i = 0; i < origins; ++i) {
        const Point o = kSquare.sample_one(rng);
        const double m = mass_spatial(h, kSquare, o, 20000, 500 + i).value;
        mass_sum += m;
        mass_sq += m * m;
    }
    const double mass_mean = mass_sum / origins;
    const double mass_se =
        std::sqrt(std::max(0.0, mass_sq / origins - mass_mean * mass_mean) / origins);
    const double predicted = (n_nodes - 1) * mass_mean / kSquare.volume();
    const double predicted_se = (n_nodes - 1) * mass_se;
    CHECK(std::fabs(deg_mean - predicted) < 3.0 * std::hypot(deg_se, predicted_se));
}

TEST_CASE("analytic full connectivity: limits and clamping") {
    // H == 1 makes the inner mass exact, so the raw value is 1 - rho V e^{-rho V}
    PfcEstimate high = pfc_analytic(40.0, kSquare, kAlways, 2000, 100, 3);
    CHECK(high.raw_value ==
          doctest::Approx(1.0 - 40.0 * std::exp(-40.0)).epsilon(1e-9));
    CHECK(high.value >= 0.99);

    // short-range links at moderate density drive the raw isolated-node
    // count above one; the estimate clamps to 0 while raw stays reported
    const ChannelParams p(2.0, 1e-6, 1.0, 100.0, 2);
    RadialFn h = [&](double r) { return pair_conn_siso(r, p); };
    PfcEstimate low = pfc_analytic(30.0, kSquare, h, 2000, 2000, 3);
    CHECK(low.raw_value < 0.0);
    CHECK(low.value == 0.0);
}

TEST_CASE("analytic full connectivity: monotone in the density") {
    const ChannelParams p(2.0, 1e-6, 1.0, 60.0, 2);
    RadialFn h = [&](double r) { return pair_conn_siso(r, p); };
    double prev = -1.0;
    double prev_se = 0.0;
    for (double rho : {60.0, 120.0, 240.0}) {
        PfcEstimate est = pfc_analytic(rho, kSquare, h, 3000, 4000, 13);
        CHECK(est.value >= prev - 3.0 * std::hypot(est.std_error, prev_se));
        prev = est.value;
        prev_se = est.std_error;
    }
}

TEST_CASE("high-density isolation integrand is boundary dominated") {
    const ChannelParams p(2.0, 1e-6, 1.0, 60.0, 2);
    RadialFn h = [&](double r) { return pair_conn_siso(r, p); };
    const double rho = 400.0;
    Rng rng(31);
    double best = -1.0;
    Point argmax;
    for (int i = 0; i < 400; ++i) {
        const Point o = kSquare.sample_one(rng);
        const double m = mass_spatial(h, kSquare, o, 20000, 40 + i).value;
        const double integrand = std::exp(-rho * m);
        if (integrand > best) {
            best = integrand;
            argmax = o;
        }
    }
    const double edge_dist = std::min({argmax[0], argmax[1], 1.0 - argmax[0], 1.0 - argmax[1]});
    CHECK(edge_dist <= 0.1 * kSquare.diameter());
}

TEST_CASE("simulated full connectivity is nondecreasing in N") {
    const ChannelParams p(2.0, 1e-6, 1.0, 15.0, 2);
    RadialFn h = [&](double r) { return pair_conn_siso(r, p); };
    double prev = -1.0, prev_se = 0.0;
    for (int n : {20, 40, 80}) {
        PfcEstimate est = simulate_pfc(n, kSquare, h, 600, 33);
        CHECK(est.value >= prev - 4.0 * std::hypot(est.std_error, prev_se));
        prev = est.value;
        prev_se = est.std_error;
    }
    CHECK(prev > 0.5);  // densest point should be comfortably connected
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(simulate_pfc(1, kSquare, kAlways, 10, 1), Error);
    CHECK_THROWS_AS(simulate_pfc(5, kSquare, kAlways, 0, 1), Error);
    CHECK_THROWS_AS(pfc_analytic(0.0, kSquare, kAlways, 100, 10, 1), Error);
    CHECK_THROWS_AS(simulate_realization(3, Domain::wedge(2, 1.0), kAlways, 1), Error);
}
