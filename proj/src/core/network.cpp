#include "core/network.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "core/errors.hpp"
#include "core/parallel.hpp"
#include "core/rng.hpp"

namespace connmass {
namespace {

struct UnionFind {
    std::vector<int> parent;
    int components;

    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)), components(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[static_cast<std::size_t>(b)] = a;
            --components;
        }
    }
};

// Per-trial outcome of one soft-RGG draw, shared by the ensemble estimators.
struct TrialOutcome {
    bool fully_connected;
    bool has_isolated;
};

TrialOutcome run_trial(int n_nodes, const Domain& domain, const RadialFn& h, uint64_t seed) {
    Rng rng(seed);
    std::vector<Point> pts(static_cast<std::size_t>(n_nodes));
    for (auto& p : pts) p = domain.sample_one(rng);

    UnionFind uf(n_nodes);
    std::vector<int> degree(static_cast<std::size_t>(n_nodes), 0);
    const int dim = domain.dim();
    for (int i = 0; i < n_nodes; ++i) {
        for (int j = i + 1; j < n_nodes; ++j) {
            const double p_link = h(distance(pts[static_cast<std::size_t>(i)],
                                             pts[static_cast<std::size_t>(j)], dim));
            if (rng.uniform01() < p_link) {
                uf.unite(i, j);
                ++degree[static_cast<std::size_t>(i)];
                ++degree[static_cast<std::size_t>(j)];
            }
        }
    }
    const bool isolated =
        std::any_of(degree.begin(), degree.end(), [](int d) { return d == 0; });
    return {uf.components == 1, isolated};
}

PfcEstimate trial_fraction(int n_nodes, const Domain& domain, const RadialFn& h, long trials,
                           uint64_t seed, bool count_isolation) {
    require(n_nodes >= 2, ErrorCode::InvalidArgument, "trial ensemble needs N >= 2");
    require(trials >= 1, ErrorCode::InvalidArgument, "trial ensemble needs trials >= 1");
    require(domain.finite(), ErrorCode::UnsupportedDomain, "trial ensemble needs a finite domain");

    constexpr long kChunk = 8;
    const std::size_t chunks = static_cast<std::size_t>((trials + kChunk - 1) / kChunk);
    std::vector<long> hits(chunks, 0);
    parallel_chunks(chunks, [&](std::size_t c) {
        const long lo = static_cast<long>(c) * kChunk;
        const long hi = std::min(trials, lo + kChunk);
        long acc = 0;
        for (long t = lo; t < hi; ++t) {
            TrialOutcome out = run_trial(n_nodes, domain, h,
                                         derive_seed(seed, static_cast<uint64_t>(t)));
            acc += count_isolation ? out.has_isolated : out.fully_connected;
        }
        hits[c] = acc;
    });
    const long total = std::accumulate(hits.begin(), hits.end(), 0L);
    const double p = static_cast<double>(total) / static_cast<double>(trials);
    const double se = std::sqrt(std::max(0.0, p * (1.0 - p)) / static_cast<double>(trials));
    return {p, p, PfcMethod::Simulation, trials, se};
}

} // namespace

long NetworkRealization::edge_count() const {
    long twice = 0;
    for (const auto& nbrs : adjacency) twice += static_cast<long>(nbrs.size());
    return twice / 2;
}

double NetworkRealization::mean_degree() const {
    if (points.empty()) return 0.0;
    return 2.0 * static_cast<double>(edge_count()) / static_cast<double>(points.size());
}

NetworkRealization simulate_realization(int n_nodes, const Domain& domain, const RadialFn& h,
                                        uint64_t seed) {
    require(n_nodes >= 2, ErrorCode::InvalidArgument, "simulate_realization: N must be >= 2");
    require(domain.finite(), ErrorCode::UnsupportedDomain,
            "simulate_realization: domain must be finite");

    NetworkRealization net;
    net.seed = seed;
    net.dim = domain.dim();
    Rng rng(seed);
    net.points.resize(static_cast<std::size_t>(n_nodes));
    for (auto& p : net.points) p = domain.sample_one(rng);
    net.adjacency.assign(static_cast<std::size_t>(n_nodes), {});
    for (int i = 0; i < n_nodes; ++i) {
        for (int j = i + 1; j < n_nodes; ++j) {
            const double p_link = h(distance(net.points[static_cast<std::size_t>(i)],
                                             net.points[static_cast<std::size_t>(j)], net.dim));
            if (rng.uniform01() < p_link) {
                net.adjacency[static_cast<std::size_t>(i)].push_back(j);
                net.adjacency[static_cast<std::size_t>(j)].push_back(i);
            }
        }
    }
    return net;
}

bool is_fully_connected(const NetworkRealization& net) {
    const int n = net.node_count();
    require(n >= 1, ErrorCode::InvalidArgument, "is_fully_connected: empty realization");
    UnionFind uf(n);
    for (int i = 0; i < n; ++i) {
        for (int j : net.adjacency[static_cast<std::size_t>(i)]) {
            if (j > i) uf.unite(i, j);
        }
    }
    return uf.components == 1;
}

PfcEstimate pfc_analytic(double rho, const Domain& domain, const RadialFn& h,
                         long outer_samples, long inner_samples, uint64_t seed) {
    require(rho > 0.0, ErrorCode::InvalidArgument, "pfc_analytic: rho must be > 0");
    require(outer_samples >= 2 && inner_samples >= 1, ErrorCode::InvalidArgument,
            "pfc_analytic: sample counts must be positive");
    require(domain.finite(), ErrorCode::UnsupportedDomain,
            "pfc_analytic: domain must be finite");

    constexpr long kChunk = 256;
    const std::size_t chunks = static_cast<std::size_t>((outer_samples + kChunk - 1) / kChunk);
    std::vector<long double> sums(chunks, 0.0L);
    std::vector<long double> sq_sums(chunks, 0.0L);
    parallel_chunks(chunks, [&](std::size_t c) {
        Rng rng(derive_seed(seed, c));
        const long lo = static_cast<long>(c) * kChunk;
        const long hi = std::min(outer_samples, lo + kChunk);
        long double acc = 0.0L, acc2 = 0.0L;
        for (long i = lo; i < hi; ++i) {
            const Point origin = domain.sample_one(rng);
            const uint64_t inner_seed =
                derive_seed(seed ^ 0x5bf03635d2a266ULL, static_cast<uint64_t>(i) + 1);
            const MassResult mass = mass_spatial(h, domain, origin, inner_samples, inner_seed);
            const double v = std::exp(-rho * mass.value);
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
    const double count = static_cast<double>(outer_samples);
    const double mean = static_cast<double>(sum / count);
    double var = static_cast<double>(sq / count) - mean * mean;
    if (var < 0.0) var = 0.0;
    const double vol = domain.volume();
    const double raw = 1.0 - rho * vol * mean;
    const double se = rho * vol * std::sqrt(var / (count - 1.0));
    return {std::clamp(raw, 0.0, 1.0), raw, PfcMethod::Analytic, outer_samples, se};
}

PfcEstimate simulate_pfc(int n_nodes, const Domain& domain, const RadialFn& h, long trials,
                         uint64_t seed) {
    return trial_fraction(n_nodes, domain, h, trials, seed, /*count_isolation=*/false);
}

PfcEstimate isolation_probability(int n_nodes, const Domain& domain, const RadialFn& h,
                                  long trials, uint64_t seed) {
    return trial_fraction(n_nodes, domain, h, trials, seed, /*count_isolation=*/true);
}

} // namespace connmass
