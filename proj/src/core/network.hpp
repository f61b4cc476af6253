#pragma once

#include <cstdint>
#include <vector>

#include "core/geometry.hpp"
#include "core/mass.hpp"

namespace connmass {

// One draw of the soft random geometric graph: N uniform nodes, each
// unordered pair linked independently with probability H(r_ij).
struct NetworkRealization {
    std::vector<Point> points;
    std::vector<std::vector<int>> adjacency;  // symmetric, irreflexive
    uint64_t seed = 0;
    int dim = 0;

    int node_count() const noexcept { return static_cast<int>(points.size()); }
    long edge_count() const;
    int degree(int i) const { return static_cast<int>(adjacency[static_cast<std::size_t>(i)].size()); }
    double mean_degree() const;
};

enum class PfcMethod { Analytic, Simulation };

struct PfcEstimate {
    double value = 0.0;      // clamped to [0, 1]
    double raw_value = 0.0;  // pre-clamp, for diagnostics
    PfcMethod method = PfcMethod::Analytic;
    long trials = 0;         // trials or outer integration samples
    double std_error = 0.0;
};

NetworkRealization simulate_realization(int n_nodes, const Domain& domain, const RadialFn& h,
                                        uint64_t seed);

// True iff the undirected graph has a single connected component
// (union-find with path compression).
bool is_fully_connected(const NetworkRealization& net);

// Isolated-node approximation of full connectivity:
// 1 - rho * int_V exp(-rho M(r)) dr, the outer integral by Monte Carlo over
// uniform positions, the inner mass by mass_spatial with its own derived
// seeds. Clamped to [0, 1]; meaningful at high node density.
PfcEstimate pfc_analytic(double rho, const Domain& domain, const RadialFn& h,
                         long outer_samples, long inner_samples, uint64_t seed);

// Brute-force estimate of P(fully connected) over independent realizations,
// with a binomial standard error.
PfcEstimate simulate_pfc(int n_nodes, const Domain& domain, const RadialFn& h, long trials,
                         uint64_t seed);

// Fraction of realizations containing at least one degree-0 node. Shares the
// per-trial seed derivation with simulate_pfc, so for equal arguments the
// two estimates describe the same ensemble realization-for-realization.
PfcEstimate isolation_probability(int n_nodes, const Domain& domain, const RadialFn& h,
                                  long trials, uint64_t seed);

} // namespace connmass
