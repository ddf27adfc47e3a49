#ifndef PERVADE_EXTRACTION_HPP
#define PERVADE_EXTRACTION_HPP

#include <cstdint>
#include <string>

#include "pervade/coloring.hpp"
#include "pervade/containment.hpp"
#include "pervade/graph.hpp"
#include "pervade/witnesses.hpp"

namespace pervade {

// Distance classes from v (within v's component). Always a valid levelling.
Levelling bfs_levelling(const Graph& g, int v);

// ---- nested max-chromatic layer chains ----

enum class ChiEstimator { exact, dsatur_upper, automatic };

struct LayerChain {
    // nested connected sets C_1 (index 0) .. C_{t'+1}
    std::vector<VertexSet> sets;
    std::vector<int> centers;       // z_i, one per completed step
    std::vector<int> radii;         // k_i
    std::vector<int> chi_estimates; // estimate per set (parallel to sets)
    bool stalled = false;
    std::string stall_reason;
    int steps() const { return static_cast<int>(centers.size()); }
};

// Repeatedly: take the max-chi-estimate component, pick a center, pick the
// radius whose distance class maximizes the estimate (ties to the smallest
// radius), and recurse into that class's best component. Stops early when the
// best layer estimate drops below 2 or its radius is <= 2.
LayerChain build_layer_chain(const Graph& g, int t, ChiEstimator estimator, std::uint64_t seed,
                             Budget budget = Budget::unlimited());

// re-validate a chain against the definition with fresh BFS and exact chi
CheckResult validate_layer_chain(const Graph& g, const LayerChain& chain, bool exact_chi);

// ---- theta extraction (K_{2,n} subdivisions) ----

struct ThetaCertificate {
    int hub_u = -1;
    int hub_v = -1;
    std::vector<std::vector<int>> paths; // each runs hub_u .. hub_v
    int ell = 1;
    int n() const { return static_cast<int>(paths.size()); }
};

CheckResult verify_theta(const ThetaCertificate& cert, const Graph& g, int n, int ell);

struct ThetaResult {
    bool found = false;
    ThetaCertificate cert;
    std::vector<std::string> stages; // pipeline trace; failure reasons when !found
    bool timed_out = false;
};

// The constructive pipeline: layer chain, distant hub pair, one path per
// chain level, nine-way pair typing, monochromatic subset, reroute casework.
// Falls back to a direct bounded subdivision search when the pipeline fails.
// Every returned certificate passes verify_theta and its paths are long
// enough that the union genuinely carries a (>= ell)-subdivision of K_{2,n}.
ThetaResult find_theta(const Graph& g, int n, int ell, int t, ChiEstimator estimator, Budget budget,
                       std::uint64_t seed);

inline int default_chain_steps(int n) { return 3 * (n + 1); }

} // namespace pervade

#endif
