#ifndef PERVADE_WITNESSES_HPP
#define PERVADE_WITNESSES_HPP

#include <string>

#include "pervade/coloring.hpp"
#include "pervade/graph.hpp"

namespace pervade {

// Shared verdict for all witness checkers: Accept, or Reject naming the first
// violated clause and, where meaningful, a violating vertex (pair).
struct CheckResult {
    bool ok = true;
    std::string clause;
    int u = -1;
    int v = -1;

    static CheckResult accept() { return {}; }
    static CheckResult reject(std::string clause, int u = -1, int v = -1) {
        return {false, std::move(clause), u, v};
    }
};

// ---- levellings and multicovers (§4) ----

struct Levelling {
    std::vector<VertexSet> levels; // L_0 .. L_k
    int k() const { return static_cast<int>(levels.size()) - 1; }
    int apex() const { return levels.front().front(); }
    const VertexSet& base() const { return levels.back(); }
    VertexSet union_set() const;
};

struct KMulticover {
    std::vector<int> indices; // strictly increasing
    std::vector<Levelling> covers;
};

// head z with one induced path to each cover's apex
struct Tick {
    int head = -1;
    std::vector<int> indices;
    std::vector<std::vector<int>> paths; // path[i] runs head .. apex of cover indices[i]
    int order() const;
};

CheckResult check_levelling(const Graph& g, const Levelling& lev);
CheckResult check_k_cover(const Graph& g, const Levelling& lev, const VertexSet& c);
CheckResult check_k_multicover(const Graph& g, const KMulticover& mc, const VertexSet& c);
// 1-multicovers only: apex of a later cover has no neighbour in an earlier base.
CheckResult check_independent_1_multicover(const Graph& g, const KMulticover& mc, const VertexSet& c);
CheckResult check_tick(const Graph& g, const Tick& tick, const KMulticover& mc, const VertexSet& c);

// ---- clique covers (§7, §8) ----

struct CliqueCover {
    VertexSet x, n, w;
    int xi = 1;
};

struct CliqueMulticover {
    std::vector<int> indices;
    std::vector<CliqueCover> covers;
    int xi = 1;
};

CheckResult check_clique_cover(const Graph& g, const CliqueCover& cc, const VertexSet& c);
CheckResult check_clique_multicover(const Graph& g, const CliqueMulticover& mc, const VertexSet& c);

enum class EarthedStatus { earthed, not_earthed, timeout };

struct EarthedResult {
    EarthedStatus status = EarthedStatus::not_earthed;
    VertexSet clique; // witnessing xi-clique when earthed
};

// v is (beta,xi)-earthed via (Z,W): some xi-clique X containing v has
// chi(M) > beta, where M = vertices of W minus X anticomplete to X with a
// neighbour in Z complete to X. Cliques enumerated lexicographically.
EarthedResult check_earthed(const Graph& g, int v, const VertexSet& z, const VertexSet& w, int beta,
                            int xi, Budget budget = Budget::unlimited());

enum class PairStatus { independent, skew, both, neither, timeout };

// Status of the pair (L_i, L_j), i<j by index value, inside mc with target C.
PairStatus pair_status(const Graph& g, const CliqueMulticover& mc, int i, int j, const VertexSet& c,
                       int beta, Budget budget = Budget::unlimited());

enum class ResidueMode { verbatim, complement };

// (X,N',W) is a C-residue of (X,N,W): N' within N and every dropped vertex
// has a neighbour in C (verbatim §8 reading; complement mode inverts it).
CheckResult check_residue(const Graph& g, const CliqueCover& orig, const CliqueCover& reduced,
                          const VertexSet& c, ResidueMode mode = ResidueMode::verbatim);

enum class HomogeneousStatus { all_earthed, none_earthed, mixed, timeout };

// Empty V reports none_earthed.
HomogeneousStatus check_homogeneous(const Graph& g, const VertexSet& v, const VertexSet& z,
                                    const VertexSet& w, int beta, int xi,
                                    Budget budget = Budget::unlimited());

// ---- bounded counterexample search for (xi,zeta,c)-freeness (§7) ----

enum class FreenessStatus { witness, none_found, timeout };

struct FreenessWitness {
    FreenessStatus status = FreenessStatus::none_found;
    VertexSet c;
    CliqueMulticover mc;
};

// Bounded exhaustive search for a target C with chi(C) > c carrying an
// independent xi-clique-multicover of magnitude zeta. Hosts capped at 16
// vertices; any returned witness re-validates through the public checkers.
FreenessWitness find_independent_multicover_counterexample(const Graph& g, int xi, int zeta, int c,
                                                           Budget budget = Budget::unlimited());

} // namespace pervade

#endif
