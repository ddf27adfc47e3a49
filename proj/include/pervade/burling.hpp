#ifndef PERVADE_BURLING_HPP
#define PERVADE_BURLING_HPP

#include "pervade/coloring.hpp"
#include "pervade/graph.hpp"

namespace pervade {

// One level of the Burling sequence: SP_k with its distinguished stable set T_k.
struct BurlingLevel {
    Graph g;
    VertexSet t_set;
    int k = 0;
};

struct NotStable : std::invalid_argument {
    NotStable() : std::invalid_argument("S is not a stable set") {}
};

struct LevelTooLarge : std::invalid_argument {
    explicit LevelTooLarge(int k)
        : std::invalid_argument("burling level " + std::to_string(k) +
                                " exceeds the practical cap (5)") {}
};

// Compose (A,S) with itself: s+1 copies of A minus S, plus 3s^2 new vertices
// x_ij, y_ij, z_ij with x_ij,y_ij complete to N_{0,i}, x_ij,z_ij complete to
// N_{ij} and the edge y_ij z_ij. Returns the graph and T = {x_ij, y_ij}.
// Copies come first (in order, each keeping the relative order of A minus S),
// then the new vertices in lexicographic (i,j) order as x,y,z triples.
std::pair<Graph, VertexSet> compose(const Graph& a, const VertexSet& s);

// SP_1 = K_2 with |T_1| = 1; each later level composes the previous with itself.
// Levels are cached; k > 5 is refused (SP_5 already has 72501 vertices).
const BurlingLevel& burling(int k);

struct BurlingAudit {
    int k = 0;
    int n = 0;
    std::size_t m = 0;
    int omega = 0;
    ChiResult chi;
    bool triangle_free = false;
    bool chi_meets_paper_bound = false; // chi lower bound >= k+1
};

BurlingAudit audit_burling(const BurlingLevel& level, Budget budget = Budget::unlimited());

} // namespace pervade

#endif
