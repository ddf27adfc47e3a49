#ifndef PERVADE_COLORING_HPP
#define PERVADE_COLORING_HPP

#include <chrono>
#include <optional>

#include "pervade/graph.hpp"

namespace pervade {

// Wall-clock budget for the exact solvers. Expired budgets never turn into
// guesses: callers get a flagged bracket or a Timeout verdict instead.
class Budget {
public:
    Budget() = default; // unlimited
    static Budget seconds(double s) {
        Budget b;
        if (s >= 0)
            b.deadline_ = std::chrono::steady_clock::now() +
                          std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                              std::chrono::duration<double>(s));
        return b;
    }
    static Budget unlimited() { return Budget(); }
    bool expired() const {
        return deadline_ && std::chrono::steady_clock::now() >= *deadline_;
    }
    bool limited() const { return deadline_.has_value(); }

private:
    std::optional<std::chrono::steady_clock::time_point> deadline_;
};

// Exact clique number by branch and bound with a greedy-colouring bound.
int clique_number(const Graph& g);
// Some maximum clique (lexicographically first found by the solver).
VertexSet max_clique(const Graph& g);

// Greedy DSATUR colouring; returns per-vertex colours (upper bound witness).
std::vector<int> dsatur_coloring(const Graph& g);

struct ChiResult {
    int lower = 0;
    int upper = 0;
    bool exact = false; // lower == upper and the search completed
    int value() const { return upper; }
};

// Exact chromatic number within budget, else a flagged [lower,upper] bracket.
ChiResult chromatic_number(const Graph& g, Budget budget = Budget::unlimited());

// Convenience for instances known to be easy; throws if the search times out.
int chromatic_exact(const Graph& g, Budget budget = Budget::unlimited());

enum class SearchStatus { yes, no, timeout };
// Complete k-colourability test (colour-class branch and bound; a new class
// always opens with the lowest-indexed uncoloured vertex).
SearchStatus k_colorable(const Graph& g, int k, Budget budget = Budget::unlimited());
// As above but returns a colouring on success.
SearchStatus k_coloring(const Graph& g, int k, std::vector<int>& colors_out,
                        Budget budget = Budget::unlimited());

// max over v of chi(G[N^rho[v]]); 0 for the null graph.
ChiResult ball_chromatic(const Graph& g, int rho, Budget budget = Budget::unlimited());

// Ball of radius rho around v (closed: includes v).
VertexSet closed_ball(const Graph& g, int v, int rho);

struct Neighborhoods {
    VertexSet n1; // vertices outside X complete to X
    VertexSet n2; // vertices outside X with a neighbour in n1 and none in X
};
// N^1/N^2 of a clique X (throws std::invalid_argument if X is not a clique).
Neighborhoods neighborhoods(const Graph& g, const VertexSet& x);

} // namespace pervade

#endif
