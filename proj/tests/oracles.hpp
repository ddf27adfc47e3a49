#ifndef PERVADE_TEST_ORACLES_HPP
#define PERVADE_TEST_ORACLES_HPP

// Independent brute-force oracles. These deliberately avoid the library's
// solver code paths: plain nested loops over raw adjacency only.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "pervade/graph.hpp"

namespace oracles {

using pervade::Graph;

// minimum k admitting a proper colouring, by trying every assignment
inline bool brute_colorable(const Graph& g, int k) {
    std::vector<int> color(static_cast<std::size_t>(g.size()), -1);
    std::function<bool(int)> go = [&](int v) -> bool {
        if (v == g.size()) return true;
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (int u = 0; u < v; ++u)
                if (g.adjacent(u, v) && color[static_cast<std::size_t>(u)] == c) ok = false;
            if (!ok) continue;
            color[static_cast<std::size_t>(v)] = c;
            if (go(v + 1)) return true;
            color[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    return go(0);
}

inline int brute_chromatic(const Graph& g) {
    if (g.size() == 0) return 0;
    for (int k = 1;; ++k)
        if (brute_colorable(g, k)) return k;
}

// clique number by subset enumeration (n <= 20)
inline int brute_clique_number(const Graph& g) {
    int n = g.size();
    int best = 0;
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if (mask & (1UL << v)) s.push_back(v);
        bool clique = true;
        for (std::size_t i = 0; i < s.size() && clique; ++i)
            for (std::size_t j = i + 1; j < s.size() && clique; ++j)
                if (!g.adjacent(s[i], s[j])) clique = false;
        if (clique) best = std::max(best, static_cast<int>(s.size()));
    }
    return best;
}

// largest clique size among vertex triples and below (for triangle checks)
inline int brute_omega_upto3(const Graph& g) {
    int n = g.size();
    int best = n > 0 ? 1 : 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!g.adjacent(a, b)) continue;
            best = std::max(best, 2);
            for (int c = b + 1; c < n; ++c)
                if (g.adjacent(a, c) && g.adjacent(b, c)) best = std::max(best, 3);
        }
    return best;
}

// induced embedding existence over all injective maps
inline bool brute_find_induced(const Graph& pattern, const Graph& host) {
    std::vector<int> map(static_cast<std::size_t>(pattern.size()), -1);
    std::vector<bool> used(static_cast<std::size_t>(host.size()), false);
    std::function<bool(int)> go = [&](int u) -> bool {
        if (u == pattern.size()) return true;
        for (int v = 0; v < host.size(); ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            bool ok = true;
            for (int w = 0; w < u && ok; ++w)
                if (pattern.adjacent(w, u) != host.adjacent(map[static_cast<std::size_t>(w)], v))
                    ok = false;
            if (!ok) continue;
            map[static_cast<std::size_t>(u)] = v;
            used[static_cast<std::size_t>(v)] = true;
            if (go(u + 1)) return true;
            used[static_cast<std::size_t>(v)] = false;
        }
        return false;
    };
    return go(0);
}

// anticomplete path pair existence by enumerating connected vertex subsets
inline bool brute_anticomplete_paths(const Graph& g, int a, int b, int c, int d) {
    int n = g.size();
    auto connected_in = [&](unsigned mask, int s, int t) {
        if (!((mask >> s) & 1) || !((mask >> t) & 1)) return false;
        unsigned seen = 1u << s;
        bool grew = true;
        while (grew) {
            grew = false;
            for (int u = 0; u < n; ++u) {
                if (!((seen >> u) & 1)) continue;
                for (int v = 0; v < n; ++v)
                    if (((mask >> v) & 1) && !((seen >> v) & 1) && g.adjacent(u, v)) {
                        seen |= 1u << v;
                        grew = true;
                    }
            }
        }
        return ((seen >> t) & 1) != 0;
    };
    for (unsigned s = 0; s < (1u << n); ++s) {
        if (!connected_in(s, a, b)) continue;
        for (unsigned t = 0; t < (1u << n); ++t) {
            if (s & t) continue;
            if (!connected_in(t, c, d)) continue;
            bool anti = true;
            for (int u = 0; u < n && anti; ++u)
                for (int v = 0; v < n && anti; ++v)
                    if (((s >> u) & 1) && ((t >> v) & 1) && g.adjacent(u, v)) anti = false;
            if (anti) return true;
        }
    }
    return false;
}

} // namespace oracles

#endif
