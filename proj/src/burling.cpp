#include "pervade/burling.hpp"

#include <deque>
#include <mutex>
#include <vector>

namespace pervade {

std::pair<Graph, VertexSet> compose(const Graph& a, const VertexSet& s_in) {
    VertexSet s = normalized(s_in);
    if (!valid_set(a, s)) throw std::out_of_range("S out of range");
    if (!is_stable(a, s)) throw NotStable();

    const int sz = static_cast<int>(s.size());
    const int rest = a.size() - sz;

    // rank of each vertex of A minus S within its copy
    std::vector<int> rank(static_cast<std::size_t>(a.size()), -1);
    {
        Bits sb = to_bits(a.size(), s);
        int r = 0;
        for (int v = 0; v < a.size(); ++v)
            if (!sb.test(static_cast<std::size_t>(v))) rank[static_cast<std::size_t>(v)] = r++;
    }
    auto copy_vertex = [&](int copy, int v) { return copy * rest + rank[static_cast<std::size_t>(v)]; };

    // N_j = neighbours of a_j in A, restricted to A minus S (vertices of S
    // have no copy and contribute no edges); 1-based like the construction
    std::vector<VertexSet> nbr(static_cast<std::size_t>(sz + 1));
    for (int j = 1; j <= sz; ++j)
        for (int u : a.neighbors(s[static_cast<std::size_t>(j - 1)]))
            if (rank[static_cast<std::size_t>(u)] >= 0) nbr[static_cast<std::size_t>(j)].push_back(u);

    const int base = (sz + 1) * rest;
    Graph g(base + 3 * sz * sz);

    // copies of A minus S
    std::vector<std::pair<int, int>> core_edges;
    for (auto [u, v] : a.edges())
        if (rank[static_cast<std::size_t>(u)] >= 0 && rank[static_cast<std::size_t>(v)] >= 0)
            core_edges.emplace_back(u, v);
    for (int copy = 0; copy <= sz; ++copy)
        for (auto [u, v] : core_edges) g.add_edge(copy_vertex(copy, u), copy_vertex(copy, v));

    VertexSet t;
    for (int i = 1; i <= sz; ++i) {
        for (int j = 1; j <= sz; ++j) {
            int slot = base + 3 * ((i - 1) * sz + (j - 1));
            int x = slot, y = slot + 1, z = slot + 2;
            for (int u : nbr[static_cast<std::size_t>(i)]) { // N_{0,i}
                g.add_edge(x, copy_vertex(0, u));
                g.add_edge(y, copy_vertex(0, u));
            }
            for (int u : nbr[static_cast<std::size_t>(j)]) { // N_{ij}
                g.add_edge(x, copy_vertex(i, u));
                g.add_edge(z, copy_vertex(i, u));
            }
            g.add_edge(y, z);
            t.push_back(x);
            t.push_back(y);
        }
    }
    return {std::move(g), normalized(std::move(t))};
}

const BurlingLevel& burling(int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (k > 5) throw LevelTooLarge(k);
    static std::mutex mutex;
    static std::deque<BurlingLevel> cache{BurlingLevel{complete_graph(2), {0}, 1}};
    std::lock_guard<std::mutex> lock(mutex);
    while (static_cast<int>(cache.size()) < k) {
        const BurlingLevel& prev = cache.back();
        auto [g, t] = compose(prev.g, prev.t_set);
        cache.push_back(BurlingLevel{std::move(g), std::move(t), prev.k + 1});
    }
    return cache[static_cast<std::size_t>(k - 1)];
}

BurlingAudit audit_burling(const BurlingLevel& level, Budget budget) {
    BurlingAudit out;
    out.k = level.k;
    out.n = level.g.size();
    out.m = level.g.edge_count();
    out.omega = clique_number(level.g);
    out.triangle_free = out.omega <= 2;
    out.chi = chromatic_number(level.g, budget);
    out.chi_meets_paper_bound = out.chi.lower >= level.k + 1;
    return out;
}

} // namespace pervade
