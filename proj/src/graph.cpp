#include "pervade/graph.hpp"

#include <algorithm>
#include <deque>

namespace pervade {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loop " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::out_of_range("edge endpoint out of range");
    adj_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
    adj_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& r : adj_) twice += r.count();
    return twice / 2;
}

std::vector<int> Graph::neighbors(int v) const {
    return from_bits(adj_[static_cast<std::size_t>(v)]);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (std::size_t v = adj_[u].find_next(static_cast<std::size_t>(u)); v != Bits::npos;
             v = adj_[u].find_next(v))
            out.emplace_back(u, static_cast<int>(v));
    return out;
}

const std::string& Graph::label(int v) const {
    static const std::string empty;
    if (labels_.empty()) return empty;
    return labels_[static_cast<std::size_t>(v)];
}

void Graph::set_label(int v, std::string s) {
    if (labels_.empty()) labels_.resize(static_cast<std::size_t>(n_));
    labels_[static_cast<std::size_t>(v)] = std::move(s);
}

VertexSet normalized(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

bool valid_set(const Graph& g, const VertexSet& s) {
    return std::all_of(s.begin(), s.end(), [&](int v) { return v >= 0 && v < g.size(); });
}

Bits to_bits(int n, const VertexSet& s) {
    Bits b(static_cast<std::size_t>(n));
    for (int v : s) b.set(static_cast<std::size_t>(v));
    return b;
}

VertexSet from_bits(const Bits& b) {
    VertexSet out;
    for (std::size_t v = b.find_first(); v != Bits::npos; v = b.find_next(v))
        out.push_back(static_cast<int>(v));
    return out;
}

bool contains(const VertexSet& sorted_set, int v) {
    return std::binary_search(sorted_set.begin(), sorted_set.end(), v);
}

bool is_clique(const Graph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] == s[j] || !g.adjacent(s[i], s[j])) return false;
    return true;
}

bool is_stable(const Graph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] != s[j] && g.adjacent(s[i], s[j])) return false;
    return true;
}

std::optional<std::pair<int, int>> complete_violation(const Graph& g, const VertexSet& x,
                                                      const VertexSet& y) {
    for (int u : x)
        for (int v : y)
            if (u == v || !g.adjacent(u, v)) return std::make_pair(u, v);
    return std::nullopt;
}

std::optional<std::pair<int, int>> anticomplete_violation(const Graph& g, const VertexSet& x,
                                                          const VertexSet& y) {
    for (int u : x)
        for (int v : y)
            if (u == v || g.adjacent(u, v)) return std::make_pair(u, v);
    return std::nullopt;
}

std::optional<int> cover_violation(const Graph& g, const VertexSet& x, const VertexSet& y) {
    Bits xb = to_bits(g.size(), x);
    for (int v : y) {
        if (xb.test(static_cast<std::size_t>(v))) return v; // not disjoint
        if (!xb.intersects(g.row(v))) return v;             // no neighbour in X
    }
    return std::nullopt;
}

bool complete_sets(const Graph& g, const VertexSet& x, const VertexSet& y) {
    return !complete_violation(g, x, y).has_value();
}

bool anticomplete_sets(const Graph& g, const VertexSet& x, const VertexSet& y) {
    return !anticomplete_violation(g, x, y).has_value();
}

bool covers(const Graph& g, const VertexSet& x, const VertexSet& y) {
    return !cover_violation(g, x, y).has_value();
}

std::vector<int> bfs_distances(const Graph& g, int source, const Bits* within) {
    std::vector<int> dist(static_cast<std::size_t>(g.size()), kUnreachable);
    if (within && !within->test(static_cast<std::size_t>(source))) return dist;
    std::deque<int> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        const Bits& row = g.row(u);
        for (std::size_t v = row.find_first(); v != Bits::npos; v = row.find_next(v)) {
            if (within && !within->test(v)) continue;
            if (dist[v] == kUnreachable) {
                dist[v] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(static_cast<int>(v));
            }
        }
    }
    return dist;
}

int distance(const Graph& g, int u, int v) { return bfs_distances(g, u)[static_cast<std::size_t>(v)]; }

std::vector<VertexSet> components(const Graph& g) {
    Bits all(static_cast<std::size_t>(g.size()));
    all.set();
    return components_within(g, all);
}

std::vector<VertexSet> components_within(const Graph& g, const Bits& within) {
    std::vector<VertexSet> out;
    Bits seen = ~within; // treat outside vertices as already visited
    for (std::size_t s = within.find_first(); s != Bits::npos; s = within.find_next(s)) {
        if (seen.test(s)) continue;
        VertexSet comp;
        std::deque<int> queue{static_cast<int>(s)};
        seen.set(s);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            comp.push_back(u);
            Bits nb = g.row(u) & within & ~seen;
            for (std::size_t v = nb.find_first(); v != Bits::npos; v = nb.find_next(v)) {
                seen.set(v);
                queue.push_back(static_cast<int>(v));
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

InducedSubgraph induced(const Graph& g, const VertexSet& x) {
    VertexSet s = normalized(x);
    InducedSubgraph out;
    out.graph = Graph(static_cast<int>(s.size()));
    out.to_host = s;
    out.from_host.assign(static_cast<std::size_t>(g.size()), -1);
    for (std::size_t i = 0; i < s.size(); ++i) out.from_host[static_cast<std::size_t>(s[i])] = static_cast<int>(i);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) out.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
    Graph g(n);
    for (int u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph petersen_graph() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);         // outer C_5
        g.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
        g.add_edge(i, 5 + i);               // spokes
    }
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.size() + b.size());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.size() + u, a.size() + v);
    return g;
}

} // namespace pervade
