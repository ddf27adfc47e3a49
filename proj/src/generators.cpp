#include "pervade/generators.hpp"

#include <algorithm>
#include <map>

#include "pervade/rng.hpp"

namespace pervade {

RealizedSubdivision realize_subdivision(const SubdivisionModel& m) {
    auto edges = m.base.edges();
    if (edges.size() != m.lengths.size())
        throw std::invalid_argument("lengths must match base edge count");
    for (int len : m.lengths)
        if (len < 1) throw std::invalid_argument("path lengths must be >= 1");

    int total = m.base.size();
    for (int len : m.lengths) total += len - 1;

    RealizedSubdivision out;
    out.graph = Graph(total);
    out.branch.resize(static_cast<std::size_t>(m.base.size()));
    for (int v = 0; v < m.base.size(); ++v) out.branch[static_cast<std::size_t>(v)] = v;

    int next = m.base.size();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        std::vector<int> path{u};
        for (int i = 1; i < m.lengths[e]; ++i) path.push_back(next++);
        path.push_back(v);
        for (std::size_t i = 0; i + 1 < path.size(); ++i) out.graph.add_edge(path[i], path[i + 1]);
        out.paths.push_back(std::move(path));
    }
    return out;
}

bool is_tree(const Graph& g) {
    if (g.size() == 0) return false;
    return g.edge_count() == static_cast<std::size_t>(g.size() - 1) && components(g).size() == 1;
}

VertexSet tree_leaves(const Graph& g) {
    VertexSet leaves;
    for (int v = 0; v < g.size(); ++v)
        if (g.degree(v) == 1) leaves.push_back(v);
    if (g.size() == 1) leaves.push_back(0);
    return leaves;
}

PivotGraph chandelier(const ChandelierSpec& spec) {
    switch (spec.kind) {
    case ChandelierSpec::Kind::one_vertex:
        return {Graph(1), 0};
    case ChandelierSpec::Kind::two_vertex: {
        Graph g(2);
        g.add_edge(0, 1);
        return {g, spec.pivot == 1 ? 1 : 0};
    }
    case ChandelierSpec::Kind::tree:
        break;
    }
    if (!is_tree(spec.tree) || spec.tree.size() < 2)
        throw std::invalid_argument("chandelier spec needs a tree with >= 2 vertices");
    int pivot = spec.tree.size();
    Graph g(pivot + 1);
    for (auto [u, v] : spec.tree.edges()) g.add_edge(u, v);
    for (int leaf : tree_leaves(spec.tree)) g.add_edge(pivot, leaf);
    return {g, pivot};
}

Graph attach(const Graph& host, int at, const PivotGraph& piece) {
    if (at < 0 || at >= host.size()) throw std::out_of_range("attach point out of range");
    Graph g(host.size() + piece.graph.size() - 1);
    for (auto [u, v] : host.edges()) g.add_edge(u, v);
    // piece vertices except the pivot are appended, keeping relative order
    std::vector<int> map(static_cast<std::size_t>(piece.graph.size()));
    int next = host.size();
    for (int v = 0; v < piece.graph.size(); ++v)
        map[static_cast<std::size_t>(v)] = (v == piece.pivot) ? at : next++;
    for (auto [u, v] : piece.graph.edges())
        g.add_edge(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)]);
    return g;
}

ChandelierSpec subdivide_chandelier(const ChandelierSpec& spec, const std::vector<int>& lengths) {
    PivotGraph h = chandelier(spec);
    auto edges = h.graph.edges();
    if (edges.size() != lengths.size())
        throw std::invalid_argument("lengths must match chandelier edge count");
    if (spec.kind != ChandelierSpec::Kind::tree)
        throw std::invalid_argument("degenerate chandeliers have no edges to subdivide");

    int m = spec.tree.size();
    // new tree: subdivided old tree, plus a pendant path toward the pivot for
    // every leaf whose pivot edge got length >= 2
    std::vector<std::pair<int, int>> tree_edges;
    int next = m;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        int len = lengths[e];
        if (len < 1) throw std::invalid_argument("path lengths must be >= 1");
        if (u != h.pivot && v != h.pivot) { // tree edge: subdivide in place
            int prev = u;
            for (int i = 1; i < len; ++i) {
                tree_edges.emplace_back(prev, next);
                prev = next++;
            }
            tree_edges.emplace_back(prev, v);
        } else { // pivot edge: pendant path of len-1 vertices hanging from the leaf
            int leaf = (u == h.pivot) ? v : u;
            int prev = leaf;
            for (int i = 1; i < len; ++i) {
                tree_edges.emplace_back(prev, next);
                prev = next++;
            }
        }
    }
    ChandelierSpec out;
    out.kind = ChandelierSpec::Kind::tree;
    out.tree = Graph::from_edges(next, tree_edges);
    return out;
}

void validate_lamp_spec(const LampSpec& spec) {
    const Graph& t = spec.tree;
    if (!is_tree(t) || spec.root < 0 || spec.root >= t.size() ||
        spec.height.size() != static_cast<std::size_t>(t.size()))
        throw InvalidLampSpec("tree");
    for (int w : spec.height)
        if (w < 1) throw InvalidLampSpec("height-positive");
    for (int v = 0; v < t.size(); ++v) {
        if (v == spec.root) continue;
        int higher = 0;
        for (int u : t.neighbors(v))
            if (spec.height[static_cast<std::size_t>(u)] > spec.height[static_cast<std::size_t>(v)]) ++higher;
        if (higher != 1) throw InvalidLampSpec("unique-higher-neighbour");
    }
    if (std::find(spec.height.begin(), spec.height.end(), 1) == spec.height.end())
        throw InvalidLampSpec("some-height-one");
    std::map<int, int> count;
    for (int w : spec.height) ++count[w];
    for (auto [w, c] : count)
        if (c > 1 && w != 1) throw InvalidLampSpec("duplicates-only-at-one");

    int root_w = spec.height[static_cast<std::size_t>(spec.root)];
    VertexSet j = normalized(spec.j_set);
    if (j.size() != spec.j_set.size()) throw InvalidLampSpec("j-range");
    for (int x : j)
        if (x < 1 || x > root_w) throw InvalidLampSpec("j-range");
    // J meets the height values exactly in {1}
    if (j.empty() || j[0] != 1) throw InvalidLampSpec("j-meets-heights");
    for (int x : j)
        if (x != 1 && count.count(x)) throw InvalidLampSpec("j-meets-heights");
}

PivotGraph lamp(const LampSpec& spec) {
    validate_lamp_spec(spec);
    const Graph& t = spec.tree;
    int m = t.size();
    VertexSet j = normalized(spec.j_set);

    Graph g(m + static_cast<int>(j.size()));
    for (auto [u, v] : t.edges()) g.add_edge(u, v);
    for (std::size_t r = 0; r < j.size(); ++r) {
        int xj = m + static_cast<int>(r);
        if (m == 1) {
            g.add_edge(xj, spec.root);
            continue;
        }
        for (auto [a, b] : t.edges()) {
            int hi = a, lo = b;
            if (spec.height[static_cast<std::size_t>(lo)] > spec.height[static_cast<std::size_t>(hi)])
                std::swap(hi, lo);
            if (spec.height[static_cast<std::size_t>(lo)] <= j[r] &&
                j[r] < spec.height[static_cast<std::size_t>(hi)])
                g.add_edge(xj, lo);
        }
    }
    return {g, m}; // x_1 is the first added vertex
}

TreeOfLampsSpec spotlight() { return TreeOfLampsSpec{}; }

int tree_of_lamps_height(const TreeOfLampsSpec& spec) {
    if (spec.spotlight) return 0;
    int h = 0;
    for (const auto& c : spec.children) h = std::max(h, tree_of_lamps_height(c));
    return h + 1;
}

PivotGraph tree_of_lamps(const TreeOfLampsSpec& spec) {
    if (spec.spotlight) return {Graph(1), 0};

    PivotGraph base = lamp(spec.lamp);
    if (spec.children.size() != static_cast<std::size_t>(base.graph.size()))
        throw std::invalid_argument("one child per lamp vertex required");
    for (int v = 0; v < base.graph.size(); ++v) {
        bool near_plug = (v == base.pivot) || base.graph.adjacent(v, base.pivot);
        if (near_plug && !spec.children[static_cast<std::size_t>(v)].spotlight)
            throw SpotlightViolation(v);
    }

    std::vector<PivotGraph> kids;
    kids.reserve(spec.children.size());
    int total = base.graph.size();
    for (const auto& c : spec.children) {
        kids.push_back(tree_of_lamps(c));
        total += kids.back().graph.size() - 1;
    }

    Graph g(total);
    for (auto [u, v] : base.graph.edges()) g.add_edge(u, v);
    int next = base.graph.size();
    for (int v = 0; v < base.graph.size(); ++v) {
        const PivotGraph& kid = kids[static_cast<std::size_t>(v)];
        std::vector<int> map(static_cast<std::size_t>(kid.graph.size()));
        for (int u = 0; u < kid.graph.size(); ++u)
            map[static_cast<std::size_t>(u)] = (u == kid.pivot) ? v : next++;
        for (auto [a, b] : kid.graph.edges())
            g.add_edge(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]);
    }
    return {g, base.pivot};
}

Graph forest_of_lamps(const std::vector<TreeOfLampsSpec>& specs) {
    Graph g(0);
    for (const auto& s : specs) g = disjoint_union(g, tree_of_lamps(s).graph);
    return g;
}

Graph mycielski(const Graph& g) {
    int n = g.size();
    Graph out(2 * n + 1);
    for (auto [u, v] : g.edges()) {
        out.add_edge(u, v);
        out.add_edge(n + u, v);
        out.add_edge(u, n + v);
    }
    for (int i = 0; i < n; ++i) out.add_edge(2 * n, n + i);
    return out;
}

Graph mycielski_iterate(int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (k == 1) return Graph(1);
    Graph g = complete_graph(2);
    for (int i = 2; i < k; ++i) g = mycielski(g);
    return g;
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
    Rng rng(seed);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_bool(p)) g.add_edge(u, v);
    return g;
}

Graph random_connected(int n, double p, std::uint64_t seed) {
    Rng rng(seed);
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, rng.next_int(0, v - 1));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_bool(p) && !g.adjacent(u, v)) g.add_edge(u, v);
    return g;
}

} // namespace pervade
