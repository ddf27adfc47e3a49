#ifndef PERVADE_GRAPH_HPP
#define PERVADE_GRAPH_HPP

#include <boost/dynamic_bitset.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pervade {

using Bits = boost::dynamic_bitset<>;

// Vertices of a specific host graph, kept sorted and duplicate-free.
using VertexSet = std::vector<int>;

// Finite simple graph on vertices 0..n-1. Symmetric, irreflexive adjacency,
// stored as one bitset row per vertex. Immutable once built (construction
// helpers mutate, everything else takes const&).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), Bits(static_cast<std::size_t>(n))) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int size() const { return n_; }
    std::size_t edge_count() const;

    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v)); }

    void add_edge(int u, int v);

    const Bits& row(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].count()); }

    std::vector<int> neighbors(int v) const;
    std::vector<std::pair<int, int>> edges() const; // sorted, u < v

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

    const std::string& label(int v) const;
    void set_label(int v, std::string s);
    bool has_labels() const { return !labels_.empty(); }

private:
    int n_ = 0;
    std::vector<Bits> adj_;
    std::vector<std::string> labels_;
};

// ---- vertex-set helpers ----

VertexSet normalized(VertexSet s);                    // sort + dedupe
bool valid_set(const Graph& g, const VertexSet& s);   // all members in range
Bits to_bits(int n, const VertexSet& s);
VertexSet from_bits(const Bits& b);
bool contains(const VertexSet& sorted_set, int v);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_stable(const Graph& g, const VertexSet& s);

// X and Y disjoint and every X-Y pair adjacent / nonadjacent.
bool complete_sets(const Graph& g, const VertexSet& x, const VertexSet& y);
bool anticomplete_sets(const Graph& g, const VertexSet& x, const VertexSet& y);
// X disjoint from Y and every vertex of Y has a neighbour in X.
bool covers(const Graph& g, const VertexSet& x, const VertexSet& y);

// first violating pair, if any, for the three relations above
std::optional<std::pair<int, int>> complete_violation(const Graph& g, const VertexSet& x, const VertexSet& y);
std::optional<std::pair<int, int>> anticomplete_violation(const Graph& g, const VertexSet& x, const VertexSet& y);
std::optional<int> cover_violation(const Graph& g, const VertexSet& x, const VertexSet& y);

// ---- traversal ----

constexpr int kUnreachable = -1;

// BFS distances from source; vertices outside `within` (when given) are ignored.
std::vector<int> bfs_distances(const Graph& g, int source, const Bits* within = nullptr);
int distance(const Graph& g, int u, int v);

std::vector<VertexSet> components(const Graph& g);
// components of the induced subgraph G[within], as vertex sets of g
std::vector<VertexSet> components_within(const Graph& g, const Bits& within);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_host;   // new index -> host vertex
    std::vector<int> from_host; // host vertex -> new index or -1
};
InducedSubgraph induced(const Graph& g, const VertexSet& x);

// ---- small utilities ----

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);
Graph petersen_graph();

Graph disjoint_union(const Graph& a, const Graph& b);

} // namespace pervade

#endif
