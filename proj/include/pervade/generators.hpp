#ifndef PERVADE_GENERATORS_HPP
#define PERVADE_GENERATORS_HPP

#include <cstdint>
#include <string>

#include "pervade/graph.hpp"

namespace pervade {

// ---- subdivisions ----

// Base graph plus, for each edge (in sorted edge order), the number of edges
// of the replacement path. Length 1 keeps the edge, ell-subdivision = ell+1.
struct SubdivisionModel {
    Graph base;
    std::vector<int> lengths;
};

struct RealizedSubdivision {
    Graph graph;
    std::vector<int> branch;             // base vertex -> realized vertex (identity)
    std::vector<std::vector<int>> paths; // per base edge, full replacement path u..v
};

// Branch vertices keep their indices; path interiors are appended per edge in
// sorted edge order, oriented from the smaller endpoint.
RealizedSubdivision realize_subdivision(const SubdivisionModel& m);

// ---- chandeliers ----

struct ChandelierSpec {
    enum class Kind { one_vertex, two_vertex, tree } kind = Kind::tree;
    Graph tree;    // kind == tree: a tree with >= 2 vertices
    int pivot = 0; // degenerate kinds: which existing vertex is the pivot
};

struct PivotGraph {
    Graph graph;
    int pivot;
};

// Tree plus a new vertex adjacent to exactly the leaves (the pivot).
// The 1- and 2-vertex complete graphs are accepted as degenerate chandeliers.
PivotGraph chandelier(const ChandelierSpec& spec);

// Disjoint union with the piece's pivot identified onto `at`.
Graph attach(const Graph& host, int at, const PivotGraph& piece);

// Rebuild a chandelier spec whose realization is the given subdivision of the
// chandelier graph (lengths parallel to chandelier(spec).graph.edges()).
ChandelierSpec subdivide_chandelier(const ChandelierSpec& spec, const std::vector<int>& lengths);

// ---- lamps ----

struct LampSpec {
    Graph tree;
    int root = 0;
    std::vector<int> height; // per tree vertex, positive
    std::vector<int> j_set;  // each in [1, height[root]], meets height values only at 1
};

struct InvalidLampSpec : std::invalid_argument {
    explicit InvalidLampSpec(const std::string& clause)
        : std::invalid_argument("invalid lamp spec: " + clause), clause(clause) {}
    std::string clause;
};

// Throws InvalidLampSpec naming the violated clause:
//   "tree", "height-positive", "unique-higher-neighbour", "some-height-one",
//   "duplicates-only-at-one", "j-range", "j-meets-heights".
void validate_lamp_spec(const LampSpec& spec);

// Tree vertices keep their indices, then one x_j per j in ascending order;
// x_j is adjacent to v for every tree edge uv with w(v) <= j < w(u).
// The plug is x_1.
PivotGraph lamp(const LampSpec& spec);

// ---- trees of lamps ----

struct TreeOfLampsSpec {
    bool spotlight = true;
    LampSpec lamp;                          // when !spotlight
    std::vector<TreeOfLampsSpec> children;  // per realized-lamp vertex, when !spotlight
};

struct SpotlightViolation : std::invalid_argument {
    explicit SpotlightViolation(int vertex)
        : std::invalid_argument("non-spotlight child at vertex " + std::to_string(vertex) +
                                " on or adjacent to the plug"),
          vertex(vertex) {}
    int vertex;
};

TreeOfLampsSpec spotlight();
int tree_of_lamps_height(const TreeOfLampsSpec& spec);

// Recursive plug identification; children on or adjacent to the plug must be
// spotlights (SpotlightViolation otherwise). Plug of the outer lamp reported.
PivotGraph tree_of_lamps(const TreeOfLampsSpec& spec);
Graph forest_of_lamps(const std::vector<TreeOfLampsSpec>& specs);

// ---- test corpus ----

Graph mycielski(const Graph& g);
// (k-2)-fold Mycielski construction applied to K_2: triangle-free, chi = k.
Graph mycielski_iterate(int k);
Graph random_gnp(int n, double p, std::uint64_t seed);
// random spanning tree plus G(n,p) edges: connected, seeded
Graph random_connected(int n, double p, std::uint64_t seed);

bool is_tree(const Graph& g);
VertexSet tree_leaves(const Graph& g);

} // namespace pervade

#endif
