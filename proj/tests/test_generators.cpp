#include <doctest.h>

#include "oracles.hpp"
#include "pervade/containment.hpp"
#include "pervade/generators.hpp"
#include "pervade/rng.hpp"

using namespace pervade;

namespace {

ChandelierSpec tree_spec(const Graph& t) {
    ChandelierSpec spec;
    spec.kind = ChandelierSpec::Kind::tree;
    spec.tree = t;
    return spec;
}

// height function making the lamp on J = {1} coincide with the chandelier:
// leaves at 1, internal vertices distinct and decreasing away from the root
LampSpec chandelier_as_lamp(const Graph& tree) {
    LampSpec spec;
    spec.tree = tree;
    int root = -1;
    for (int v = 0; v < tree.size() && root < 0; ++v)
        if (tree.degree(v) >= 2) root = v;
    REQUIRE(root >= 0);
    spec.root = root;
    std::vector<int> dist = bfs_distances(tree, root);
    std::vector<int> internal;
    for (int v = 0; v < tree.size(); ++v)
        if (tree.degree(v) >= 2) internal.push_back(v);
    std::stable_sort(internal.begin(), internal.end(),
                     [&](int a, int b) { return dist[static_cast<std::size_t>(a)] > dist[static_cast<std::size_t>(b)]; });
    spec.height.assign(static_cast<std::size_t>(tree.size()), 1);
    int next = 2;
    for (int v : internal) spec.height[static_cast<std::size_t>(v)] = next++;
    spec.j_set = {1};
    return spec;
}

} // namespace

TEST_CASE("realize_subdivision examples") {
    Graph k22 = complete_bipartite(2, 2);

    // identity case: all lengths 1
    RealizedSubdivision same = realize_subdivision({k22, {1, 1, 1, 1}});
    CHECK(same.graph == k22);

    // 1-subdivision of K_{2,2} is C_8
    RealizedSubdivision c8 = realize_subdivision({k22, {2, 2, 2, 2}});
    CHECK(c8.graph.size() == 8);
    CHECK(is_isomorphic(c8.graph, cycle_graph(8)));

    // 2-subdivision of K_3 is C_9
    RealizedSubdivision c9 = realize_subdivision({complete_graph(3), {3, 3, 3}});
    CHECK(is_isomorphic(c9.graph, cycle_graph(9)));

    // count invariants over seeded models
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Graph base = random_connected(rng.next_int(2, 6), 0.3, rng.next_u64());
        std::vector<int> lengths;
        int total_len = 0;
        for (std::size_t e = 0; e < base.edges().size(); ++e) {
            lengths.push_back(rng.next_int(1, 4));
            total_len += lengths.back();
        }
        RealizedSubdivision r = realize_subdivision({base, lengths});
        int expect_n = base.size();
        for (int len : lengths) expect_n += len - 1;
        CHECK(r.graph.size() == expect_n);
        CHECK(static_cast<int>(r.graph.edge_count()) == total_len);
    }
}

TEST_CASE("chandelier examples") {
    // two-vertex tree: pivot adjacent to both leaves gives a triangle
    PivotGraph tri = chandelier(tree_spec(complete_graph(2)));
    CHECK(is_isomorphic(tri.graph, complete_graph(3)));

    // path on 3 vertices: C_4
    PivotGraph c4 = chandelier(tree_spec(path_graph(3)));
    CHECK(is_isomorphic(c4.graph, cycle_graph(4)));

    // star K_{1,3}: K_{2,3}
    PivotGraph k23 = chandelier(tree_spec(complete_bipartite(1, 3)));
    CHECK(is_isomorphic(k23.graph, complete_bipartite(2, 3)));

    // degenerate chandeliers
    CHECK(chandelier({ChandelierSpec::Kind::one_vertex, {}, 0}).graph.size() == 1);
    CHECK(chandelier({ChandelierSpec::Kind::two_vertex, {}, 1}).pivot == 1);
}

TEST_CASE("attach examples") {
    PivotGraph tri = chandelier(tree_spec(complete_graph(2)));

    Graph host1 = attach(Graph(1), 0, tri);
    CHECK(is_isomorphic(host1, complete_graph(3)));

    Graph bowtie = attach(complete_graph(3), 1, tri);
    CHECK(bowtie.size() == 5);
    CHECK(bowtie.edge_count() == 6);
    CHECK(oracles::brute_clique_number(bowtie) == 3);

    // attaching spotlights changes nothing
    Graph host = cycle_graph(5);
    for (int v = 0; v < 5; ++v) host = attach(host, v, PivotGraph{Graph(1), 0});
    CHECK(host == cycle_graph(5));
}

TEST_CASE("lamp construction and validation") {
    // single-vertex tree: K_2 with the plug adjacent to the root
    LampSpec single;
    single.tree = Graph(1);
    single.root = 0;
    single.height = {1};
    single.j_set = {1};
    PivotGraph k2 = lamp(single);
    CHECK(k2.graph.size() == 2);
    CHECK(k2.graph.adjacent(0, 1));
    CHECK(k2.pivot == 1);

    // star with center root at height 4, J = {1}: K_{2,3}
    LampSpec star;
    star.tree = complete_bipartite(1, 3);
    star.root = 0;
    star.height = {4, 1, 1, 1};
    star.j_set = {1};
    CHECK(is_isomorphic(lamp(star).graph, complete_bipartite(2, 3)));

    // duplicate height above 1 is rejected with the right clause
    LampSpec bad = star;
    bad.tree = path_graph(4);
    bad.root = 0;
    bad.height = {4, 3, 3, 1};
    try {
        lamp(bad);
        FAIL("expected InvalidLampSpec");
    } catch (const InvalidLampSpec& e) {
        CHECK(e.clause == "duplicates-only-at-one");
    }

    LampSpec bad_j = star;
    bad_j.j_set = {1, 9}; // above the root height
    CHECK_THROWS_AS(lamp(bad_j), InvalidLampSpec);
    bad_j.j_set = {1, 4}; // meets a height value above 1
    CHECK_THROWS_AS(lamp(bad_j), InvalidLampSpec);
    bad_j.j_set = {2}; // misses 1
    CHECK_THROWS_AS(lamp(bad_j), InvalidLampSpec);

    LampSpec no_unique = star;
    no_unique.tree = path_graph(3);
    no_unique.root = 0;
    no_unique.height = {3, 1, 2}; // middle vertex has two higher neighbours... none higher? root side
    // heights 3,1,2: vertex 1 has neighbours 0 (3) and 2 (2), both higher: not unique
    no_unique.j_set = {1};
    try {
        lamp(no_unique);
        FAIL("expected InvalidLampSpec");
    } catch (const InvalidLampSpec& e) {
        CHECK(e.clause == "unique-higher-neighbour");
    }

    // multi-apex lamp: path root(7)-mid(4)-leaf(1), J = {1,2,5}
    LampSpec multi;
    multi.tree = path_graph(3);
    multi.root = 0;
    multi.height = {7, 4, 1};
    multi.j_set = {1, 2, 5};
    PivotGraph l = lamp(multi);
    CHECK(l.graph.size() == 6);
    CHECK(l.pivot == 3); // x_1 right after the tree vertices
    // x_1, x_2 cut the edge mid-leaf; x_5 cuts root-mid
    CHECK(l.graph.adjacent(3, 2));
    CHECK(l.graph.adjacent(4, 2));
    CHECK(l.graph.adjacent(5, 1));
    CHECK(!l.graph.adjacent(3, 1));
    CHECK(!l.graph.adjacent(5, 2));
    CHECK(!l.graph.adjacent(3, 4));
}

TEST_CASE("trees of lamps") {
    CHECK(tree_of_lamps(spotlight()).graph.size() == 1);

    LampSpec single;
    single.tree = Graph(1);
    single.root = 0;
    single.height = {1};
    single.j_set = {1};

    // a lamp with all children spotlights is the lamp itself
    TreeOfLampsSpec plain;
    plain.spotlight = false;
    plain.lamp = single;
    plain.children = {spotlight(), spotlight()};
    PivotGraph t = tree_of_lamps(plain);
    CHECK(t.graph.size() == 2);
    CHECK(t.pivot == 1);

    // in the K_2 lamp every vertex is on or adjacent to the plug, so no
    // non-spotlight child is admissible anywhere
    TreeOfLampsSpec nested = plain;
    nested.children[0] = plain;
    CHECK_THROWS_AS(tree_of_lamps(nested), SpotlightViolation);
    nested = plain;
    nested.children[1] = plain;
    CHECK_THROWS_AS(tree_of_lamps(nested), SpotlightViolation);

    // P_3 lamp (root(2)-leaf(1) tree plus x_1): the far end may host a child
    LampSpec p2;
    p2.tree = path_graph(2);
    p2.root = 0;
    p2.height = {2, 1};
    p2.j_set = {1};
    PivotGraph p3 = lamp(p2);
    CHECK(p3.graph.size() == 3);
    CHECK(p3.pivot == 2);
    CHECK(!p3.graph.adjacent(0, 2)); // root is not adjacent to the plug

    TreeOfLampsSpec deep;
    deep.spotlight = false;
    deep.lamp = p2;
    deep.children = {plain, spotlight(), spotlight()}; // K_2-lamp child at the root
    PivotGraph q = tree_of_lamps(deep);
    CHECK(q.graph.size() == 4);
    CHECK(is_isomorphic(q.graph, path_graph(4)));
    CHECK(tree_of_lamps_height(deep) == 2);

    Graph forest = forest_of_lamps({plain, deep, spotlight()});
    CHECK(forest.size() == 2 + 4 + 1);
    CHECK(components(forest).size() == 3);
}

TEST_CASE("corpus generators") {
    CHECK(is_isomorphic(mycielski_iterate(3), cycle_graph(5)));
    Graph grotzsch = mycielski_iterate(4);
    CHECK(grotzsch.size() == 11);
    CHECK(oracles::brute_omega_upto3(grotzsch) == 2);
    CHECK(oracles::brute_chromatic(grotzsch) == 4);
    CHECK(cycle_graph(8).edge_count() == 8);

    Graph g1 = random_gnp(20, 0.3, 42), g2 = random_gnp(20, 0.3, 42);
    CHECK(g1 == g2); // deterministic for a fixed seed
    CHECK(!(g1 == random_gnp(20, 0.3, 43)));
    CHECK(components(random_connected(25, 0.05, 7)).size() == 1);
}

TEST_CASE("subdivided chandeliers rebuild as chandelier specs") {
    // single block: star chandelier, mixed lengths
    ChandelierSpec star = tree_spec(complete_bipartite(1, 3));
    PivotGraph h = chandelier(star);
    std::vector<int> lengths{2, 1, 3, 1, 2, 2};
    REQUIRE(h.graph.edges().size() == lengths.size());
    Graph direct = realize_subdivision({h.graph, lengths}).graph;
    Graph rebuilt = chandelier(subdivide_chandelier(star, lengths)).graph;
    CHECK(is_isomorphic(direct, rebuilt));

    // two blocks attached at a vertex, uniform length 2
    ChandelierSpec p3 = tree_spec(path_graph(3));
    ChandelierSpec tri = tree_spec(complete_graph(2));
    Graph whole = attach(chandelier(p3).graph, 0, chandelier(tri));
    std::vector<int> uniform(whole.edges().size(), 2);
    Graph direct2 = realize_subdivision({whole, uniform}).graph;
    std::vector<int> host_lengths(chandelier(p3).graph.edges().size(), 2);
    std::vector<int> piece_lengths(chandelier(tri).graph.edges().size(), 2);
    Graph rebuilt2 = attach(chandelier(subdivide_chandelier(p3, host_lengths)).graph, 0,
                            chandelier(subdivide_chandelier(tri, piece_lengths)));
    CHECK(is_isomorphic(direct2, rebuilt2));
}

TEST_CASE("every chandelier on a tree with an internal vertex is a lamp") {
    // all trees on 3..7 vertices, generated as random spanning trees (deduped
    // by isomorphism among a seeded sample)
    Rng rng(5);
    int tested = 0;
    for (int n = 3; n <= 7; ++n) {
        for (int trial = 0; trial < 8; ++trial) {
            Graph tree(n);
            for (int v = 1; v < n; ++v) tree.add_edge(v, rng.next_int(0, v - 1));
            PivotGraph ch = chandelier(tree_spec(tree));
            PivotGraph lp = lamp(chandelier_as_lamp(tree));
            CAPTURE(n);
            CHECK(is_isomorphic(ch.graph, lp.graph));
            ++tested;
        }
    }
    CHECK(tested == 40);

    // the two-vertex tree is the genuine exception: its chandelier is the
    // triangle, and no lamp contains a triangle
    PivotGraph tri = chandelier(tree_spec(complete_graph(2)));
    CHECK(oracles::brute_clique_number(tri.graph) == 3);

    // degenerate chandelier K_2 = lamp on the one-vertex tree
    LampSpec single;
    single.tree = Graph(1);
    single.root = 0;
    single.height = {1};
    single.j_set = {1};
    CHECK(is_isomorphic(chandelier({ChandelierSpec::Kind::two_vertex, {}, 0}).graph,
                        lamp(single).graph));
}
