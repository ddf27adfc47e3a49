#include <doctest.h>

#include "oracles.hpp"
#include "pervade/burling.hpp"
#include "pervade/containment.hpp"
#include "pervade/generators.hpp"
#include "pervade/rng.hpp"

using namespace pervade;

TEST_CASE("find_induced examples") {
    FindResult r = find_induced(cycle_graph(5), petersen_graph());
    CHECK(r.status == FindStatus::found);
    CHECK(verify_induced_embedding(cycle_graph(5), petersen_graph(), r.embedding.map));

    CHECK(find_induced(complete_graph(3), burling(3).g).status == FindStatus::not_found);
    CHECK(find_induced(cycle_graph(4), cycle_graph(5)).status == FindStatus::not_found);
    CHECK(find_induced(Graph(0), cycle_graph(5)).status == FindStatus::found);
    CHECK(find_induced(complete_graph(4), complete_graph(3)).status == FindStatus::not_found);
}

TEST_CASE("find_induced agrees with brute force on seeded pairs") {
    Rng rng(1234);
    for (int trial = 0; trial < 100; ++trial) {
        Graph pattern = random_gnp(rng.next_int(1, 4), 0.5, rng.next_u64());
        Graph host = random_gnp(rng.next_int(1, 10), 0.35, rng.next_u64());
        bool fast = find_induced(pattern, host).status == FindStatus::found;
        bool slow = oracles::brute_find_induced(pattern, host);
        CAPTURE(trial);
        CHECK(fast == slow);
    }
}

TEST_CASE("find_induced_subdivision examples") {
    // C_9 is the 2-subdivision of K_3
    SubdivisionSearchResult r = find_induced_subdivision(complete_graph(3), cycle_graph(9),
                                                         SubdivisionConstraint::exactly(2), 9);
    CHECK(r.status == SubdivisionStatus::found);
    CHECK(r.model.lengths == std::vector<int>{3, 3, 3});

    // C_8 is the 1-subdivision of K_{2,2}
    r = find_induced_subdivision(complete_bipartite(2, 2), cycle_graph(8),
                                 SubdivisionConstraint::exactly(1), 8);
    CHECK(r.status == SubdivisionStatus::found);

    // no (>=2)-subdivision of K_3 inside C_8 (needs a cycle of length >= 9)
    r = find_induced_subdivision(complete_graph(3), cycle_graph(8),
                                 SubdivisionConstraint::at_least(2), 12);
    CHECK(r.status == SubdivisionStatus::not_found_within_cap);

    // found models re-verify: realization embeds induced and respects lengths
    r = find_induced_subdivision(complete_bipartite(2, 2), cycle_graph(8),
                                 SubdivisionConstraint::at_least(1), 8);
    REQUIRE(r.status == SubdivisionStatus::found);
    for (int len : r.model.lengths) CHECK(len >= 2);
    RealizedSubdivision real = realize_subdivision(r.model);
    CHECK(verify_induced_embedding(real.graph, cycle_graph(8), r.embedding.map));

    CHECK_THROWS_AS(find_induced_subdivision(complete_graph(3), cycle_graph(9),
                                             SubdivisionConstraint::exactly(2), 2),
                    std::invalid_argument);
}

TEST_CASE("impression checker") {
    Graph c5 = cycle_graph(5);
    Impression identity;
    identity.vertex_map = {0, 1, 2, 3, 4};
    for (auto [u, v] : c5.edges()) identity.paths.push_back({u, v});
    ImpressionReport rep = check_impression(identity, c5, c5);
    CHECK(rep.ok);
    CHECK(rep.order == 1);

    // K_{2,2} impressed in C_8 through distinct middle vertices
    Graph c8 = cycle_graph(8);
    Graph k22 = complete_bipartite(2, 2);
    Impression imp;
    imp.vertex_map = {0, 4, 2, 6}; // parts {0,1} and {2,3} of K_{2,2}
    imp.paths = {{0, 1, 2}, {0, 7, 6}, {4, 3, 2}, {4, 5, 6}};
    rep = check_impression(imp, c8, k22);
    CHECK(rep.ok);
    CHECK(rep.order == 2);

    // opposite-edge paths sharing a vertex
    Impression shared = imp;
    shared.paths[3] = {4, 3, 2, 1, 0, 7, 6}; // now meets path 0 of the disjoint edge (0,2)
    rep = check_impression(shared, c8, k22);
    CHECK(!rep.ok);
    CHECK(rep.clause == "anticomplete");

    // adjacent vertex images
    Impression touching = imp;
    touching.vertex_map = {0, 4, 1, 6};
    rep = check_impression(touching, c8, k22);
    CHECK(!rep.ok);
    CHECK(rep.clause == "vertex-images-stable");

    // strict mode rejects non-induced paths
    Graph host = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}});
    Graph k2 = complete_graph(2);
    Impression lazy;
    lazy.vertex_map = {0, 3};
    lazy.paths = {{0, 1, 2, 3}}; // chord 0-2 present
    CHECK(check_impression(lazy, host, k2).ok);
    rep = check_impression(lazy, host, k2, true);
    CHECK(!rep.ok);
    CHECK(rep.clause == "edge-path-induced");
}

TEST_CASE("restricted_check examples") {
    // C_8 is a proper 1-subdivision of K_{2,2}
    RestrictedReport r = restricted_check(cycle_graph(8), 2, 2, 2, 12);
    CHECK(r.status == RestrictedStatus::subdivision_witness);

    // triangles break the clique bound
    r = restricted_check(complete_graph(3), 2, 2, 2, 12);
    CHECK(r.status == RestrictedStatus::clique_witness);
    CHECK(r.omega == 3);

    // C_7 carries no proper (<=2)-subdivision of K_{2,2}
    r = restricted_check(cycle_graph(7), 2, 2, 2, 12);
    CHECK(r.status == RestrictedStatus::restricted_within_cap);
}

TEST_CASE("anticomplete path pairs") {
    Graph two_edges = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK(anticomplete_paths_exist(two_edges, 0, 1, 2, 3) == PathsStatus::yes);

    // path a-c-b-d: every a..b path hits c or b
    Graph p4 = path_graph(4); // 0-1-2-3 with a=0, c=1, b=2, d=3
    CHECK(anticomplete_paths_exist(p4, 0, 2, 1, 3) == PathsStatus::no);

    // C_6 with terminals alternating
    CHECK(anticomplete_paths_exist(cycle_graph(6), 0, 2, 1, 3) == PathsStatus::no);

    CHECK_THROWS_AS(anticomplete_paths_exist(p4, 0, 0, 1, 2), std::invalid_argument);
}

TEST_CASE("anticomplete path pairs agree with the subset oracle") {
    Rng rng(777);
    for (int trial = 0; trial < 60; ++trial) {
        int n = rng.next_int(4, 8);
        Graph g = random_gnp(n, 0.25 + 0.05 * static_cast<double>(trial % 6), rng.next_u64());
        int a = 0, b = 1, c = 2, d = 3;
        bool fast = anticomplete_paths_exist(g, a, b, c, d) == PathsStatus::yes;
        bool slow = oracles::brute_anticomplete_paths(g, a, b, c, d);
        CAPTURE(trial);
        CHECK(fast == slow);
    }
}
