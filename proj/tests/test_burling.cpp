#include <doctest.h>

#include <functional>

#include "oracles.hpp"
#include "pervade/burling.hpp"
#include "pervade/containment.hpp"

using namespace pervade;

TEST_CASE("composing (K_2, one vertex) gives C_5 with |T| = 2") {
    auto [g, t] = compose(complete_graph(2), {1});
    CHECK(g.size() == 5);
    CHECK(is_isomorphic(g, cycle_graph(5)));
    CHECK(t.size() == 2);
    CHECK(is_stable(g, t));
}

TEST_CASE("compose rejects non-stable sets and counts vertices") {
    CHECK_THROWS_AS(compose(complete_graph(3), {0, 1}), NotStable);

    // |G| = (s+1)(|A|-s) + 3s^2 on seeded instances
    Graph a = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {1, 4}});
    VertexSet s{0, 2, 4};
    REQUIRE(is_stable(a, s));
    auto [g, t] = compose(a, s);
    CHECK(g.size() == 4 * 3 + 27);
    CHECK(static_cast<int>(t.size()) == 2 * 3 * 3);
    CHECK(is_stable(g, t));
}

TEST_CASE("burling levels match the recurrence") {
    CHECK(burling(1).g == complete_graph(2));
    CHECK(burling(1).t_set.size() == 1);
    CHECK(is_isomorphic(burling(2).g, cycle_graph(5)));
    CHECK(burling(2).t_set.size() == 2);
    CHECK(burling(3).g.size() == 21);
    CHECK(burling(3).t_set.size() == 8);
    CHECK(burling(4).g.size() == 309);
    CHECK(burling(4).t_set.size() == 128);
    CHECK_THROWS_AS(burling(6), LevelTooLarge);

    // deterministic: byte-for-byte identical adjacency
    auto [g1, t1] = compose(burling(3).g, burling(3).t_set);
    auto [g2, t2] = compose(burling(3).g, burling(3).t_set);
    CHECK(g1 == g2);
    CHECK(t1 == t2);

    // T_k stable at every level
    for (int k = 1; k <= 4; ++k) CHECK(is_stable(burling(k).g, burling(k).t_set));
}

TEST_CASE("burling audit") {
    BurlingAudit a2 = audit_burling(burling(2));
    CHECK(a2.omega == 2);
    CHECK(a2.triangle_free);
    CHECK(a2.chi.exact);
    CHECK(a2.chi.value() == 3);
    CHECK(a2.chi_meets_paper_bound);

    BurlingAudit a3 = audit_burling(burling(3));
    CHECK(a3.omega == 2);
    CHECK(a3.chi.lower >= 4);
}

TEST_CASE("every proper coloring leaves a T-vertex with rainbow neighbours") {
    // exhaustive at level 2: all proper colourings with up to 5 colours
    const BurlingLevel& l2 = burling(2);
    const Graph& g = l2.g;
    std::vector<int> color(5, 0);
    int checked = 0;
    std::function<void(int)> enumerate = [&](int v) {
        if (v == 5) {
            ++checked;
            bool witness = false;
            for (int t : l2.t_set) {
                std::set<int> seen;
                for (int u : g.neighbors(t)) seen.insert(color[static_cast<std::size_t>(u)]);
                if (seen.size() >= 2) witness = true;
            }
            CHECK(witness);
            return;
        }
        for (int c = 0; c < 5; ++c) {
            bool ok = true;
            for (int u = 0; u < v; ++u)
                if (g.adjacent(u, v) && color[static_cast<std::size_t>(u)] == c) ok = false;
            if (!ok) continue;
            color[static_cast<std::size_t>(v)] = c;
            enumerate(v + 1);
        }
    };
    enumerate(0);
    CHECK(checked > 0);

    // spot check at level 3 on solver-produced colourings
    const BurlingLevel& l3 = burling(3);
    for (int k = 4; k <= 6; ++k) {
        std::vector<int> colors;
        REQUIRE(k_coloring(l3.g, k, colors) == SearchStatus::yes);
        bool witness = false;
        for (int t : l3.t_set) {
            std::set<int> seen;
            for (int u : l3.g.neighbors(t)) seen.insert(colors[static_cast<std::size_t>(u)]);
            if (static_cast<int>(seen.size()) >= 3) witness = true;
        }
        CHECK(witness);
    }
}

TEST_CASE("triangle-free pattern search agrees with the construction") {
    CHECK(find_induced(complete_graph(3), burling(3).g).status == FindStatus::not_found);
}
