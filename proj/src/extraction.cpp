#include "pervade/extraction.hpp"

#include <algorithm>

#include "pervade/rng.hpp"

namespace pervade {

Levelling bfs_levelling(const Graph& g, int v) {
    if (v < 0 || v >= g.size()) throw std::out_of_range("vertex out of range");
    std::vector<int> dist = bfs_distances(g, v);
    int ecc = 0;
    for (int d : dist) ecc = std::max(ecc, d);
    Levelling lev;
    lev.levels.assign(static_cast<std::size_t>(ecc + 1), {});
    for (int u = 0; u < g.size(); ++u)
        if (dist[static_cast<std::size_t>(u)] != kUnreachable)
            lev.levels[static_cast<std::size_t>(dist[static_cast<std::size_t>(u)])].push_back(u);
    return lev;
}

namespace {

// chi estimate of an induced subgraph; nullopt when an exact request times out
std::optional<int> estimate_chi(const Graph& g, const VertexSet& set, ChiEstimator est,
                                Budget budget) {
    Graph sub = induced(g, set).graph;
    bool exact = est == ChiEstimator::exact ||
                 (est == ChiEstimator::automatic && sub.size() <= 60);
    if (exact) {
        ChiResult r = chromatic_number(sub, budget);
        if (!r.exact) return std::nullopt;
        return r.value();
    }
    int colors = 0;
    for (int c : dsatur_coloring(sub)) colors = std::max(colors, c + 1);
    return colors;
}

} // namespace

LayerChain build_layer_chain(const Graph& g, int t, ChiEstimator estimator, std::uint64_t seed,
                             Budget budget) {
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    LayerChain chain;
    if (g.size() == 0) {
        chain.stalled = true;
        chain.stall_reason = "empty graph";
        return chain;
    }

    Rng rng(seed);

    // start from the component with the largest estimate
    VertexSet best_comp;
    int best_chi = -1;
    for (const VertexSet& comp : components(g)) {
        auto chi = estimate_chi(g, comp, estimator, budget);
        if (!chi) {
            chain.stalled = true;
            chain.stall_reason = "estimator timeout";
            return chain;
        }
        if (*chi > best_chi) {
            best_chi = *chi;
            best_comp = comp;
        }
    }
    chain.sets.push_back(best_comp);
    chain.chi_estimates.push_back(best_chi);

    for (int step = 1; step <= t; ++step) {
        const VertexSet& current = chain.sets.back();
        Bits within = to_bits(g.size(), current);
        int center = (seed == 0) ? current.front()
                                 : current[static_cast<std::size_t>(rng.next_below(current.size()))];

        std::vector<int> dist = bfs_distances(g, center, &within);
        int ecc = 0;
        for (int v : current) ecc = std::max(ecc, dist[static_cast<std::size_t>(v)]);
        if (ecc < 1) {
            chain.stalled = true;
            chain.stall_reason = "singleton layer at step " + std::to_string(step);
            return chain;
        }

        int best_k = -1;
        int best_layer_chi = -1;
        std::vector<VertexSet> layers(static_cast<std::size_t>(ecc + 1));
        for (int v : current) layers[static_cast<std::size_t>(dist[static_cast<std::size_t>(v)])].push_back(v);
        for (int k = 1; k <= ecc; ++k) {
            auto chi = estimate_chi(g, layers[static_cast<std::size_t>(k)], estimator, budget);
            if (!chi) {
                chain.stalled = true;
                chain.stall_reason = "estimator timeout";
                return chain;
            }
            if (*chi > best_layer_chi) {
                best_layer_chi = *chi;
                best_k = k;
            }
        }
        if (best_layer_chi < 2) {
            chain.stalled = true;
            chain.stall_reason = "layer chromatic estimate below 2 at step " + std::to_string(step);
            return chain;
        }
        if (best_k <= 2) {
            chain.stalled = true;
            chain.stall_reason = "layer radius <= 2 at step " + std::to_string(step);
            return chain;
        }

        // descend into the best component of the chosen layer
        VertexSet next_comp;
        int next_chi = -1;
        for (const VertexSet& comp :
             components_within(g, to_bits(g.size(), layers[static_cast<std::size_t>(best_k)]))) {
            auto chi = estimate_chi(g, comp, estimator, budget);
            if (!chi) {
                chain.stalled = true;
                chain.stall_reason = "estimator timeout";
                return chain;
            }
            if (*chi > next_chi) {
                next_chi = *chi;
                next_comp = comp;
            }
        }

        chain.centers.push_back(center);
        chain.radii.push_back(best_k);
        chain.sets.push_back(next_comp);
        chain.chi_estimates.push_back(next_chi);
    }
    return chain;
}

CheckResult validate_layer_chain(const Graph& g, const LayerChain& chain, bool exact_chi) {
    if (chain.sets.size() != chain.centers.size() + 1) return CheckResult::reject("shape");
    for (int i = 0; i < chain.steps(); ++i) {
        const VertexSet& outer = chain.sets[static_cast<std::size_t>(i)];
        const VertexSet& inner = chain.sets[static_cast<std::size_t>(i + 1)];
        for (int v : inner)
            if (!contains(outer, v)) return CheckResult::reject("nested", v);
        Bits within = to_bits(g.size(), outer);
        std::vector<int> dist = bfs_distances(g, chain.centers[static_cast<std::size_t>(i)], &within);
        for (int v : inner)
            if (dist[static_cast<std::size_t>(v)] != chain.radii[static_cast<std::size_t>(i)])
                return CheckResult::reject("exact-distance", v);
        if (components_within(g, to_bits(g.size(), inner)).size() != 1)
            return CheckResult::reject("connected");
        if (exact_chi) {
            int outer_chi = chromatic_exact(induced(g, outer).graph);
            int inner_chi = chromatic_exact(induced(g, inner).graph);
            if (2 * inner_chi < outer_chi) return CheckResult::reject("halving", i);
        }
    }
    return CheckResult::accept();
}

// ---- theta certificates ----

CheckResult verify_theta(const ThetaCertificate& cert, const Graph& g, int n, int ell) {
    if (cert.n() != n || n < 1) return CheckResult::reject("path-count");
    if (cert.hub_u < 0 || cert.hub_u >= g.size() || cert.hub_v < 0 || cert.hub_v >= g.size() ||
        cert.hub_u == cert.hub_v)
        return CheckResult::reject("hubs");

    for (const auto& path : cert.paths) {
        if (path.size() < 2 || path.front() != cert.hub_u || path.back() != cert.hub_v)
            return CheckResult::reject("path-endpoints");
        for (int v : path)
            if (v < 0 || v >= g.size()) return CheckResult::reject("path-endpoints", v);
        VertexSet sorted(path.begin(), path.end());
        if (normalized(sorted).size() != path.size()) return CheckResult::reject("path-endpoints");
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if (!g.adjacent(path[i], path[i + 1]))
                return CheckResult::reject("path-valid", path[i], path[i + 1]);
        if (static_cast<int>(path.size()) - 1 < ell + 2)
            return CheckResult::reject("path-length", static_cast<int>(path.size()) - 1);
        for (std::size_t i = 0; i < path.size(); ++i)
            for (std::size_t j = i + 2; j < path.size(); ++j)
                if (g.adjacent(path[i], path[j]))
                    return CheckResult::reject("path-induced", path[i], path[j]);
    }

    for (std::size_t a = 0; a < cert.paths.size(); ++a)
        for (std::size_t b = a + 1; b < cert.paths.size(); ++b) {
            const auto& pa = cert.paths[a];
            const auto& pb = cert.paths[b];
            for (std::size_t i = 1; i + 1 < pa.size(); ++i)
                for (std::size_t j = 1; j + 1 < pb.size(); ++j) {
                    if (pa[i] == pb[j]) return CheckResult::reject("internal-disjoint", pa[i]);
                    if (g.adjacent(pa[i], pb[j]))
                        return CheckResult::reject("internal-anticomplete", pa[i], pb[j]);
                }
        }

    if (n >= 2 && g.adjacent(cert.hub_u, cert.hub_v)) return CheckResult::reject("hub-nonadjacent");

    // the union must induce exactly the path edges
    VertexSet all{cert.hub_u, cert.hub_v};
    std::vector<std::pair<int, int>> union_edges;
    for (const auto& path : cert.paths) {
        for (int v : path) all.push_back(v);
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            union_edges.emplace_back(std::min(path[i], path[i + 1]), std::max(path[i], path[i + 1]));
    }
    all = normalized(all);
    std::sort(union_edges.begin(), union_edges.end());
    union_edges.erase(std::unique(union_edges.begin(), union_edges.end()), union_edges.end());
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (g.adjacent(all[i], all[j]) &&
                !std::binary_search(union_edges.begin(), union_edges.end(),
                                    std::make_pair(all[i], all[j])))
                return CheckResult::reject("union-induced", all[i], all[j]);

    return CheckResult::accept();
}

namespace {

struct LevelData {
    int id = 0; // chain step, 1-based
    int u_gate = -1, v_gate = -1;
    std::vector<int> path; // u_gate .. v_gate, interior in A_i
    Bits path_bits;
    Bits interior_bits; // path minus its two ends
};

// shortest path between a and b inside `allowed` (which contains both); empty if none
std::vector<int> shortest_within(const Graph& g, int a, int b, const Bits& allowed) {
    std::vector<int> dist = bfs_distances(g, a, &allowed);
    if (dist[static_cast<std::size_t>(b)] == kUnreachable) return {};
    std::vector<int> path{b};
    int cur = b;
    while (cur != a) {
        const Bits& row = g.row(cur);
        for (std::size_t w = row.find_first(); w != Bits::npos; w = row.find_next(w)) {
            if (!allowed.test(w)) continue;
            if (dist[w] == dist[static_cast<std::size_t>(cur)] - 1) {
                cur = static_cast<int>(w);
                path.push_back(cur);
                break;
            }
        }
    }
    std::reverse(path.begin(), path.end());
    return path;
}

bool is_induced_path_in(const Graph& g, const std::vector<int>& path) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.adjacent(path[i], path[i + 1])) return false;
    for (std::size_t i = 0; i < path.size(); ++i)
        for (std::size_t j = i + 2; j < path.size(); ++j)
            if (g.adjacent(path[i], path[j])) return false;
    return true;
}

// lexicographically first subset of `ids` of size `want` whose internal pairs
// all carry the requested type
bool monochromatic_subset(const std::vector<int>& ids,
                          const std::vector<std::vector<int>>& type, // type[a][b] for a<b positions
                          int want, int target, std::vector<std::size_t>& out) {
    std::vector<std::size_t> chosen;
    std::function<bool(std::size_t)> grow = [&](std::size_t from) -> bool {
        if (static_cast<int>(chosen.size()) == want) {
            out = chosen;
            return true;
        }
        for (std::size_t c = from; c < ids.size(); ++c) {
            bool ok = true;
            for (std::size_t p : chosen)
                if (type[p][c] != target) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(c);
            if (grow(c + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return grow(0);
}

} // namespace

ThetaResult find_theta(const Graph& g, int n, int ell, int t, ChiEstimator estimator, Budget budget,
                       std::uint64_t seed) {
    if (n < 2 || ell < 1) throw std::invalid_argument("need n >= 2 and ell >= 1");
    ThetaResult out;
    out.cert.ell = ell;

    const int min_emit_len = 2 * (ell + 1); // genuine (>=ell)-subdivision needs this per path

    LayerChain chain = build_layer_chain(g, t, estimator, seed, budget);
    out.stages.push_back("chain: " + std::to_string(chain.steps()) + " steps" +
                         (chain.stalled ? " (stalled: " + chain.stall_reason + ")" : ""));

    if (chain.steps() >= 1) {
        const VertexSet& core = chain.sets.back();

        // candidate hub pairs in the innermost set, farthest first
        std::vector<std::tuple<int, int, int>> pairs; // (-dist, u, v)
        for (std::size_t a = 0; a < core.size(); ++a) {
            std::vector<int> dist = bfs_distances(g, core[a]);
            for (std::size_t b = a + 1; b < core.size(); ++b) {
                int d = dist[static_cast<std::size_t>(core[b])];
                if (d != kUnreachable && d >= ell + 3) pairs.emplace_back(-d, core[a], core[b]);
            }
        }
        std::sort(pairs.begin(), pairs.end());
        if (pairs.empty()) out.stages.push_back("no hub pair at distance >= " + std::to_string(ell + 3));
        if (pairs.size() > 5) pairs.resize(5);

        for (auto [negd, hub_u, hub_v] : pairs) {
            if (budget.expired()) {
                out.timed_out = true;
                return out;
            }
            out.stages.push_back("hubs " + std::to_string(hub_u) + "," + std::to_string(hub_v) +
                                 " at distance " + std::to_string(-negd));

            // per-level gates and connecting paths
            std::vector<LevelData> levels;
            for (int i = 1; i <= chain.steps(); ++i) {
                const VertexSet& ci = chain.sets[static_cast<std::size_t>(i - 1)];
                Bits within = to_bits(g.size(), ci);
                std::vector<int> dist =
                    bfs_distances(g, chain.centers[static_cast<std::size_t>(i - 1)], &within);
                int k = chain.radii[static_cast<std::size_t>(i - 1)];

                Bits level_bits(static_cast<std::size_t>(g.size()));
                Bits inner_bits(static_cast<std::size_t>(g.size()));
                for (int v : ci) {
                    int d = dist[static_cast<std::size_t>(v)];
                    if (d == k - 1) level_bits.set(static_cast<std::size_t>(v));
                    if (d >= 0 && d <= k - 2) inner_bits.set(static_cast<std::size_t>(v));
                }

                LevelData ld;
                ld.id = i;
                Bits ug = g.row(hub_u) & level_bits;
                Bits vg = g.row(hub_v) & level_bits;
                if (ug.none() || vg.none()) continue;
                ld.u_gate = static_cast<int>(ug.find_first());
                ld.v_gate = static_cast<int>(vg.find_first());
                if (ld.u_gate == ld.v_gate) continue;

                Bits allowed = inner_bits;
                allowed.set(static_cast<std::size_t>(ld.u_gate));
                allowed.set(static_cast<std::size_t>(ld.v_gate));
                ld.path = shortest_within(g, ld.u_gate, ld.v_gate, allowed);
                if (ld.path.empty()) continue;

                // the full hub-to-hub route must be induced
                std::vector<int> full{hub_u};
                full.insert(full.end(), ld.path.begin(), ld.path.end());
                full.push_back(hub_v);
                if (!is_induced_path_in(g, full)) continue;

                ld.path_bits = to_bits(g.size(), VertexSet(ld.path.begin(), ld.path.end()));
                ld.interior_bits = ld.path_bits;
                ld.interior_bits.reset(static_cast<std::size_t>(ld.u_gate));
                ld.interior_bits.reset(static_cast<std::size_t>(ld.v_gate));
                levels.push_back(std::move(ld));
            }
            out.stages.push_back("levels usable: " + std::to_string(levels.size()));
            if (levels.empty()) continue;

            // nine-way typing of level pairs
            auto side_type = [&](int gate_i, const LevelData& lj, int own_gate_j) -> int {
                Bits nb = g.row(gate_i) & lj.path_bits;
                if (nb.intersects(lj.interior_bits)) return 2;
                if (nb.none()) return 0;
                if (nb.count() == 1 && nb.test(static_cast<std::size_t>(own_gate_j))) return 1;
                return 3; // malformed (gate adjacent to the far end)
            };
            std::vector<std::vector<int>> tx(levels.size(), std::vector<int>(levels.size(), -1));
            std::vector<std::vector<int>> ty(levels.size(), std::vector<int>(levels.size(), -1));
            for (std::size_t a = 0; a < levels.size(); ++a)
                for (std::size_t b = a + 1; b < levels.size(); ++b) {
                    tx[a][b] = side_type(levels[a].u_gate, levels[b], levels[b].u_gate);
                    ty[a][b] = side_type(levels[a].v_gate, levels[b], levels[b].v_gate);
                }
            std::vector<std::vector<int>> combined(levels.size(), std::vector<int>(levels.size(), -1));
            for (std::size_t a = 0; a < levels.size(); ++a)
                for (std::size_t b = a + 1; b < levels.size(); ++b)
                    combined[a][b] = 3 * tx[a][b] + ty[a][b]; // code x*3+y, 3s never match targets

            std::vector<int> ids(levels.size());
            for (std::size_t a = 0; a < levels.size(); ++a) ids[a] = levels[a].id;

            struct Case {
                int x, y, want;
            };
            const Case cases[] = {{0, 0, n}, {2, 0, n + 1}, {0, 2, n + 1}, {2, 2, n + 1}};
            for (const Case& cs : cases) {
                std::vector<std::size_t> subset;
                if (!monochromatic_subset(ids, combined, cs.want, 3 * cs.x + cs.y, subset)) continue;
                out.stages.push_back("monochromatic type (" + std::to_string(cs.x) + "," +
                                     std::to_string(cs.y) + ") of size " + std::to_string(cs.want));

                ThetaCertificate cert;
                cert.ell = ell;
                bool built = true;

                if (cs.x == 0 && cs.y == 0) {
                    cert.hub_u = hub_u;
                    cert.hub_v = hub_v;
                    for (std::size_t p : subset) {
                        std::vector<int> path{hub_u};
                        path.insert(path.end(), levels[p].path.begin(), levels[p].path.end());
                        path.push_back(hub_v);
                        cert.paths.push_back(std::move(path));
                    }
                } else {
                    std::size_t pivot = subset.front();
                    for (std::size_t s = 1; s < subset.size() && built; ++s) {
                        std::size_t p = subset[s];
                        Bits allowed = levels[p].path_bits;
                        int from, to;
                        if (cs.x == 2 && cs.y == 0) {
                            from = levels[pivot].u_gate;
                            to = hub_v;
                            allowed.reset(static_cast<std::size_t>(levels[p].u_gate));
                        } else if (cs.x == 0 && cs.y == 2) {
                            from = levels[pivot].v_gate;
                            to = hub_u;
                            allowed.reset(static_cast<std::size_t>(levels[p].v_gate));
                        } else {
                            from = levels[pivot].u_gate;
                            to = levels[pivot].v_gate;
                            allowed = levels[p].interior_bits;
                        }
                        allowed.set(static_cast<std::size_t>(from));
                        allowed.set(static_cast<std::size_t>(to));
                        std::vector<int> q = shortest_within(g, from, to, allowed);
                        if (q.empty()) {
                            built = false;
                            break;
                        }
                        if (cert.paths.empty()) {
                            cert.hub_u = from;
                            cert.hub_v = to;
                        }
                        cert.paths.push_back(std::move(q));
                    }
                }

                if (!built || cert.n() != n) {
                    out.stages.push_back("reroute failed");
                    continue;
                }
                bool long_enough = true;
                for (const auto& p : cert.paths)
                    if (static_cast<int>(p.size()) - 1 < min_emit_len) long_enough = false;
                if (!long_enough) {
                    out.stages.push_back("paths too short for a genuine subdivision");
                    continue;
                }
                CheckResult v = verify_theta(cert, g, n, ell);
                if (!v.ok) {
                    out.stages.push_back("certificate rejected: " + v.clause);
                    continue;
                }
                out.stages.push_back("pipeline certificate verified");
                out.found = true;
                out.cert = std::move(cert);
                return out;
            }
        }
    }

    // direct bounded search fallback
    out.stages.push_back("fallback: direct subdivision search");
    SubdivisionSearchResult r = find_induced_subdivision(
        complete_bipartite(2, n), g, SubdivisionConstraint::at_least(ell), g.size(), budget);
    if (r.status == SubdivisionStatus::timeout) {
        out.timed_out = true;
        out.stages.push_back("direct search timed out");
        return out;
    }
    if (r.status == SubdivisionStatus::not_found_within_cap) {
        out.stages.push_back("direct search exhausted");
        return out;
    }

    RealizedSubdivision real = realize_subdivision(r.model);
    const auto& emb = r.embedding.map;
    ThetaCertificate cert;
    cert.ell = ell;
    cert.hub_u = emb[0];
    cert.hub_v = emb[1];
    auto base_edges = r.model.base.edges(); // (0,m) ascending, then (1,m) ascending
    for (int mid = 0; mid < n; ++mid) {
        const auto& half_u = real.paths[static_cast<std::size_t>(mid)];          // 0 .. mid+2
        const auto& half_v = real.paths[static_cast<std::size_t>(mid + n)];      // 1 .. mid+2
        std::vector<int> path;
        for (int v : half_u) path.push_back(emb[static_cast<std::size_t>(v)]);
        for (std::size_t i = half_v.size() - 1; i-- > 0;)
            path.push_back(emb[static_cast<std::size_t>(half_v[i])]);
        cert.paths.push_back(std::move(path));
    }
    CheckResult v = verify_theta(cert, g, n, ell);
    if (!v.ok) {
        out.stages.push_back("fallback certificate rejected: " + v.clause);
        return out;
    }
    out.stages.push_back("fallback certificate verified");
    out.found = true;
    out.cert = std::move(cert);
    return out;
}

} // namespace pervade
