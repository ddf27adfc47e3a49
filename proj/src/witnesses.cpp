#include "pervade/witnesses.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace pervade {

VertexSet Levelling::union_set() const {
    VertexSet out;
    for (const auto& l : levels) out.insert(out.end(), l.begin(), l.end());
    return normalized(out);
}

int Tick::order() const {
    int o = 0;
    for (const auto& p : paths) o = std::max(o, static_cast<int>(p.size()) - 1);
    return o;
}

namespace {

std::optional<int> common_vertex(const VertexSet& a, const VertexSet& b) {
    for (int v : b)
        if (contains(a, v)) return v;
    return std::nullopt;
}

bool sorted_set(const VertexSet& s) {
    return std::is_sorted(s.begin(), s.end()) &&
           std::adjacent_find(s.begin(), s.end()) == s.end();
}

bool strictly_increasing(const std::vector<int>& v) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] >= v[i + 1]) return false;
    return true;
}

} // namespace

CheckResult check_levelling(const Graph& g, const Levelling& lev) {
    if (lev.levels.empty()) return CheckResult::reject("shape");
    for (const auto& l : lev.levels) {
        if (!sorted_set(l) || !valid_set(g, l)) return CheckResult::reject("valid-vertices");
    }
    if (lev.levels.front().size() != 1) return CheckResult::reject("apex-singleton");
    for (std::size_t i = 0; i < lev.levels.size(); ++i)
        for (std::size_t j = i + 1; j < lev.levels.size(); ++j)
            if (auto v = common_vertex(lev.levels[i], lev.levels[j]))
                return CheckResult::reject("pairwise-disjoint", *v);
    for (std::size_t i = 1; i < lev.levels.size(); ++i)
        if (auto v = cover_violation(g, lev.levels[i - 1], lev.levels[i]))
            return CheckResult::reject("covers", *v, static_cast<int>(i));
    for (std::size_t i = 0; i < lev.levels.size(); ++i)
        for (std::size_t j = i + 2; j < lev.levels.size(); ++j)
            if (auto p = anticomplete_violation(g, lev.levels[i], lev.levels[j]))
                return CheckResult::reject("anticomplete", p->first, p->second);
    return CheckResult::accept();
}

CheckResult check_k_cover(const Graph& g, const Levelling& lev, const VertexSet& c) {
    if (CheckResult r = check_levelling(g, lev); !r.ok) return r;
    if (lev.k() < 1) return CheckResult::reject("k-positive");
    if (!sorted_set(c) || !valid_set(g, c)) return CheckResult::reject("valid-vertices");
    VertexSet u = lev.union_set();
    if (auto v = common_vertex(u, c)) return CheckResult::reject("target-disjoint", *v);
    if (auto v = cover_violation(g, lev.base(), c))
        return CheckResult::reject("base-covers-target", *v);
    for (int i = 0; i < lev.k(); ++i)
        if (auto p = anticomplete_violation(g, lev.levels[static_cast<std::size_t>(i)], c))
            return CheckResult::reject("upper-anticomplete-target", p->first, p->second);
    return CheckResult::accept();
}

CheckResult check_k_multicover(const Graph& g, const KMulticover& mc, const VertexSet& c) {
    if (mc.indices.size() != mc.covers.size() || mc.covers.empty())
        return CheckResult::reject("shape");
    if (!strictly_increasing(mc.indices)) return CheckResult::reject("indices");
    int k = mc.covers.front().k();
    for (const auto& lev : mc.covers) {
        if (lev.k() != k) return CheckResult::reject("k-consistent");
        if (CheckResult r = check_k_cover(g, lev, c); !r.ok) return r;
    }
    std::vector<VertexSet> unions;
    unions.reserve(mc.covers.size());
    for (const auto& lev : mc.covers) unions.push_back(lev.union_set());
    for (std::size_t i = 0; i < unions.size(); ++i)
        for (std::size_t j = i + 1; j < unions.size(); ++j)
            if (auto v = common_vertex(unions[i], unions[j]))
                return CheckResult::reject("unions-disjoint", *v);
    // i < j by index value: early union vertices seeing a later union sit in the early base
    for (std::size_t i = 0; i < unions.size(); ++i) {
        for (std::size_t j = i + 1; j < unions.size(); ++j) {
            Bits later = to_bits(g.size(), unions[j]);
            for (int u : unions[i]) {
                if (!g.row(u).intersects(later)) continue;
                if (!contains(mc.covers[i].base(), u)) {
                    Bits hit = g.row(u) & later;
                    return CheckResult::reject("cross-edges-into-base", u,
                                               static_cast<int>(hit.find_first()));
                }
            }
        }
    }
    return CheckResult::accept();
}

CheckResult check_independent_1_multicover(const Graph& g, const KMulticover& mc, const VertexSet& c) {
    if (CheckResult r = check_k_multicover(g, mc, c); !r.ok) return r;
    if (mc.covers.front().k() != 1) return CheckResult::reject("k-consistent");
    for (std::size_t i = 0; i < mc.covers.size(); ++i)
        for (std::size_t j = i + 1; j < mc.covers.size(); ++j) {
            int apex_j = mc.covers[j].apex();
            for (int b : mc.covers[i].base())
                if (g.adjacent(apex_j, b))
                    return CheckResult::reject("later-apex-vs-earlier-base", apex_j, b);
        }
    return CheckResult::accept();
}

CheckResult check_tick(const Graph& g, const Tick& tick, const KMulticover& mc, const VertexSet& c) {
    if (tick.indices.size() != tick.paths.size() || tick.indices.empty())
        return CheckResult::reject("shape");
    if (tick.head < 0 || tick.head >= g.size()) return CheckResult::reject("valid-vertices");

    VertexSet m_union;
    for (const auto& lev : mc.covers) {
        VertexSet u = lev.union_set();
        m_union.insert(m_union.end(), u.begin(), u.end());
    }
    m_union = normalized(m_union);
    VertexSet mc_union = normalized([&] {
        VertexSet t = m_union;
        t.insert(t.end(), c.begin(), c.end());
        return t;
    }());

    if (contains(mc_union, tick.head)) return CheckResult::reject("head-outside", tick.head);
    for (int u : mc_union)
        if (g.adjacent(tick.head, u)) return CheckResult::reject("head-no-neighbours", tick.head, u);

    for (std::size_t t = 0; t < tick.indices.size(); ++t) {
        auto pos = std::find(mc.indices.begin(), mc.indices.end(), tick.indices[t]);
        if (pos == mc.indices.end()) return CheckResult::reject("indices");
        std::size_t ci = static_cast<std::size_t>(pos - mc.indices.begin());
        const Levelling& lev = mc.covers[ci];
        const auto& path = tick.paths[t];

        if (path.size() < 2 || path.front() != tick.head || path.back() != lev.apex())
            return CheckResult::reject("path-endpoints", static_cast<int>(tick.indices[t]));
        for (int v : path)
            if (v < 0 || v >= g.size()) return CheckResult::reject("valid-vertices", v);
        VertexSet pset = normalized(VertexSet(path.begin(), path.end()));
        if (pset.size() != path.size())
            return CheckResult::reject("path-endpoints", static_cast<int>(tick.indices[t]));
        for (std::size_t a = 0; a + 1 < path.size(); ++a)
            if (!g.adjacent(path[a], path[a + 1]))
                return CheckResult::reject("path-endpoints", path[a], path[a + 1]);
        for (std::size_t a = 0; a < path.size(); ++a)
            for (std::size_t b = a + 2; b < path.size(); ++b)
                if (g.adjacent(path[a], path[b]))
                    return CheckResult::reject("path-induced", path[a], path[b]);

        // meets the multicover and target exactly at the apex
        for (int v : path)
            if (v != lev.apex() && contains(mc_union, v))
                return CheckResult::reject("path-meets-multicover", v);

        // every multicover/target vertex seeing the path away from the apex
        // lies in this cover's union
        VertexSet lev_union = lev.union_set();
        for (int u : mc_union) {
            bool sees = false;
            for (int v : path)
                if (v != lev.apex() && g.adjacent(u, v)) {
                    sees = true;
                    break;
                }
            if (sees && !contains(lev_union, u)) return CheckResult::reject("stray-neighbour", u);
        }
    }
    return CheckResult::accept();
}

CheckResult check_clique_cover(const Graph& g, const CliqueCover& cc, const VertexSet& c) {
    for (const VertexSet* s : {&cc.x, &cc.n, &cc.w}) {
        if (!sorted_set(*s) || !valid_set(g, *s)) return CheckResult::reject("valid-vertices");
    }
    if (!sorted_set(c) || !valid_set(g, c)) return CheckResult::reject("valid-vertices");
    if (auto v = common_vertex(cc.x, cc.n)) return CheckResult::reject("pairwise-disjoint", *v);
    if (auto v = common_vertex(cc.x, c)) return CheckResult::reject("pairwise-disjoint", *v);
    if (auto v = common_vertex(cc.n, c)) return CheckResult::reject("pairwise-disjoint", *v);
    for (const VertexSet* s : {&cc.x, &cc.n}) {
        for (int v : *s)
            if (!contains(cc.w, v)) return CheckResult::reject("sets-in-workspace", v);
    }
    for (int v : c)
        if (!contains(cc.w, v)) return CheckResult::reject("sets-in-workspace", v);
    if (static_cast<int>(cc.x.size()) != cc.xi) return CheckResult::reject("clique-size");
    if (!is_clique(g, cc.x)) return CheckResult::reject("clique");
    if (auto p = complete_violation(g, cc.x, cc.n))
        return CheckResult::reject("complete-to-n", p->first, p->second);
    if (auto p = anticomplete_violation(g, cc.x, c))
        return CheckResult::reject("anticomplete-to-target", p->first, p->second);
    if (auto v = cover_violation(g, cc.n, c)) return CheckResult::reject("n-covers-target", *v);
    return CheckResult::accept();
}

CheckResult check_clique_multicover(const Graph& g, const CliqueMulticover& mc, const VertexSet& c) {
    if (mc.indices.size() != mc.covers.size() || mc.covers.empty())
        return CheckResult::reject("shape");
    if (!strictly_increasing(mc.indices)) return CheckResult::reject("indices");
    for (const auto& cc : mc.covers) {
        if (cc.xi != mc.xi) return CheckResult::reject("xi-consistent");
        if (CheckResult r = check_clique_cover(g, cc, c); !r.ok) return r;
    }
    for (std::size_t i = 0; i < mc.covers.size(); ++i)
        for (std::size_t j = i + 1; j < mc.covers.size(); ++j) {
            for (int v : mc.covers[j].w)
                if (!contains(mc.covers[i].w, v))
                    return CheckResult::reject("workspace-nested", v);
            if (auto p = anticomplete_violation(g, mc.covers[i].x, mc.covers[j].w))
                return CheckResult::reject("clique-anticomplete-workspace", p->first, p->second);
        }
    return CheckResult::accept();
}

// ---- earthedness ----

namespace {

// lexicographic enumeration of xi-cliques containing v
class CliqueEnumerator {
public:
    CliqueEnumerator(const Graph& g, int v, int xi) : g_(g), xi_(xi) { current_.push_back(v); }

    template <typename Fn> // Fn: (const VertexSet&) -> bool, true = stop
    bool enumerate(Fn&& fn) {
        return grow(fn);
    }

private:
    template <typename Fn>
    bool grow(Fn&& fn) {
        if (static_cast<int>(current_.size()) == xi_) {
            VertexSet sorted = normalized(current_);
            return fn(sorted);
        }
        Bits cand(static_cast<std::size_t>(g_.size()));
        cand.set();
        for (int u : current_) cand &= g_.row(u);
        // only extend upward from the largest non-anchor vertex for lex order
        int lo = current_.size() > 1 ? current_.back() : -1;
        for (std::size_t w = cand.find_first(); w != Bits::npos; w = cand.find_next(w)) {
            if (static_cast<int>(w) <= lo) continue;
            current_.push_back(static_cast<int>(w));
            if (grow(fn)) return true;
            current_.pop_back();
        }
        return false;
    }

    const Graph& g_;
    int xi_;
    VertexSet current_;
};

} // namespace

EarthedResult check_earthed(const Graph& g, int v, const VertexSet& z, const VertexSet& w, int beta,
                            int xi, Budget budget) {
    if (v < 0 || v >= g.size()) throw std::out_of_range("vertex out of range");
    if (xi < 1) throw std::invalid_argument("xi must be >= 1");

    Bits zb = to_bits(g.size(), normalized(z));
    Bits wb = to_bits(g.size(), normalized(w));

    EarthedResult out;
    bool timed_out = false;
    CliqueEnumerator en(g, v, xi);
    en.enumerate([&](const VertexSet& x) {
        if (budget.expired()) {
            timed_out = true;
            return true;
        }
        Bits xb = to_bits(g.size(), x);
        // members of Z complete to X
        Bits z_complete(static_cast<std::size_t>(g.size()));
        for (std::size_t u = zb.find_first(); u != Bits::npos; u = zb.find_next(u)) {
            if (xb.test(u)) continue;
            if ((g.row(static_cast<int>(u)) & xb).count() == xb.count()) z_complete.set(u);
        }
        if (z_complete.none()) return false;
        VertexSet m;
        for (std::size_t u = wb.find_first(); u != Bits::npos; u = wb.find_next(u)) {
            if (xb.test(u)) continue;
            if (g.row(static_cast<int>(u)).intersects(xb)) continue; // not anticomplete to X
            if (g.row(static_cast<int>(u)).intersects(z_complete)) m.push_back(static_cast<int>(u));
        }
        ChiResult chi = chromatic_number(induced(g, m).graph, budget);
        if (chi.lower > beta) {
            out.status = EarthedStatus::earthed;
            out.clique = x;
            return true;
        }
        if (!chi.exact && chi.upper > beta) { // bracket straddles beta
            timed_out = true;
            return true;
        }
        return false;
    });
    if (timed_out && out.status != EarthedStatus::earthed) out.status = EarthedStatus::timeout;
    return out;
}

PairStatus pair_status(const Graph& g, const CliqueMulticover& mc, int i, int j, const VertexSet& c,
                       int beta, Budget budget) {
    auto pos_i = std::find(mc.indices.begin(), mc.indices.end(), i);
    auto pos_j = std::find(mc.indices.begin(), mc.indices.end(), j);
    if (pos_i == mc.indices.end() || pos_j == mc.indices.end() || i >= j)
        throw std::invalid_argument("need indices i < j from the multicover");
    const CliqueCover& ci = mc.covers[static_cast<std::size_t>(pos_i - mc.indices.begin())];
    const CliqueCover& cj = mc.covers[static_cast<std::size_t>(pos_j - mc.indices.begin())];

    Bits cb = to_bits(g.size(), c);

    // independent: some x in X_j avoided by every N_i vertex with a C-neighbour
    bool independent = false;
    for (int xj : cj.x) {
        bool ok = true;
        for (int u : ci.n) {
            if (!g.row(u).intersects(cb)) continue;
            if (g.adjacent(u, xj)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            independent = true;
            break;
        }
    }

    // skew: Z = N_i vertices anticomplete to C and to every later workspace
    Bits avoid = cb;
    for (std::size_t t = 0; t < mc.indices.size(); ++t)
        if (mc.indices[t] > j) avoid |= to_bits(g.size(), mc.covers[t].w);
    VertexSet z;
    for (int u : ci.n) {
        if (avoid.test(static_cast<std::size_t>(u))) continue;
        if (g.row(u).intersects(avoid)) continue;
        z.push_back(u);
    }

    bool skew = true;
    VertexSet zs = normalized(z);
    for (int u : ci.n) {
        if (contains(zs, u)) continue;
        bool complete = !cj.x.empty();
        for (int x : cj.x)
            if (u == x || !g.adjacent(u, x)) {
                complete = false;
                break;
            }
        if (!complete) {
            skew = false;
            break;
        }
    }
    if (skew) {
        for (int u : cj.n) {
            EarthedResult r = check_earthed(g, u, zs, cj.w, beta, mc.xi, budget);
            if (r.status == EarthedStatus::timeout) return PairStatus::timeout;
            if (r.status == EarthedStatus::not_earthed) {
                skew = false;
                break;
            }
        }
    }

    if (independent && skew) return PairStatus::both;
    if (independent) return PairStatus::independent;
    if (skew) return PairStatus::skew;
    return PairStatus::neither;
}

CheckResult check_residue(const Graph& g, const CliqueCover& orig, const CliqueCover& reduced,
                          const VertexSet& c, ResidueMode mode) {
    if (orig.x != reduced.x) return CheckResult::reject("same-clique");
    if (orig.w != reduced.w) return CheckResult::reject("same-workspace");
    if (orig.xi != reduced.xi) return CheckResult::reject("clique-size");
    for (int v : reduced.n)
        if (!contains(orig.n, v)) return CheckResult::reject("n-subset", v);
    Bits cb = to_bits(g.size(), c);
    for (int v : orig.n) {
        if (contains(reduced.n, v)) continue;
        bool has_c_neighbour = g.row(v).intersects(cb);
        if (mode == ResidueMode::verbatim ? !has_c_neighbour : has_c_neighbour)
            return CheckResult::reject("dropped-vertex-target-contact", v);
    }
    return CheckResult::accept();
}

HomogeneousStatus check_homogeneous(const Graph& g, const VertexSet& v, const VertexSet& z,
                                    const VertexSet& w, int beta, int xi, Budget budget) {
    bool any_earthed = false, any_not = false;
    for (int u : v) {
        EarthedResult r = check_earthed(g, u, z, w, beta, xi, budget);
        switch (r.status) {
        case EarthedStatus::timeout:
            return HomogeneousStatus::timeout;
        case EarthedStatus::earthed:
            any_earthed = true;
            break;
        case EarthedStatus::not_earthed:
            any_not = true;
            break;
        }
        if (any_earthed && any_not) return HomogeneousStatus::mixed;
    }
    if (any_earthed && !any_not) return HomogeneousStatus::all_earthed;
    return HomogeneousStatus::none_earthed; // includes empty V by convention
}

// ---- bounded (xi,zeta,c)-freeness counterexample search ----

namespace {

std::vector<VertexSet> all_cliques_of_size(const Graph& g, int xi) {
    std::vector<VertexSet> out;
    VertexSet cur;
    std::function<void(int)> grow = [&](int lo) {
        if (static_cast<int>(cur.size()) == xi) {
            out.push_back(cur);
            return;
        }
        for (int v = lo; v < g.size(); ++v) {
            bool ok = true;
            for (int u : cur)
                if (!g.adjacent(u, v)) {
                    ok = false;
                    break;
                }
            if (ok) {
                cur.push_back(v);
                grow(v + 1);
                cur.pop_back();
            }
        }
    };
    grow(0);
    return out;
}

} // namespace

namespace {

// independence of (cover i, cover j) per §7, directly from the definition
bool pair_independent(const Graph& g, const CliqueCover& ci, const CliqueCover& cj, const Bits& cb) {
    for (int xj : cj.x) {
        bool ok = true;
        for (int u : ci.n) {
            if (!g.row(u).intersects(cb)) continue;
            if (g.adjacent(u, xj)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

// Assemble nested workspaces and pruned N-sets for a chosen clique tuple;
// fills out.mc and returns true when an independent multicover materializes.
bool try_clique_tuple(const Graph& g, const std::vector<VertexSet>& cliques,
                      const std::vector<std::size_t>& pick, const VertexSet& target, const Bits& cb,
                      int xi, FreenessWitness& out) {
    const int n = g.size();
    const std::size_t zeta = pick.size();

    std::vector<Bits> ws(zeta, Bits(static_cast<std::size_t>(n)));
    ws[0].set();
    std::vector<Bits> xb(zeta);
    for (std::size_t s = 0; s < zeta; ++s) xb[s] = to_bits(n, cliques[pick[s]]);
    for (std::size_t s = 1; s < zeta; ++s) {
        ws[s] = ws[s - 1];
        for (std::size_t u = xb[s - 1].find_first(); u != Bits::npos; u = xb[s - 1].find_next(u)) {
            ws[s].reset(u);
            ws[s] -= g.row(static_cast<int>(u));
        }
    }
    for (std::size_t s = 0; s < zeta; ++s) {
        if ((xb[s] & ws[s]) != xb[s]) return false;       // clique inside its workspace
        if (xb[s].intersects(cb)) return false;           // disjoint from target
        if ((cb & ws[s]) != cb) return false;             // target inside workspace
        for (std::size_t u = xb[s].find_first(); u != Bits::npos; u = xb[s].find_next(u))
            if (g.row(static_cast<int>(u)).intersects(cb)) return false; // anticomplete
    }

    // maximal N: workspace vertices complete to the clique, outside X and C
    std::vector<VertexSet> nmax(zeta);
    for (std::size_t s = 0; s < zeta; ++s) {
        for (int v = 0; v < n; ++v) {
            std::size_t vu = static_cast<std::size_t>(v);
            if (!ws[s].test(vu) || xb[s].test(vu) || cb.test(vu)) continue;
            if ((g.row(v) & xb[s]).count() == xb[s].count()) nmax[s].push_back(v);
        }
        if (cover_violation(g, nmax[s], target)) return false;
    }

    // choose one X_t member per pair (s,t) and prune N_s accordingly
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t s = 0; s < zeta; ++s)
        for (std::size_t t = s + 1; t < zeta; ++t) pairs.emplace_back(s, t);
    std::size_t combos = 1;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        combos *= static_cast<std::size_t>(xi);
        if (combos > 4096) return false; // bounded search
    }

    for (std::size_t combo = 0; combo < combos; ++combo) {
        std::vector<VertexSet> pruned = nmax;
        std::size_t code = combo;
        for (auto [s, t] : pairs) {
            int x_pick = cliques[pick[t]][code % static_cast<std::size_t>(xi)];
            code /= static_cast<std::size_t>(xi);
            VertexSet kept;
            for (int v : pruned[s])
                if (!(g.adjacent(v, x_pick) && g.row(v).intersects(cb))) kept.push_back(v);
            pruned[s] = std::move(kept);
        }
        bool covered = true;
        for (std::size_t s = 0; s < zeta && covered; ++s)
            if (cover_violation(g, pruned[s], target)) covered = false;
        if (!covered) continue;

        CliqueMulticover mc;
        mc.xi = xi;
        for (std::size_t s = 0; s < zeta; ++s) {
            mc.indices.push_back(static_cast<int>(s + 1));
            mc.covers.push_back(CliqueCover{cliques[pick[s]], pruned[s], from_bits(ws[s]), xi});
        }
        if (!check_clique_multicover(g, mc, target).ok) continue;
        bool independent = true;
        for (std::size_t s = 0; s < zeta && independent; ++s)
            for (std::size_t t = s + 1; t < zeta && independent; ++t)
                if (!pair_independent(g, mc.covers[s], mc.covers[t], cb)) independent = false;
        if (!independent) continue;
        out.mc = std::move(mc);
        return true;
    }
    return false;
}

} // namespace

FreenessWitness find_independent_multicover_counterexample(const Graph& g, int xi, int zeta, int c,
                                                           Budget budget) {
    if (g.size() > 16)
        throw std::invalid_argument("counterexample search is bounded to 16 vertices");
    if (xi < 1 || zeta < 1) throw std::invalid_argument("xi and zeta must be >= 1");

    FreenessWitness out;
    std::vector<VertexSet> cliques = all_cliques_of_size(g, xi);
    if (cliques.empty()) return out;

    const int n = g.size();
    std::vector<std::size_t> pick(static_cast<std::size_t>(zeta), 0);

    for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
        if (budget.expired()) {
            out.status = FreenessStatus::timeout;
            return out;
        }
        VertexSet target;
        for (int v = 0; v < n; ++v)
            if (mask & (1ULL << v)) target.push_back(v);
        if (chromatic_number(induced(g, target).graph).value() <= c) continue;
        Bits cb = to_bits(n, target);

        // ordered tuples of distinct cliques X_1..X_zeta
        std::function<bool(std::size_t)> choose = [&](std::size_t slot) -> bool {
            if (slot == pick.size())
                return try_clique_tuple(g, cliques, pick, target, cb, xi, out);
            for (std::size_t t = 0; t < cliques.size(); ++t) {
                bool dup = false;
                for (std::size_t s = 0; s < slot; ++s)
                    if (pick[s] == t) dup = true;
                if (dup) continue;
                pick[slot] = t;
                if (choose(slot + 1)) return true;
            }
            return false;
        };
        if (choose(0)) {
            out.c = target;
            out.status = FreenessStatus::witness;
            return out;
        }
    }
    return out;
}

} // namespace pervade
