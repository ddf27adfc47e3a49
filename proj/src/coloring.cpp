#include "pervade/coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace pervade {

namespace {

// ---- exact maximum clique (branch and bound, greedy-colouring bound) ----

class CliqueSolver {
public:
    explicit CliqueSolver(const Graph& g) : g_(g) {}

    VertexSet solve() {
        Bits cand(static_cast<std::size_t>(g_.size()));
        cand.set();
        VertexSet cur;
        expand(cur, cand);
        return best_;
    }

private:
    void expand(VertexSet& cur, const Bits& cand) {
        if (cur.size() > best_.size()) best_ = cur;
        if (cand.none()) return;

        // Greedy colouring of the candidates; colour count bounds the clique.
        std::vector<int> verts = from_bits(cand);
        std::vector<int> color(verts.size());
        std::vector<Bits> classes;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            std::size_t c = 0;
            while (c < classes.size() && classes[c].intersects(g_.row(verts[i]))) ++c;
            if (c == classes.size()) classes.emplace_back(static_cast<std::size_t>(g_.size()));
            classes[c].set(static_cast<std::size_t>(verts[i]));
            color[i] = static_cast<int>(c);
        }
        // branch in decreasing colour order
        std::vector<std::size_t> order(verts.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return color[a] < color[b]; });

        Bits active = cand;
        for (std::size_t oi = order.size(); oi-- > 0;) {
            std::size_t i = order[oi];
            if (cur.size() + static_cast<std::size_t>(color[i]) + 1 <= best_.size()) return;
            int v = verts[i];
            active.reset(static_cast<std::size_t>(v));
            cur.push_back(v);
            Bits next = active & g_.row(v);
            expand(cur, next);
            cur.pop_back();
        }
    }

    const Graph& g_;
    VertexSet best_;
};

// ---- k-colourability: colour-class branch and bound ----
//
// Branching vertex is always the lowest-indexed uncoloured vertex, so every
// new colour class opens with that vertex. Preceded by peeling of vertices
// of degree < k, which are always extendable.

class KColorSolver {
public:
    KColorSolver(const Graph& g, int k, Budget budget) : g_(g), k_(k), budget_(budget) {}

    SearchStatus run(std::vector<int>* coloring_out) {
        const int n = g_.size();
        if (k_ <= 0) return n == 0 ? SearchStatus::yes : SearchStatus::no;

        // peel low-degree vertices; record removal order
        Bits alive(static_cast<std::size_t>(n));
        alive.set();
        std::vector<int> peeled;
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t v = alive.find_first(); v != Bits::npos; v = alive.find_next(v)) {
                if (static_cast<int>((g_.row(static_cast<int>(v)) & alive).count()) < k_) {
                    alive.reset(v);
                    peeled.push_back(static_cast<int>(v));
                    changed = true;
                }
            }
        }

        color_.assign(static_cast<std::size_t>(n), -1);
        classes_.assign(static_cast<std::size_t>(k_), Bits(static_cast<std::size_t>(n)));

        for (const VertexSet& comp : components_within(g_, alive)) {
            used_ = 0;
            // colours from other components can be reused freely
            for (auto& c : classes_) c.reset();
            remaining_ = to_bits(n, comp);
            if (!search()) return timed_out_ ? SearchStatus::timeout : SearchStatus::no;
        }

        if (coloring_out) {
            // colour peeled vertices greedily in reverse removal order
            for (std::size_t i = peeled.size(); i-- > 0;) {
                int v = peeled[i];
                Bits used_colors(static_cast<std::size_t>(k_));
                const Bits& row = g_.row(v);
                for (std::size_t u = row.find_first(); u != Bits::npos; u = row.find_next(u))
                    if (color_[u] >= 0) used_colors.set(static_cast<std::size_t>(color_[u]));
                std::size_t c = 0;
                while (used_colors.test(c)) ++c;
                color_[static_cast<std::size_t>(v)] = static_cast<int>(c);
            }
            *coloring_out = color_;
        }
        return SearchStatus::yes;
    }

private:
    bool search() {
        if ((++nodes_ & 0xff) == 0 && budget_.expired()) {
            timed_out_ = true;
            return false;
        }
        std::size_t v = remaining_.find_first();
        if (v == Bits::npos) return true;

        // fail fast: some uncoloured vertex with every class blocked
        for (std::size_t u = v; u != Bits::npos; u = remaining_.find_next(u)) {
            int free_classes = (used_ < k_) ? 1 : 0;
            for (int c = 0; c < used_; ++c)
                if (!classes_[static_cast<std::size_t>(c)].intersects(g_.row(static_cast<int>(u))))
                    ++free_classes;
            if (free_classes == 0) return false;
        }

        remaining_.reset(v);
        int tries = std::min(used_ + 1, k_);
        for (int c = 0; c < tries; ++c) {
            if (classes_[static_cast<std::size_t>(c)].intersects(g_.row(static_cast<int>(v)))) continue;
            bool fresh = (c == used_);
            classes_[static_cast<std::size_t>(c)].set(v);
            color_[v] = c;
            if (fresh) ++used_;
            if (search()) return true;
            if (timed_out_) return false;
            if (fresh) --used_;
            color_[v] = -1;
            classes_[static_cast<std::size_t>(c)].reset(v);
            if (fresh) break; // further fresh classes are symmetric
        }
        remaining_.set(v);
        return false;
    }

    const Graph& g_;
    int k_;
    Budget budget_;
    std::vector<int> color_;
    std::vector<Bits> classes_;
    Bits remaining_;
    int used_ = 0;
    unsigned nodes_ = 0;
    bool timed_out_ = false;
};

} // namespace

VertexSet max_clique(const Graph& g) { return CliqueSolver(g).solve(); }

int clique_number(const Graph& g) { return static_cast<int>(max_clique(g).size()); }

std::vector<int> dsatur_coloring(const Graph& g) {
    const int n = g.size();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<Bits> seen(static_cast<std::size_t>(n), Bits(static_cast<std::size_t>(n)));
    for (int step = 0; step < n; ++step) {
        int best = -1;
        std::size_t best_sat = 0;
        int best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (color[static_cast<std::size_t>(v)] >= 0) continue;
            std::size_t sat = seen[static_cast<std::size_t>(v)].count();
            int deg = g.degree(v);
            if (best == -1 || sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        std::size_t c = 0;
        while (seen[static_cast<std::size_t>(best)].test(c)) ++c;
        color[static_cast<std::size_t>(best)] = static_cast<int>(c);
        const Bits& row = g.row(best);
        for (std::size_t u = row.find_first(); u != Bits::npos; u = row.find_next(u))
            seen[u].set(c);
    }
    return color;
}

SearchStatus k_coloring(const Graph& g, int k, std::vector<int>& colors_out, Budget budget) {
    return KColorSolver(g, k, budget).run(&colors_out);
}

SearchStatus k_colorable(const Graph& g, int k, Budget budget) {
    return KColorSolver(g, k, budget).run(nullptr);
}

ChiResult chromatic_number(const Graph& g, Budget budget) {
    if (g.size() == 0) return {0, 0, true};
    if (g.edge_count() == 0) return {1, 1, true};

    int lower = clique_number(g);
    int upper = 0;
    for (int c : dsatur_coloring(g)) upper = std::max(upper, c + 1);

    for (int k = lower; k < upper; ++k) {
        switch (k_colorable(g, k, budget)) {
        case SearchStatus::yes:
            return {k, k, true};
        case SearchStatus::no:
            lower = k + 1;
            break;
        case SearchStatus::timeout:
            return {lower, upper, false};
        }
    }
    return {upper, upper, true};
}

int chromatic_exact(const Graph& g, Budget budget) {
    ChiResult r = chromatic_number(g, budget);
    if (!r.exact) throw std::runtime_error("chromatic number search timed out");
    return r.value();
}

VertexSet closed_ball(const Graph& g, int v, int rho) {
    std::vector<int> dist = bfs_distances(g, v);
    VertexSet ball;
    for (int u = 0; u < g.size(); ++u)
        if (dist[static_cast<std::size_t>(u)] != kUnreachable && dist[static_cast<std::size_t>(u)] <= rho)
            ball.push_back(u);
    return ball;
}

ChiResult ball_chromatic(const Graph& g, int rho, Budget budget) {
    if (g.size() == 0) return {0, 0, true};
    if (rho < 1) throw std::invalid_argument("rho must be >= 1");

    std::vector<VertexSet> balls;
    balls.reserve(static_cast<std::size_t>(g.size()));
    for (int v = 0; v < g.size(); ++v) balls.push_back(closed_ball(g, v, rho));
    // larger balls first; small ones often prune away entirely
    std::stable_sort(balls.begin(), balls.end(),
                     [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });

    ChiResult out{0, 0, true};
    for (const VertexSet& ball : balls) {
        if (static_cast<int>(ball.size()) <= out.lower) continue; // chi <= |ball|
        ChiResult r = chromatic_number(induced(g, ball).graph, budget);
        out.lower = std::max(out.lower, r.lower);
        out.upper = std::max(out.upper, r.upper);
        if (!r.exact) out.exact = false;
    }
    if (out.exact) out.exact = (out.lower == out.upper);
    out.upper = std::max(out.upper, out.lower);
    return out;
}

Neighborhoods neighborhoods(const Graph& g, const VertexSet& x) {
    VertexSet xs = normalized(x);
    if (!valid_set(g, xs)) throw std::out_of_range("vertex set out of range");
    if (!is_clique(g, xs)) throw std::invalid_argument("X is not a clique");
    Bits xb = to_bits(g.size(), xs);
    Neighborhoods out;
    for (int v = 0; v < g.size(); ++v) {
        if (xb.test(static_cast<std::size_t>(v))) continue;
        Bits common = g.row(v) & xb;
        if (common.count() == xb.count()) out.n1.push_back(v);
    }
    Bits n1b = to_bits(g.size(), out.n1);
    for (int v = 0; v < g.size(); ++v) {
        if (xb.test(static_cast<std::size_t>(v))) continue;
        if (g.row(v).intersects(xb)) continue;
        if (g.row(v).intersects(n1b)) out.n2.push_back(v);
    }
    return out;
}

} // namespace pervade
