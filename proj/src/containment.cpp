#include "pervade/containment.hpp"

#include <algorithm>

namespace pervade {

bool verify_induced_embedding(const Graph& pattern, const Graph& host, const std::vector<int>& map) {
    if (map.size() != static_cast<std::size_t>(pattern.size())) return false;
    for (int v : map)
        if (v < 0 || v >= host.size()) return false;
    for (int u = 0; u < pattern.size(); ++u)
        for (int v = u + 1; v < pattern.size(); ++v) {
            if (map[static_cast<std::size_t>(u)] == map[static_cast<std::size_t>(v)]) return false;
            if (pattern.adjacent(u, v) !=
                host.adjacent(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)]))
                return false;
        }
    return true;
}

namespace {

// connectivity-aware static ordering of the pattern vertices
std::vector<int> pattern_order(const Graph& p) {
    const int n = p.size();
    std::vector<int> order;
    std::vector<bool> placed(static_cast<std::size_t>(n), false);
    for (int step = 0; step < n; ++step) {
        int best = -1, best_conn = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[static_cast<std::size_t>(v)]) continue;
            int conn = 0;
            for (int u : order)
                if (p.adjacent(u, v)) ++conn;
            int deg = p.degree(v);
            if (conn > best_conn || (conn == best_conn && deg > best_deg)) {
                best = v;
                best_conn = conn;
                best_deg = deg;
            }
        }
        order.push_back(best);
        placed[static_cast<std::size_t>(best)] = true;
    }
    return order;
}

class InducedSearch {
public:
    InducedSearch(const Graph& pattern, const Graph& host, Budget budget)
        : p_(pattern), h_(host), budget_(budget) {}

    FindResult run() {
        if (p_.size() > h_.size()) return {FindStatus::not_found, {}};
        if (p_.size() == 0) return {FindStatus::found, {{}}};
        order_ = pattern_order(p_);
        map_.assign(static_cast<std::size_t>(p_.size()), -1);
        used_ = Bits(static_cast<std::size_t>(h_.size()));
        FindStatus st = place(0);
        if (st == FindStatus::found) return {st, {map_}};
        return {st, {}};
    }

private:
    FindStatus place(std::size_t pos) {
        if ((++nodes_ & 0x3ff) == 0 && budget_.expired()) return FindStatus::timeout;
        if (pos == order_.size()) return FindStatus::found;
        int u = order_[pos];

        Bits cand(static_cast<std::size_t>(h_.size()));
        cand.set();
        cand -= used_;
        for (std::size_t j = 0; j < pos; ++j) {
            int w = order_[j];
            int hw = map_[static_cast<std::size_t>(w)];
            if (p_.adjacent(u, w))
                cand &= h_.row(hw);
            else
                cand -= h_.row(hw);
        }
        int need = p_.degree(u);
        for (std::size_t v = cand.find_first(); v != Bits::npos; v = cand.find_next(v)) {
            if (h_.degree(static_cast<int>(v)) < need) continue;
            map_[static_cast<std::size_t>(u)] = static_cast<int>(v);
            used_.set(v);
            FindStatus st = place(pos + 1);
            if (st != FindStatus::not_found) return st;
            used_.reset(v);
            map_[static_cast<std::size_t>(u)] = -1;
        }
        return FindStatus::not_found;
    }

    const Graph& p_;
    const Graph& h_;
    Budget budget_;
    std::vector<int> order_;
    std::vector<int> map_;
    Bits used_;
    unsigned long nodes_ = 0;
};

} // namespace

FindResult find_induced(const Graph& pattern, const Graph& host, Budget budget) {
    FindResult r = InducedSearch(pattern, host, budget).run();
    if (r.status == FindStatus::found && !verify_induced_embedding(pattern, host, r.embedding.map))
        throw std::logic_error("induced search produced an invalid embedding");
    return r;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.size(); ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.size(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return find_induced(a, b).status == FindStatus::found;
}

// ---- induced subdivisions ----

namespace {

struct VectorEnumerator {
    std::vector<int> min_len;
    std::vector<int> max_len; // 0 = unbounded
    int budget_extra = 0;     // total extra edges above the minima

    // visit(vector of lengths) -> FindStatus; found/timeout stop enumeration
    template <typename Fn>
    FindStatus enumerate(Fn&& visit) {
        std::vector<int> lens(min_len.begin(), min_len.end());
        for (int total = 0; total <= budget_extra; ++total) {
            FindStatus st = fill(lens, 0, total, visit);
            if (st != FindStatus::not_found) return st;
        }
        return FindStatus::not_found;
    }

    template <typename Fn>
    FindStatus fill(std::vector<int>& lens, std::size_t e, int remaining, Fn&& visit) {
        if (e == lens.size()) {
            if (remaining != 0) return FindStatus::not_found;
            return visit(lens);
        }
        int hi = remaining;
        if (max_len[e] > 0) hi = std::min(hi, max_len[e] - min_len[e]);
        for (int extra = 0; extra <= hi; ++extra) {
            lens[e] = min_len[e] + extra;
            FindStatus st = fill(lens, e + 1, remaining - extra, visit);
            if (st != FindStatus::not_found) return st;
        }
        lens[e] = min_len[e];
        return FindStatus::not_found;
    }
};

} // namespace

SubdivisionSearchResult find_induced_subdivision(const Graph& base, const Graph& host,
                                                 SubdivisionConstraint constraint, int cap,
                                                 Budget budget) {
    if (cap < base.size()) throw std::invalid_argument("cap must be at least the base order");
    const std::size_t m = base.edges().size();

    SubdivisionSearchResult out;
    int effective_cap = std::min(cap, host.size());

    VectorEnumerator en;
    en.min_len.assign(m, constraint.min_length());
    en.max_len.assign(m, constraint.max_length());
    int min_total_vertices = base.size();
    for (std::size_t e = 0; e < m; ++e) min_total_vertices += en.min_len[e] - 1;
    en.budget_extra = effective_cap - min_total_vertices;
    if (en.budget_extra < 0) {
        out.status = SubdivisionStatus::not_found_within_cap;
        return out;
    }

    FindStatus st = en.enumerate([&](const std::vector<int>& lens) -> FindStatus {
        ++out.vectors_tried;
        if (budget.expired()) return FindStatus::timeout;
        SubdivisionModel model{base, lens};
        RealizedSubdivision real = realize_subdivision(model);
        FindResult r = find_induced(real.graph, host, budget);
        if (r.status == FindStatus::found) {
            out.model = std::move(model);
            out.embedding = std::move(r.embedding);
        }
        return r.status;
    });

    switch (st) {
    case FindStatus::found:
        out.status = SubdivisionStatus::found;
        break;
    case FindStatus::timeout:
        out.status = SubdivisionStatus::timeout;
        break;
    case FindStatus::not_found:
        out.status = SubdivisionStatus::not_found_within_cap;
        break;
    }
    return out;
}

// ---- impressions ----

namespace {

bool is_host_path(const Graph& host, const std::vector<int>& path) {
    if (path.empty()) return false;
    for (int v : path)
        if (v < 0 || v >= host.size()) return false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!host.adjacent(path[i], path[i + 1])) return false;
    std::vector<int> sorted = path;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool is_induced_host_path(const Graph& host, const std::vector<int>& path) {
    for (std::size_t i = 0; i < path.size(); ++i)
        for (std::size_t j = i + 2; j < path.size(); ++j)
            if (host.adjacent(path[i], path[j])) return false;
    return true;
}

} // namespace

ImpressionReport check_impression(const Impression& imp, const Graph& host, const Graph& pattern,
                                  bool strict_induced) {
    auto edges = pattern.edges();
    if (imp.vertex_map.size() != static_cast<std::size_t>(pattern.size()) ||
        imp.paths.size() != edges.size())
        return {false, "shape", 0};
    for (int v : imp.vertex_map)
        if (v < 0 || v >= host.size()) return {false, "shape", 0};

    // distinct, pairwise nonadjacent vertex images
    for (int u = 0; u < pattern.size(); ++u)
        for (int v = u + 1; v < pattern.size(); ++v) {
            int a = imp.vertex_map[static_cast<std::size_t>(u)];
            int b = imp.vertex_map[static_cast<std::size_t>(v)];
            if (a == b || host.adjacent(a, b)) return {false, "vertex-images-stable", 0};
        }

    int order = 0;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto& path = imp.paths[e];
        if (!is_host_path(host, path)) return {false, "edge-path", 0};
        int a = imp.vertex_map[static_cast<std::size_t>(edges[e].first)];
        int b = imp.vertex_map[static_cast<std::size_t>(edges[e].second)];
        if (!((path.front() == a && path.back() == b) || (path.front() == b && path.back() == a)))
            return {false, "edge-path", 0};
        if (strict_induced && !is_induced_host_path(host, path))
            return {false, "edge-path-induced", 0};
        order = std::max(order, static_cast<int>(path.size()) - 1);
    }

    for (std::size_t e = 0; e < edges.size(); ++e)
        for (std::size_t f = e + 1; f < edges.size(); ++f) {
            auto [a, b] = edges[e];
            auto [c, d] = edges[f];
            if (a == c || a == d || b == c || b == d) continue; // common end
            for (int u : imp.paths[e])
                for (int v : imp.paths[f])
                    if (u == v || host.adjacent(u, v)) return {false, "anticomplete", 0};
        }

    return {true, "", order};
}

// ---- restriction ----

RestrictedReport restricted_check(const Graph& g, int lambda, int mu, int nu, int cap, Budget budget) {
    if (lambda < 2) throw std::invalid_argument("lambda must be >= 2");
    RestrictedReport out;
    out.omega = clique_number(g);
    if (out.omega > nu) {
        out.status = RestrictedStatus::clique_witness;
        return out;
    }
    SubdivisionSearchResult r = find_induced_subdivision(
        complete_bipartite(mu, mu), g, SubdivisionConstraint::proper_at_most(lambda), cap, budget);
    switch (r.status) {
    case SubdivisionStatus::found:
        out.status = RestrictedStatus::subdivision_witness;
        out.model = std::move(r.model);
        out.embedding = std::move(r.embedding);
        break;
    case SubdivisionStatus::timeout:
        out.status = RestrictedStatus::timeout;
        break;
    case SubdivisionStatus::not_found_within_cap:
        out.status = RestrictedStatus::restricted_within_cap;
        break;
    }
    return out;
}

// ---- anticomplete path pairs ----

namespace {

class PathPairSearch {
public:
    PathPairSearch(const Graph& g, int a, int b, int c, int d, Budget budget)
        : g_(g), a_(a), b_(b), c_(c), d_(d), budget_(budget) {}

    PathsStatus run() {
        const int n = g_.size();
        path_ = {a_};
        on_path_ = Bits(static_cast<std::size_t>(n));
        on_path_.set(static_cast<std::size_t>(a_));
        interior_closed_ = Bits(static_cast<std::size_t>(n)); // N[path minus last]
        return extend();
    }

private:
    // does the complete path path_ (ending at b_) admit an anticomplete partner?
    bool partner_exists() const {
        Bits blocked = interior_closed_ | g_.row(path_.back());
        blocked.set(static_cast<std::size_t>(path_.back()));
        if (blocked.test(static_cast<std::size_t>(c_)) || blocked.test(static_cast<std::size_t>(d_)))
            return false;
        Bits free = ~blocked;
        std::vector<int> dist = bfs_distances(g_, c_, &free);
        return dist[static_cast<std::size_t>(d_)] != kUnreachable;
    }

    PathsStatus extend() {
        if ((++nodes_ & 0xff) == 0 && budget_.expired()) return PathsStatus::timeout;
        int last = path_.back();
        if (last == b_) return partner_exists() ? PathsStatus::yes : PathsStatus::no;

        // c,d must stay clear of the closed neighbourhood of the final path,
        // which already includes N[path minus last]
        if (interior_closed_.test(static_cast<std::size_t>(c_)) ||
            interior_closed_.test(static_cast<std::size_t>(d_)))
            return PathsStatus::no;
        Bits free = ~(interior_closed_ | on_path_);
        std::vector<int> dist = bfs_distances(g_, c_, &free);
        if (!free.test(static_cast<std::size_t>(c_)) || dist[static_cast<std::size_t>(d_)] == kUnreachable)
            return PathsStatus::no;

        Bits cand = g_.row(last) & ~on_path_ & ~interior_closed_;
        for (std::size_t v = cand.find_first(); v != Bits::npos; v = cand.find_next(v)) {
            path_.push_back(static_cast<int>(v));
            on_path_.set(v);
            Bits saved = interior_closed_;
            interior_closed_ |= g_.row(last);
            interior_closed_.set(static_cast<std::size_t>(last));
            PathsStatus st = extend();
            if (st != PathsStatus::no) return st;
            interior_closed_ = std::move(saved);
            on_path_.reset(v);
            path_.pop_back();
        }
        return PathsStatus::no;
    }

    const Graph& g_;
    int a_, b_, c_, d_;
    Budget budget_;
    std::vector<int> path_;
    Bits on_path_;
    Bits interior_closed_;
    unsigned long nodes_ = 0;
};

} // namespace

PathsStatus anticomplete_paths_exist(const Graph& g, int a, int b, int c, int d, Budget budget) {
    int ids[4] = {a, b, c, d};
    for (int i = 0; i < 4; ++i) {
        if (ids[i] < 0 || ids[i] >= g.size()) throw std::out_of_range("vertex out of range");
        for (int j = i + 1; j < 4; ++j)
            if (ids[i] == ids[j]) throw std::invalid_argument("a,b,c,d must be distinct");
    }
    return PathPairSearch(g, a, b, c, d, budget).run();
}

} // namespace pervade
