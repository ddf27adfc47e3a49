#include "pervade/strings.hpp"

#include <algorithm>
#include <cmath>

#include "pervade/containment.hpp"
#include "pervade/rng.hpp"

namespace pervade {

namespace {

// simple-curve validation: non-consecutive segments must not meet, and
// consecutive segments meet only at their shared vertex
void validate_polyline(const Polyline& c) {
    if (c.points.size() < 2) throw DegenerateCurve(c.id, "needs at least two points");
    for (std::size_t i = 0; i + 1 < c.points.size(); ++i)
        if (c.points[i] == c.points[i + 1]) throw DegenerateCurve(c.id, "repeated point");
    const auto& p = c.points;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        for (std::size_t j = i + 1; j + 1 < p.size(); ++j) {
            if (j == i + 1) {
                // backtracking along the shared vertex means self-overlap
                if (orient(p[i], p[i + 1], p[j + 1]) == 0 &&
                    (point_on_segment(p[j + 1], p[i], p[i + 1]) ||
                     point_on_segment(p[i], p[j], p[j + 1])))
                    throw DegenerateCurve(c.id, "self-overlap at a vertex");
                continue;
            }
            if (segments_intersect(p[i], p[i + 1], p[j], p[j + 1]))
                throw DegenerateCurve(c.id, "self-intersection");
        }
    }
}

bool curves_meet(const Polyline& a, const Polyline& b) {
    for (std::size_t i = 0; i + 1 < a.points.size(); ++i)
        for (std::size_t j = 0; j + 1 < b.points.size(); ++j)
            if (segments_intersect(a.points[i], a.points[i + 1], b.points[j], b.points[j + 1]))
                return true;
    return false;
}

} // namespace

StringArrangement build_string_graph(std::vector<Polyline> curves) {
    for (const auto& c : curves) validate_polyline(c);
    StringArrangement arr;
    arr.graph = Graph(static_cast<int>(curves.size()));
    for (std::size_t i = 0; i < curves.size(); ++i)
        for (std::size_t j = i + 1; j < curves.size(); ++j)
            if (curves_meet(curves[i], curves[j]))
                arr.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
    arr.curves = std::move(curves);
    return arr;
}

// ---- clipping ----

namespace {

struct Crossing {
    std::size_t seg;
    bool plus_root;
};

// per-curve circle-crossing structure
struct CurveClip {
    std::vector<SegmentDiscQuadratic> quads; // per segment
    std::vector<int> cross_count;            // per segment, crossings in (0,1)
    std::vector<Crossing> crossings;         // in curve order
    bool start_inside = false;
    int piece_count = 0;

    bool run_inside(int run) const { return start_inside == (run % 2 == 0); }
    int piece_of_run(int run) const { return (run + (start_inside ? 1 : 0)) / 2; }

    // crossings strictly before parameter t on segment seg
    int crossings_before(std::size_t seg, const Rat& t) const {
        int cnt = 0;
        for (std::size_t k = 0; k < seg; ++k) cnt += cross_count[k];
        RootsInUnit r = roots_in_unit(quads[seg]);
        if (r.has_minus && root_below(quads[seg], false, t)) ++cnt;
        if (r.has_plus && root_below(quads[seg], true, t)) ++cnt;
        return cnt;
    }

    // piece containing the strictly-inside point at (seg, t)
    int piece_at(std::size_t seg, const Rat& t) const {
        int run = crossings_before(seg, t);
        return piece_of_run(run);
    }
};

CurveClip analyze_curve(const Polyline& c, const Disc& disc) {
    CurveClip out;
    const auto& p = c.points;
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
        SegmentDiscQuadratic q = segment_disc_quadratic(p[k], p[k + 1], disc);
        RootsInUnit r = roots_in_unit(q);
        if (r.endpoint_root) throw DegenerateBoundary("polyline vertex on the circle");
        if (r.tangent) throw DegenerateBoundary("segment tangent to the circle");
        out.quads.push_back(q);
        out.cross_count.push_back(r.count);
        if (r.has_minus) out.crossings.push_back({k, false});
        if (r.has_plus) out.crossings.push_back({k, true});
    }
    out.start_inside = out.quads.front().eval(Rat(0)).sign() < 0;
    int runs = static_cast<int>(out.crossings.size()) + 1;
    out.piece_count = out.start_inside ? (runs + 1) / 2 : runs / 2;
    return out;
}

double approx_root(const SegmentDiscQuadratic& q, bool plus_root) {
    double a = static_cast<double>(q.qa), b = static_cast<double>(q.qb),
           c = static_cast<double>(q.qc);
    double s = std::sqrt(std::max(0.0, b * b - 4 * a * c));
    return plus_root ? (-b + s) / (2 * a) : (-b - s) / (2 * a);
}

} // namespace

ClipResult clip_to_disc(const StringArrangement& arr, const Disc& disc) {
    if (disc.radius.sign() <= 0) throw std::invalid_argument("radius must be positive");
    ClipResult out;
    out.disc = disc;

    std::vector<CurveClip> data;
    std::vector<int> piece_base; // first piece id of each curve
    int total = 0;
    for (const auto& c : arr.curves) {
        data.push_back(analyze_curve(c, disc));
        piece_base.push_back(total);
        total += data.back().piece_count;
    }

    out.pieces.assign(static_cast<std::size_t>(total), {});
    out.origin.assign(static_cast<std::size_t>(total), 0);
    for (std::size_t ci = 0; ci < arr.curves.size(); ++ci) {
        const CurveClip& cc = data[ci];
        const auto& pts = arr.curves[ci].points;
        int base = piece_base[ci];
        for (int pc = 0; pc < cc.piece_count; ++pc) {
            out.pieces[static_cast<std::size_t>(base + pc)].parent = static_cast<int>(ci);
            out.origin[static_cast<std::size_t>(base + pc)] = static_cast<int>(ci);
        }
        // attach boundary points and build approximate polylines
        int run = 0;
        std::vector<std::array<double, 2>> current;
        if (cc.run_inside(0)) current.push_back({static_cast<double>(pts[0].x), static_cast<double>(pts[0].y)});
        std::size_t next_cross = 0;
        for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
            while (next_cross < cc.crossings.size() && cc.crossings[next_cross].seg == k) {
                const Crossing& cr = cc.crossings[next_cross];
                BoundaryPoint bp = boundary_point(pts[k], pts[k + 1], cc.quads[k], cr.plus_root);
                int inside_run = cc.run_inside(run) ? run : run + 1;
                int piece = base + cc.piece_of_run(inside_run);
                out.pieces[static_cast<std::size_t>(piece)].boundary.push_back(bp);
                double t = approx_root(cc.quads[k], cr.plus_root);
                std::array<double, 2> xy{
                    static_cast<double>(pts[k].x) + t * (static_cast<double>(pts[k + 1].x) - pts[k].x),
                    static_cast<double>(pts[k].y) + t * (static_cast<double>(pts[k + 1].y) - pts[k].y)};
                if (cc.run_inside(run)) { // leaving the disc: close the piece
                    current.push_back(xy);
                    out.pieces[static_cast<std::size_t>(piece)].approx = std::move(current);
                    current.clear();
                } else { // entering
                    current = {xy};
                }
                ++run;
                ++next_cross;
            }
            if (cc.run_inside(run))
                current.push_back({static_cast<double>(pts[k + 1].x), static_cast<double>(pts[k + 1].y)});
        }
        if (cc.run_inside(run) && !current.empty())
            out.pieces[static_cast<std::size_t>(base + cc.piece_of_run(run))].approx = std::move(current);
    }

    // exact piece intersection graph via rational witness points
    out.graph = Graph(total);
    for (std::size_t ci = 0; ci < arr.curves.size(); ++ci) {
        for (std::size_t cj = ci + 1; cj < arr.curves.size(); ++cj) {
            const auto& pi = arr.curves[ci].points;
            const auto& pj = arr.curves[cj].points;
            for (std::size_t si = 0; si + 1 < pi.size(); ++si) {
                for (std::size_t sj = 0; sj + 1 < pj.size(); ++sj) {
                    SegmentMeet meet = segment_meet(pi[si], pi[si + 1], pj[sj], pj[sj + 1]);
                    if (meet.kind == SegmentMeet::Kind::none) continue;
                    if (meet.kind == SegmentMeet::Kind::point) {
                        Rat d2 = (meet.p.x - disc.cx) * (meet.p.x - disc.cx) +
                                 (meet.p.y - disc.cy) * (meet.p.y - disc.cy) - disc.r2();
                        int s = d2.sign();
                        if (s > 0) continue;
                        if (s == 0) throw DegenerateBoundary("curves meet on the circle");
                        Rat ti = param_on_segment(meet.p, pi[si], pi[si + 1]);
                        Rat tj = param_on_segment(meet.p, pj[sj], pj[sj + 1]);
                        int a = piece_base[ci] + data[ci].piece_at(si, ti);
                        int b = piece_base[cj] + data[cj].piece_at(sj, tj);
                        out.graph.add_edge(a, b);
                        continue;
                    }
                    // collinear overlap: walk its inside runs
                    Rat ti0 = param_on_segment(meet.q0, pi[si], pi[si + 1]);
                    Rat ti1 = param_on_segment(meet.q1, pi[si], pi[si + 1]);
                    Rat tj0 = param_on_segment(meet.q0, pj[sj], pj[sj + 1]);
                    Rat tj1 = param_on_segment(meet.q1, pj[sj], pj[sj + 1]);
                    if (ti0 > ti1) {
                        std::swap(ti0, ti1);
                        std::swap(tj0, tj1);
                    }
                    const SegmentDiscQuadratic& q = data[ci].quads[si];
                    if (q.eval(ti0).sign() == 0 || q.eval(ti1).sign() == 0)
                        throw DegenerateBoundary("overlap endpoint on the circle");
                    RootsInUnit r = roots_in_unit(q);
                    int m = 0;
                    if (r.has_minus && !root_below(q, false, ti0) && root_below(q, false, ti1)) ++m;
                    if (r.has_plus && !root_below(q, true, ti0) && root_below(q, true, ti1)) ++m;
                    bool inside0 = q.eval(ti0).sign() < 0;
                    int run_i = data[ci].crossings_before(si, ti0);
                    bool aligned = tj0 < tj1;
                    int run_j_base = data[cj].crossings_before(sj, aligned ? tj0 : tj1);
                    for (int sub = 0; sub <= m; ++sub) {
                        bool inside = inside0 == (sub % 2 == 0);
                        if (!inside) continue;
                        int a = piece_base[ci] + data[ci].piece_of_run(run_i + sub);
                        int b = piece_base[cj] +
                                data[cj].piece_of_run(run_j_base + (aligned ? sub : m - sub));
                        out.graph.add_edge(a, b);
                    }
                }
            }
        }
    }

    for (int p = 0; p < total; ++p)
        if (out.pieces[static_cast<std::size_t>(p)].meets_boundary()) out.boundary_pieces.push_back(p);
    return out;
}

std::vector<int> boundary_order(const ClipResult& clip) {
    if (clip.boundary_pieces.empty()) return {};

    std::vector<const BoundaryPoint*> all;
    for (int p : clip.boundary_pieces)
        for (const auto& bp : clip.pieces[static_cast<std::size_t>(p)].boundary) all.push_back(&bp);

    // reference point d: first rational direction whose ray misses every hit
    std::optional<ClockwiseOrder> order;
    int want = 8;
    while (!order) {
        for (auto [dx, dy] : reference_directions(want)) {
            ClockwiseOrder cand(clip.disc.cx, clip.disc.cy, Rat(dx), Rat(dy));
            bool free = true;
            for (const auto* bp : all)
                if (cand.on_reference_ray(*bp)) {
                    free = false;
                    break;
                }
            if (free) {
                order.emplace(std::move(cand));
                break;
            }
        }
        want *= 2;
        if (want > 4096) throw DegenerateBoundary("no free reference direction found");
    }

    // f(x): first boundary hit clockwise from d
    std::vector<std::pair<int, const BoundaryPoint*>> firsts;
    for (int p : clip.boundary_pieces) {
        const auto& hits = clip.pieces[static_cast<std::size_t>(p)].boundary;
        const BoundaryPoint* best = &hits.front();
        for (const auto& bp : hits)
            if (order->less(bp, *best)) best = &bp;
        firsts.emplace_back(p, best);
    }
    std::stable_sort(firsts.begin(), firsts.end(), [&](const auto& a, const auto& b) {
        if (order->less(*a.second, *b.second)) return true;
        if (order->less(*b.second, *a.second)) return false;
        return a.first < b.first; // ties by piece id (not expected)
    });
    std::vector<int> out;
    for (auto& [p, bp] : firsts) out.push_back(p);
    return out;
}

CrossReport check_cross_property(const Graph& g, const std::vector<int>& seq, Budget budget) {
    CrossReport out;
    const int n = static_cast<int>(seq.size());
    for (int h = 0; h < n; ++h)
        for (int i = h + 1; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    PathsStatus st =
                        anticomplete_paths_exist(g, seq[static_cast<std::size_t>(h)],
                                                 seq[static_cast<std::size_t>(j)],
                                                 seq[static_cast<std::size_t>(i)],
                                                 seq[static_cast<std::size_t>(k)], budget);
                    if (st == PathsStatus::timeout) {
                        out.status = CrossStatus::timeout;
                        return out;
                    }
                    if (st == PathsStatus::yes) {
                        out.status = CrossStatus::reject;
                        out.quad = {h + 1, i + 1, j + 1, k + 1};
                        return out;
                    }
                }
    out.status = CrossStatus::accept;
    return out;
}

ChiAudit audit_40chi3(const StringArrangement& arr, Budget budget) {
    ChiAudit out;
    out.chi = chromatic_number(arr.graph, budget);
    out.chi3 = ball_chromatic(arr.graph, 3, budget);
    out.both_exact = out.chi.exact && out.chi3.exact;
    if (out.both_exact) out.bound_holds = out.chi.value() <= 40 * out.chi3.value();
    return out;
}

// ---- disc suggestion ----

namespace {

Rat point_segment_dist2(const Rat& px, const Rat& py, const IPoint& a, const IPoint& b) {
    Rat ex = Rat(b.x) - Rat(a.x), ey = Rat(b.y) - Rat(a.y);
    Rat fx = px - Rat(a.x), fy = py - Rat(a.y);
    Rat len2 = ex * ex + ey * ey;
    Rat t = len2.sign() == 0 ? Rat(0) : (fx * ex + fy * ey) / len2;
    if (t < 0) t = 0;
    if (t > 1) t = 1;
    Rat dx = fx - t * ex, dy = fy - t * ey;
    return dx * dx + dy * dy;
}

} // namespace

bool verify_disc_separation(const StringArrangement& arr, const Disc& disc, const VertexSet& s1,
                            const VertexSet& s2) {
    Rat r2 = disc.r2();
    for (int ci : s1)
        for (const IPoint& p : arr.curves[static_cast<std::size_t>(ci)].points) {
            Rat dx = Rat(p.x) - disc.cx, dy = Rat(p.y) - disc.cy;
            if (dx * dx + dy * dy >= r2) return false; // not strictly inside
        }
    for (int ci : s2) {
        const auto& pts = arr.curves[static_cast<std::size_t>(ci)].points;
        for (std::size_t k = 0; k + 1 < pts.size(); ++k)
            if (point_segment_dist2(disc.cx, disc.cy, pts[k], pts[k + 1]) <= r2) return false;
    }
    return true;
}

std::optional<Disc> suggest_disc(const StringArrangement& arr, const VertexSet& s1,
                                 const VertexSet& s2) {
    if (s1.empty()) return std::nullopt;
    for (int v : s1)
        if (contains(s2, v)) throw std::invalid_argument("S1 and S2 must be disjoint");
    // union-connectedness of S1 and geometric disjointness from S2, via the
    // exact intersection graph
    if (components_within(arr.graph, to_bits(arr.graph.size(), s1)).size() != 1)
        throw std::invalid_argument("S1 must be union-connected");
    for (int a : s1)
        for (int b : s2)
            if (arr.graph.adjacent(a, b)) throw std::invalid_argument("S1 meets S2");

    long long min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    bool first = true;
    for (int ci : s1)
        for (const IPoint& p : arr.curves[static_cast<std::size_t>(ci)].points) {
            if (first) {
                min_x = max_x = p.x;
                min_y = max_y = p.y;
                first = false;
            }
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
    Rat cx = Rat(min_x + max_x) / 2, cy = Rat(min_y + max_y) / 2;

    Rat max_d2(0);
    for (int ci : s1)
        for (const IPoint& p : arr.curves[static_cast<std::size_t>(ci)].points) {
            Rat dx = Rat(p.x) - cx, dy = Rat(p.y) - cy;
            Rat d2 = dx * dx + dy * dy;
            if (d2 > max_d2) max_d2 = d2;
        }

    bool bounded = false;
    Rat min_d2(0);
    for (int ci : s2) {
        const auto& pts = arr.curves[static_cast<std::size_t>(ci)].points;
        for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
            Rat d2 = point_segment_dist2(cx, cy, pts[k], pts[k + 1]);
            if (!bounded || d2 < min_d2) {
                min_d2 = d2;
                bounded = true;
            }
        }
    }
    Rat lo2 = max_d2;
    Rat hi2 = bounded ? min_d2 : max_d2 + 4;
    if (lo2 >= hi2) return std::nullopt;

    // rational radius with lo2 < r^2 < hi2, by exact bisection
    Rat rlo(0), rhi = hi2 + 1;
    Rat r;
    while (true) {
        Rat mid = (rlo + rhi) / 2;
        Rat mid2 = mid * mid;
        if (mid2 <= lo2)
            rlo = mid;
        else if (mid2 >= hi2)
            rhi = mid;
        else {
            r = mid;
            break;
        }
    }
    Disc disc{cx, cy, r};
    if (!verify_disc_separation(arr, disc, s1, s2)) return std::nullopt;
    return disc;
}

std::vector<Polyline> random_polylines(int curves, int max_segments, long long coord_range,
                                       std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Polyline> out;
    for (int c = 0; c < curves; ++c) {
        Polyline line;
        line.id = c;
        int segments = rng.next_int(1, std::max(1, max_segments));
        for (int attempt = 0; attempt < 200 && static_cast<int>(line.points.size()) <= segments;
             ++attempt) {
            IPoint p{rng.next_int(-static_cast<int>(coord_range), static_cast<int>(coord_range)),
                     rng.next_int(-static_cast<int>(coord_range), static_cast<int>(coord_range))};
            if (line.points.empty()) {
                line.points.push_back(p);
                continue;
            }
            if (p == line.points.back()) continue;
            Polyline candidate = line;
            candidate.points.push_back(p);
            try {
                validate_polyline(candidate);
            } catch (const DegenerateCurve&) {
                continue;
            }
            line.points.push_back(p);
        }
        if (line.points.size() < 2) {
            IPoint base = line.points.empty() ? IPoint{0, 0} : line.points[0];
            line.points = {base, IPoint{base.x + 1 + c, base.y + 1}};
        }
        out.push_back(std::move(line));
    }
    return out;
}

} // namespace pervade
