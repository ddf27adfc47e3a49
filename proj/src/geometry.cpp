#include "pervade/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pervade {

namespace {

BigInt bi(long long v) { return BigInt(v); }

int sgn(const BigInt& v) { return v.sign(); }

} // namespace

int orient(const IPoint& a, const IPoint& b, const IPoint& c) {
    BigInt cross = (bi(b.x) - a.x) * (bi(c.y) - a.y) - (bi(b.y) - a.y) * (bi(c.x) - a.x);
    return sgn(cross);
}

bool point_on_segment(const IPoint& p, const IPoint& a, const IPoint& b) {
    if (orient(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

bool segments_intersect(const IPoint& a, const IPoint& b, const IPoint& c, const IPoint& d) {
    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    int o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && point_on_segment(c, a, b)) return true;
    if (o2 == 0 && point_on_segment(d, a, b)) return true;
    if (o3 == 0 && point_on_segment(a, c, d)) return true;
    if (o4 == 0 && point_on_segment(b, c, d)) return true;
    return false;
}

Rat param_on_segment(const RatPoint& p, const IPoint& a, const IPoint& b) {
    if (a.x != b.x) return (p.x - a.x) / Rat(bi(b.x) - a.x);
    if (a.y != b.y) return (p.y - a.y) / Rat(bi(b.y) - a.y);
    throw std::invalid_argument("degenerate segment");
}

SegmentMeet segment_meet(const IPoint& a, const IPoint& b, const IPoint& c, const IPoint& d) {
    SegmentMeet out;
    if (!segments_intersect(a, b, c, d)) return out;

    int o1 = orient(a, b, c), o2 = orient(a, b, d);
    if (o1 != 0 || o2 != 0) {
        // not collinear: either a proper crossing or an endpoint touch; in both
        // cases the meet is a single rational point
        int o3 = orient(c, d, a), o4 = orient(c, d, b);
        if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) {
            // proper crossing: solve the 2x2 system
            BigInt dx1 = bi(b.x) - a.x, dy1 = bi(b.y) - a.y;
            BigInt dx2 = bi(d.x) - c.x, dy2 = bi(d.y) - c.y;
            BigInt den = dx1 * dy2 - dy1 * dx2;
            BigInt num = (bi(c.x) - a.x) * dy2 - (bi(c.y) - a.y) * dx2;
            Rat t = Rat(num) / Rat(den);
            out.kind = SegmentMeet::Kind::point;
            out.p = {Rat(a.x) + t * Rat(dx1), Rat(a.y) + t * Rat(dy1)};
            return out;
        }
        // endpoint touch: one endpoint lies on the other segment
        out.kind = SegmentMeet::Kind::point;
        if (o1 == 0 && point_on_segment(c, a, b))
            out.p = {Rat(c.x), Rat(c.y)};
        else if (o2 == 0 && point_on_segment(d, a, b))
            out.p = {Rat(d.x), Rat(d.y)};
        else if (orient(c, d, a) == 0 && point_on_segment(a, c, d))
            out.p = {Rat(a.x), Rat(a.y)};
        else if (orient(c, d, b) == 0 && point_on_segment(b, c, d))
            out.p = {Rat(b.x), Rat(b.y)};
        else
            throw std::logic_error("inconsistent segment intersection");
        return out;
    }

    // collinear with intersection: overlap (possibly a single point)
    auto key = [&](const IPoint& p) { return (a.x != b.x) ? p.x : p.y; };
    IPoint lo1 = a, hi1 = b, lo2 = c, hi2 = d;
    if (key(lo1) > key(hi1)) std::swap(lo1, hi1);
    if (key(lo2) > key(hi2)) std::swap(lo2, hi2);
    IPoint lo = key(lo1) >= key(lo2) ? lo1 : lo2;
    IPoint hi = key(hi1) <= key(hi2) ? hi1 : hi2;
    if (key(lo) == key(hi)) {
        out.kind = SegmentMeet::Kind::point;
        out.p = {Rat(lo.x), Rat(lo.y)};
    } else {
        out.kind = SegmentMeet::Kind::overlap;
        out.q0 = {Rat(lo.x), Rat(lo.y)};
        out.q1 = {Rat(hi.x), Rat(hi.y)};
    }
    return out;
}

int SqrtExpr::sign() const {
    if (d.sign() < 0) throw std::invalid_argument("negative radicand");
    if (b.sign() == 0 || d.sign() == 0) return a.sign();
    if (a.sign() == 0) return b.sign();
    if (a.sign() == b.sign()) return a.sign();
    int cmp = sign_of(a * a - b * b * d);
    return a.sign() > 0 ? cmp : -cmp;
}

int sign_two_sqrt(const Rat& A, const Rat& B, const Rat& C, const Rat& D, const Rat& dp,
                  const Rat& dq) {
    SqrtExpr s1{A, B, dp};
    SqrtExpr s2{C, D, dp};
    int e1 = s1.sign();
    if (dq.sign() == 0) return e1;
    int e2 = s2.sign();
    if (e2 == 0) return e1;
    if (e1 == 0) return e2;
    if (e1 == e2) return e1;
    // compare s1^2 against s2^2 * dq
    Rat sa = A * A + B * B * dp;
    Rat sb = 2 * A * B;
    Rat ta = (C * C + D * D * dp) * dq;
    Rat tb = 2 * C * D * dq;
    SqrtExpr diff{sa - ta, sb - tb, dp};
    int cmp = diff.sign();
    return e1 > 0 ? cmp : -cmp;
}

SegmentDiscQuadratic segment_disc_quadratic(const IPoint& a, const IPoint& b, const Disc& disc) {
    Rat ex = Rat(b.x) - Rat(a.x), ey = Rat(b.y) - Rat(a.y);
    Rat fx = Rat(a.x) - disc.cx, fy = Rat(a.y) - disc.cy;
    SegmentDiscQuadratic q;
    q.qa = ex * ex + ey * ey;
    q.qb = 2 * (ex * fx + ey * fy);
    q.qc = fx * fx + fy * fy - disc.r2();
    return q;
}

RootsInUnit roots_in_unit(const SegmentDiscQuadratic& q) {
    RootsInUnit out;
    Rat q0 = q.eval(Rat(0));
    Rat q1 = q.eval(Rat(1));
    if (q0.sign() == 0 || q1.sign() == 0) {
        out.endpoint_root = true;
        return out;
    }
    Rat delta = q.disc();
    int ds = delta.sign();
    if (ds < 0) return out;
    // vertex position -qb / (2 qa) relative to (0,1)
    bool vertex_inside = (q.qb.sign() < 0) && ((-q.qb) < 2 * q.qa);
    if (ds == 0) {
        if (vertex_inside) out.tangent = true;
        return out;
    }
    if (q0.sign() > 0 && q1.sign() > 0) {
        if (vertex_inside && q.eval(-q.qb / (2 * q.qa)).sign() < 0) {
            out.count = 2;
            out.has_minus = out.has_plus = true;
        }
        return out;
    }
    if (q0.sign() < 0 && q1.sign() < 0) return out; // both roots outside (0,1)
    out.count = 1;
    if (q0.sign() < 0) // exiting: larger root inside
        out.has_plus = true;
    else // entering: smaller root inside
        out.has_minus = true;
    return out;
}

bool root_below(const SegmentDiscQuadratic& q, bool plus_root, const Rat& t) {
    // root = (-qb -+ sqrt(delta)) / (2 qa), qa > 0
    Rat u = 2 * q.qa * t + q.qb; // root < t  <=>  -+sqrt(delta) < u
    Rat delta = q.disc();
    if (!plus_root) {
        // -sqrt(delta) < u  <=>  u > 0, or u <= 0 and delta > u^2
        if (u.sign() > 0) return true;
        return delta > u * u;
    }
    // sqrt(delta) < u  <=>  u > 0 and delta < u^2
    return u.sign() > 0 && delta < u * u;
}

std::array<double, 2> BoundaryPoint::approx() const {
    double s = std::sqrt(static_cast<double>(delta));
    return {static_cast<double>(ax) + static_cast<double>(bx) * s,
            static_cast<double>(ay) + static_cast<double>(by) * s};
}

BoundaryPoint boundary_point(const IPoint& a, const IPoint& b, const SegmentDiscQuadratic& q,
                             bool plus_root) {
    // t = (-qb -+ sqrt(delta)) / (2 qa); point = a + t (b - a)
    Rat inv = Rat(1) / (2 * q.qa);
    Rat t0 = -q.qb * inv;                // rational part of t
    Rat t1 = plus_root ? inv : -inv;     // coefficient of sqrt(delta)
    BoundaryPoint p;
    p.delta = q.disc();
    Rat ex = Rat(b.x) - Rat(a.x), ey = Rat(b.y) - Rat(a.y);
    p.ax = Rat(a.x) + t0 * ex;
    p.bx = t1 * ex;
    p.ay = Rat(a.y) + t0 * ey;
    p.by = t1 * ey;
    return p;
}

int ClockwiseOrder::half(const BoundaryPoint& p) const {
    // vector from center, coordinates (a + b sqrt(delta))
    Rat wxa = p.ax - cx_, wxb = p.bx;
    Rat wya = p.ay - cy_, wyb = p.by;
    SqrtExpr cross{rx_ * wya - ry_ * wxa, rx_ * wyb - ry_ * wxb, p.delta};
    int cs = cross.sign();
    if (cs < 0) return 0; // clockwise side of the reference, angle in (0,pi)
    if (cs > 0) return 1;
    SqrtExpr dot{rx_ * wxa + ry_ * wya, rx_ * wxb + ry_ * wyb, p.delta};
    return dot.sign() > 0 ? 0 : 1; // aligned with ref = first, opposite = second half
}

bool ClockwiseOrder::less(const BoundaryPoint& p, const BoundaryPoint& q) const {
    int hp = half(p), hq = half(q);
    if (hp != hq) return hp < hq;
    // same half: p precedes q clockwise iff q is clockwise of p, i.e. cross(p,q) < 0
    Rat pxa = p.ax - cx_, pxb = p.bx, pya = p.ay - cy_, pyb = p.by;
    Rat qxa = q.ax - cx_, qxb = q.bx, qya = q.ay - cy_, qyb = q.by;
    // cross = px*qy - py*qx, a two-radical expression
    Rat A = pxa * qya - pya * qxa;
    Rat B = pxb * qya - pyb * qxa; // sqrt(dp)
    Rat C = pxa * qyb - pya * qxb; // sqrt(dq)
    Rat D = pxb * qyb - pyb * qxb; // sqrt(dp dq)
    return sign_two_sqrt(A, B, C, D, p.delta, q.delta) < 0;
}

bool ClockwiseOrder::on_reference_ray(const BoundaryPoint& p) const {
    Rat wxa = p.ax - cx_, wxb = p.bx;
    Rat wya = p.ay - cy_, wyb = p.by;
    SqrtExpr cross{rx_ * wya - ry_ * wxa, rx_ * wyb - ry_ * wxb, p.delta};
    if (cross.sign() != 0) return false;
    SqrtExpr dot{rx_ * wxa + ry_ * wya, rx_ * wxb + ry_ * wyb, p.delta};
    return dot.sign() > 0;
}

std::vector<std::pair<long long, long long>> reference_directions(int count) {
    std::vector<std::pair<long long, long long>> out{{1, 0}, {0, 1}, {-1, 0}, {0, -1},
                                                     {1, 1}, {-1, 1}, {-1, -1}, {1, -1}};
    for (long long den = 2; static_cast<int>(out.size()) < count; den *= 2) {
        for (long long num = 1; num < den && static_cast<int>(out.size()) < count; num += 2) {
            long long dx = den * den - num * num, dy = 2 * num * den;
            out.emplace_back(dx, dy);
            out.emplace_back(-dx, dy);
            out.emplace_back(-dx, -dy);
            out.emplace_back(dx, -dy);
        }
    }
    if (static_cast<int>(out.size()) > count) out.resize(static_cast<std::size_t>(count));
    return out;
}

} // namespace pervade
