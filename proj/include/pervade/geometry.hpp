#ifndef PERVADE_GEOMETRY_HPP
#define PERVADE_GEOMETRY_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <optional>
#include <vector>

namespace pervade {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign_of(const Rat& r) { return r.sign(); }

struct IPoint {
    long long x = 0, y = 0;
    bool operator==(const IPoint& o) const { return x == o.x && y == o.y; }
};

struct RatPoint {
    Rat x, y;
    bool operator==(const RatPoint& o) const { return x == o.x && y == o.y; }
};

// +1 if c lies left of a->b, 0 collinear, -1 right
int orient(const IPoint& a, const IPoint& b, const IPoint& c);
bool point_on_segment(const IPoint& p, const IPoint& a, const IPoint& b);
// closed segments; touching endpoints count
bool segments_intersect(const IPoint& a, const IPoint& b, const IPoint& c, const IPoint& d);

// classification of the meet of two closed segments
struct SegmentMeet {
    enum class Kind { none, point, overlap } kind = Kind::none;
    RatPoint p;      // kind point
    RatPoint q0, q1; // kind overlap: endpoints of the shared subsegment
};
SegmentMeet segment_meet(const IPoint& a, const IPoint& b, const IPoint& c, const IPoint& d);

// parameter of a point known to lie on segment [a,b], a != b
Rat param_on_segment(const RatPoint& p, const IPoint& a, const IPoint& b);

// value a + b*sqrt(d), d >= 0; exact sign
struct SqrtExpr {
    Rat a, b, d;
    int sign() const;
};

// sign of A + B*sqrt(dp) + C*sqrt(dq) + D*sqrt(dp*dq)
int sign_two_sqrt(const Rat& A, const Rat& B, const Rat& C, const Rat& D, const Rat& dp,
                  const Rat& dq);

struct Disc {
    Rat cx, cy;
    Rat radius; // > 0
    Rat r2() const { return radius * radius; }
};

// q(t) = |a + t(b-a) - center|^2 - r^2 over a segment, rational coefficients
struct SegmentDiscQuadratic {
    Rat qa, qb, qc;    // qa*t^2 + qb*t + qc, qa > 0 for nondegenerate segments
    Rat disc() const { return qb * qb - 4 * qa * qc; }
    Rat eval(const Rat& t) const { return (qa * t + qb) * t + qc; }
};
SegmentDiscQuadratic segment_disc_quadratic(const IPoint& a, const IPoint& b, const Disc& disc);

// roots of the quadratic restricted to the open interval (0,1):
//   count in {0,1,2}; `which` identifies minus/plus root for exact queries
struct RootsInUnit {
    int count = 0;
    bool has_minus = false, has_plus = false; // which of the two roots lie inside
    bool tangent = false;                     // double root inside [0,1]
    bool endpoint_root = false;               // q(0) == 0 or q(1) == 0
};
RootsInUnit roots_in_unit(const SegmentDiscQuadratic& q);

// is the selected root (minus/plus) strictly below the rational threshold t
bool root_below(const SegmentDiscQuadratic& q, bool plus_root, const Rat& t);

// point of the circle at the selected root of the segment quadratic:
// coordinates  (ax + bx*sqrt(delta), ay + by*sqrt(delta))
struct BoundaryPoint {
    Rat ax, bx, ay, by, delta;
    std::array<double, 2> approx() const;
};
BoundaryPoint boundary_point(const IPoint& a, const IPoint& b, const SegmentDiscQuadratic& q,
                             bool plus_root);

// Clockwise circular order around `center`, starting at rational direction `ref`.
class ClockwiseOrder {
public:
    ClockwiseOrder(Rat cx, Rat cy, Rat rx, Rat ry)
        : cx_(std::move(cx)), cy_(std::move(cy)), rx_(std::move(rx)), ry_(std::move(ry)) {}

    bool less(const BoundaryPoint& p, const BoundaryPoint& q) const;
    // p lies exactly on the ray from the center in the reference direction
    bool on_reference_ray(const BoundaryPoint& p) const;

private:
    int half(const BoundaryPoint& p) const;
    Rat cx_, cy_, rx_, ry_;
};

// deterministic sequence of rational reference directions ("angular grid"):
// axes, diagonals, then tangent-half-angle refinements
std::vector<std::pair<long long, long long>> reference_directions(int count);

} // namespace pervade

#endif
