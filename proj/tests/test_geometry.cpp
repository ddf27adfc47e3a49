#include <doctest.h>

#include "pervade/geometry.hpp"

using namespace pervade;

TEST_CASE("orientation and segment intersection") {
    CHECK(orient({0, 0}, {4, 0}, {1, 3}) == 1);
    CHECK(orient({0, 0}, {4, 0}, {1, -3}) == -1);
    CHECK(orient({0, 0}, {4, 0}, {9, 0}) == 0);

    CHECK(segments_intersect({0, 0}, {4, 4}, {0, 4}, {4, 0}));    // proper cross
    CHECK(segments_intersect({0, 0}, {4, 0}, {4, 0}, {8, 3}));    // endpoint touch
    CHECK(segments_intersect({0, 0}, {4, 0}, {2, 0}, {2, 5}));    // T-touch
    CHECK(!segments_intersect({0, 0}, {4, 0}, {0, 1}, {4, 1}));   // parallel
    CHECK(segments_intersect({0, 0}, {4, 0}, {2, 0}, {6, 0}));    // collinear overlap
    CHECK(!segments_intersect({0, 0}, {4, 0}, {5, 0}, {8, 0}));   // collinear apart
}

TEST_CASE("segment meets") {
    SegmentMeet m = segment_meet({0, 0}, {4, 4}, {0, 4}, {4, 0});
    CHECK(m.kind == SegmentMeet::Kind::point);
    CHECK(m.p == RatPoint{Rat(2), Rat(2)});

    m = segment_meet({0, 0}, {4, 0}, {2, 0}, {6, 0});
    CHECK(m.kind == SegmentMeet::Kind::overlap);
    CHECK(m.q0 == RatPoint{Rat(2), Rat(0)});
    CHECK(m.q1 == RatPoint{Rat(4), Rat(0)});

    m = segment_meet({0, 0}, {4, 0}, {4, 0}, {4, 9});
    CHECK(m.kind == SegmentMeet::Kind::point);
    CHECK(m.p == RatPoint{Rat(4), Rat(0)});

    m = segment_meet({0, 0}, {4, 0}, {1, 1}, {3, 1});
    CHECK(m.kind == SegmentMeet::Kind::none);

    // non-half crossing parameter stays exact
    m = segment_meet({0, 0}, {3, 3}, {0, 2}, {3, 2});
    CHECK(m.kind == SegmentMeet::Kind::point);
    CHECK(m.p == RatPoint{Rat(2), Rat(2)});
}

TEST_CASE("sqrt expression signs") {
    CHECK(SqrtExpr{Rat(3), Rat(0), Rat(2)}.sign() == 1);
    CHECK(SqrtExpr{Rat(0), Rat(-2), Rat(2)}.sign() == -1);
    CHECK(SqrtExpr{Rat(3), Rat(-2), Rat(2)}.sign() == 1);   // 3 > 2*sqrt(2)? 9 > 8 yes
    CHECK(SqrtExpr{Rat(-3), Rat(2), Rat(2)}.sign() == -1);
    CHECK(SqrtExpr{Rat(-2), Rat(1), Rat(4)}.sign() == 0);   // -2 + sqrt(4)
    CHECK(SqrtExpr{Rat(2), Rat(-1), Rat(5)}.sign() == -1);  // 2 < sqrt(5)
    CHECK(SqrtExpr{Rat(7), Rat(0), Rat(0)}.sign() == 1);

    // (1 + sqrt(2)) - (sqrt(3)) > 0: A=1,B=1 (dp=2), C=-1 (dq=3), D=0
    CHECK(sign_two_sqrt(Rat(1), Rat(1), Rat(-1), Rat(0), Rat(2), Rat(3)) == 1);
    // 1 + sqrt(2) - 3*sqrt(3) < 0
    CHECK(sign_two_sqrt(Rat(1), Rat(1), Rat(-3), Rat(0), Rat(2), Rat(3)) == -1);
    // sqrt(2)*sqrt(2) - 2 == 0: expression -2 + sqrt(2)*sqrt(2)
    CHECK(sign_two_sqrt(Rat(-2), Rat(0), Rat(0), Rat(1), Rat(2), Rat(2)) == 0);
    // -sqrt(3) + sqrt(6) > 0
    CHECK(sign_two_sqrt(Rat(0), Rat(0), Rat(-1), Rat(1), Rat(2), Rat(3)) == 1);
}

TEST_CASE("segment-disc crossings") {
    Disc disc{Rat(0), Rat(0), Rat(5)};

    // straight through: two crossings on one segment
    SegmentDiscQuadratic q = segment_disc_quadratic({-9, 1}, {9, 1}, disc);
    RootsInUnit r = roots_in_unit(q);
    CHECK(r.count == 2);
    CHECK(r.has_minus);
    CHECK(r.has_plus);

    // one endpoint inside: a single crossing
    q = segment_disc_quadratic({0, 0}, {9, 1}, disc);
    r = roots_in_unit(q);
    CHECK(r.count == 1);
    CHECK(r.has_plus);

    // fully outside, pointing away
    q = segment_disc_quadratic({6, 6}, {9, 9}, disc);
    r = roots_in_unit(q);
    CHECK(r.count == 0);

    // tangent line y = 5
    q = segment_disc_quadratic({-9, 5}, {9, 5}, disc);
    r = roots_in_unit(q);
    CHECK(r.tangent);

    // vertex exactly on the circle
    q = segment_disc_quadratic({5, 0}, {9, 0}, disc);
    r = roots_in_unit(q);
    CHECK(r.endpoint_root);

    // root ordering against rational thresholds: crossings of the chord at
    // y = 1 sit symmetrically around t = 1/2
    q = segment_disc_quadratic({-9, 1}, {9, 1}, disc);
    CHECK(root_below(q, false, Rat(1, 2)));
    CHECK(!root_below(q, true, Rat(1, 2)));
    CHECK(!root_below(q, false, Rat(1, 10)));
    CHECK(root_below(q, true, Rat(9, 10)));
}

TEST_CASE("clockwise order around a disc") {
    // центre at origin, reference direction (1,0); exact boundary points can
    // be synthesized with delta = 0 (rational points)
    auto pt = [](long long x, long long y) {
        BoundaryPoint p;
        p.ax = Rat(x);
        p.ay = Rat(y);
        p.bx = p.by = Rat(0);
        p.delta = Rat(0);
        return p;
    };
    ClockwiseOrder cw(Rat(0), Rat(0), Rat(1), Rat(0));
    BoundaryPoint east = pt(5, 0), south = pt(0, -5), west = pt(-5, 0), north = pt(0, 5);
    CHECK(cw.on_reference_ray(east));
    CHECK(!cw.on_reference_ray(west));
    // clockwise from east: south, west, north
    CHECK(cw.less(south, west));
    CHECK(cw.less(west, north));
    CHECK(cw.less(south, north));
    CHECK(!cw.less(north, south));

    // irrational points from an actual chord agree with their approximations
    Disc disc{Rat(0), Rat(0), Rat(5)};
    SegmentDiscQuadratic q = segment_disc_quadratic({-9, 1}, {9, 1}, disc);
    BoundaryPoint left = boundary_point({-9, 1}, {9, 1}, q, false);
    BoundaryPoint right = boundary_point({-9, 1}, {9, 1}, q, true);
    CHECK(left.approx()[0] < 0);
    CHECK(right.approx()[0] > 0);
    // clockwise from (1,0): the right crossing (upper half, near east) comes
    // after going through south/west; the left one is further along
    ClockwiseOrder cw2(Rat(0), Rat(0), Rat(1), Rat(0));
    CHECK(cw2.less(right, left) != cw2.less(left, right)); // strict order
}

TEST_CASE("reference direction grid") {
    auto dirs = reference_directions(30);
    CHECK(dirs.size() == 30);
    CHECK(dirs[0] == std::make_pair(1LL, 0LL));
    for (auto [dx, dy] : dirs) CHECK((dx != 0 || dy != 0));
    // all distinct as directions
    for (std::size_t i = 0; i < dirs.size(); ++i)
        for (std::size_t j = i + 1; j < dirs.size(); ++j) {
            long long cross = dirs[i].first * dirs[j].second - dirs[i].second * dirs[j].first;
            long long dot = dirs[i].first * dirs[j].first + dirs[i].second * dirs[j].second;
            CHECK((cross != 0 || dot < 0));
        }
}
