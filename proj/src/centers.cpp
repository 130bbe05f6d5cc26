#include "poncelet/centers.hpp"

#include <algorithm>
#include <cmath>

namespace poncelet {

CenterSet center_set(const Triangle& t) {
    require_nondegenerate(t);
    // circumcenter from the two perpendicular-bisector equations
    const Point ab = t.b - t.a;
    const Point ac = t.c - t.a;
    const double det = cross(ab, ac);
    const double r1 = dot(ab, 0.5 * (t.a + t.b));
    const double r2 = dot(ac, 0.5 * (t.a + t.c));
    CenterSet cs;
    cs.O = {(r1 * ac.y - r2 * ab.y) / det, (ab.x * r2 - ac.x * r1) / det};
    cs.R = (dist(cs.O, t.a) + dist(cs.O, t.b) + dist(cs.O, t.c)) / 3.0;
    cs.G = (1.0 / 3.0) * (t.a + t.b + t.c);
    cs.H = 3.0 * cs.G - 2.0 * cs.O;
    cs.N = 0.5 * (cs.O + cs.H);
    cs.L = 2.0 * cs.O - cs.H;
    return cs;
}

namespace {

// Foot of the perpendicular from p onto line(q, r), written out on the
// normal equations so the same expression serves all three altitudes.
Point altitude_foot(Point p, Point q, Point r) {
    const double dx = q.x - r.x;
    const double dy = q.y - r.y;
    const double den = dx * dx + dy * dy;
    const double x = (dx * (p.x * dx + p.y * dy) - dy * (q.x * r.y - r.x * q.y)) / den;
    const double y = (dy * (p.y * dy + p.x * dx) - dx * (q.y * r.x - r.y * q.x)) / den;
    return {x, y};
}

} // namespace

Triangle orthic_triangle(const Triangle& t) {
    if (classify_shape(t) == TriangleShape::Right)
        throw RightTriangleError("orthic triangle of a right triangle is degenerate");
    return {altitude_foot(t.a, t.b, t.c), altitude_foot(t.b, t.c, t.a),
            altitude_foot(t.c, t.a, t.b)};
}

Point homothety_point(Point x, Point center, double k) {
    return center + k * (x - center);
}

Triangle homothety_image(const Triangle& t, Point center, double k) {
    if (k == 0.0) throw CollapseError("homothety ratio must be nonzero");
    return {homothety_point(t.a, center, k), homothety_point(t.b, center, k),
            homothety_point(t.c, center, k)};
}

Triangle tangential_triangle(const Triangle& t) {
    if (classify_shape(t) == TriangleShape::Right)
        throw RightTriangleError("tangential triangle undefined: parallel polars");
    const CenterSet cs = center_set(t);
    auto tangent_at = [&](Point v) {
        const Point n = (1.0 / cs.R) * (v - cs.O);
        return Line{n.x, n.y, -(n.x * v.x + n.y * v.y)};
    };
    const Line ta = tangent_at(t.a);
    const Line tb = tangent_at(t.b);
    const Line tc = tangent_at(t.c);
    return {line_intersection(tb, tc), line_intersection(ta, tc),
            line_intersection(ta, tb)};
}

PolarCircle polar_circle(const Triangle& t) {
    const TriangleShape shape = classify_shape(t);
    if (shape != TriangleShape::Obtuse)
        throw PolarCircleUndefinedError("polar circle requires an obtuse triangle");
    const CenterSet cs = center_set(t);
    const Triangle feet = orthic_triangle(t);
    const double pa = dist(t.a, cs.H) * dist(cs.H, feet.a);
    const double pb = dist(t.b, cs.H) * dist(cs.H, feet.b);
    const double pc = dist(t.c, cs.H) * dist(cs.H, feet.c);
    const double tol = quad_tol(cs.R);
    if (std::abs(pa - pb) > tol || std::abs(pb - pc) > tol)
        throw GeometricInconsistencyError("vertex products of the polar radius disagree");
    return {cs.H, std::sqrt((pa + pb + pc) / 3.0)};
}

double euler_identity_residual(const Triangle& t) {
    const CenterSet cs = center_set(t);
    const auto s = side_lengths(t);
    const double sum_sq = s[0] * s[0] + s[1] * s[1] + s[2] * s[2];
    const double oh = dist(cs.O, cs.H);
    return sum_sq - (9.0 * cs.R * cs.R - oh * oh);
}

} // namespace poncelet
