#include "poncelet/inellipse.hpp"

#include <cmath>
#include <complex>

namespace poncelet {

namespace {

Point rotate(Point p, double ang) {
    const double cs = std::cos(ang), sn = std::sin(ang);
    return {cs * p.x - sn * p.y, sn * p.x + cs * p.y};
}

double fold_half_turn(double ang) {
    // conics are symmetric under a half turn; report rotation in (-pi/2, pi/2]
    while (ang > pi_v / 2.0) ang -= pi_v;
    while (ang <= -pi_v / 2.0) ang += pi_v;
    return ang;
}

} // namespace

Point to_conic_frame(const PlacedConic& pc, Point world) {
    return rotate(world - pc.center, -pc.rotation);
}

Point from_conic_frame(const PlacedConic& pc, Point local) {
    return pc.center + rotate(local, pc.rotation);
}

Line line_to_conic_frame(const PlacedConic& pc, const Line& world) {
    const Line n = normalized(world);
    const Point nl = rotate({n.u, n.v}, -pc.rotation);
    const double wl = n.w + n.u * pc.center.x + n.v * pc.center.y;
    return {nl.x, nl.y, wl};
}

double placed_line_tangency(const PlacedConic& pc, const Line& world) {
    return line_conic_tangency(pc.base, line_to_conic_frame(pc, world));
}

double placed_point_residual(const PlacedConic& pc, Point world) {
    const Point p = to_conic_frame(pc, world);
    return joachimsthal(pc.base, p, p);
}

Point placed_tangency_point(const PlacedConic& pc, const Line& world) {
    return from_conic_frame(pc, tangency_point(pc.base, line_to_conic_frame(pc, world)));
}

std::pair<Point, Point> placed_foci(const PlacedConic& pc) {
    const ConicParams p = conic_params(pc.base);
    return {from_conic_frame(pc, p.foci.first), from_conic_frame(pc, p.foci.second)};
}

Point apply_map(const AffineMap& m, Point p) {
    const Point q = p - m.shift;
    return {m.m11 * q.x + m.m12 * q.y, m.m21 * q.x + m.m22 * q.y};
}

Point apply_inverse(const AffineMap& m, Point p) {
    const double det = m.m11 * m.m22 - m.m12 * m.m21;
    return Point{(m.m22 * p.x - m.m12 * p.y) / det,
                 (-m.m21 * p.x + m.m11 * p.y) / det} +
           m.shift;
}

PlacedConic inellipse_centered_at_circumcenter(const Triangle& t) {
    if (classify_shape(t) == TriangleShape::Right)
        throw RightTriangleError("no circumcenter-centered inellipse for a right triangle");
    const CenterSet cs = center_set(t);
    const double c2 = cs.R * dist(cs.O, cs.H); // linear eccentricity squared
    const double a = (cs.R * cs.R + c2) / (2.0 * cs.R);
    const double b = std::abs(cs.R * cs.R - c2) / (2.0 * cs.R);

    // axis direction from the complex root formula; counterclockwise labels
    Triangle s = t;
    if (orientation_det(s) < 0.0) std::swap(s.b, s.c);
    const Point ao = s.a - cs.O, bo = s.b - cs.O, co = s.c - cs.O;
    const std::complex<double> za{ao.x, ao.y}, zb{bo.x, bo.y}, zc{co.x, co.y};
    const double d = orientation_det(s);
    const double l = 2.0 * cross(bo, co) - d;
    const double m = -2.0 * cross(ao, co) - d;
    const double n = 2.0 * cross(ao, bo) - d;
    const std::complex<double> qa{-d, 0.0};
    const std::complex<double> qb = l * (zb + zc) + m * (zc + za) + n * (za + zb);
    const std::complex<double> qc = l * zb * zc + m * zc * za + n * za * zb;
    const std::complex<double> ratio = std::sqrt(qb * qb - 4.0 * qa * qc) / qa;
    double theta;
    if (std::abs(ratio.real()) < relative_tolerance() * std::abs(ratio))
        theta = pi_v / 2.0;
    else
        theta = std::atan(ratio.imag() / ratio.real());
    return {{a * a, b * b}, cs.O, theta};
}

PlacedConic conic_with_foci_O_H(const Triangle& t) {
    if (classify_shape(t) == TriangleShape::Right)
        throw DegenerateConicError("R = 2c for a right triangle: no such central conic exists");
    const CenterSet cs = center_set(t);
    const double c = 0.5 * dist(cs.O, cs.H);
    const double alpha = cs.R * cs.R / 4.0;
    const double beta = alpha - c * c; // sign decides ellipse vs hyperbola
    double rot = 0.0;
    if (c > length_tol(cs.R))
        rot = fold_half_turn(std::atan2(cs.H.y - cs.O.y, cs.H.x - cs.O.x));
    return {{alpha, beta}, 0.5 * (cs.O + cs.H), rot};
}

SteinerEllipses steiner_ellipses(const Triangle& t) {
    require_nondegenerate(t);
    const double d = orientation_det(t);
    const Point g = (1.0 / 3.0) * (t.a + t.b + t.c);
    const double rt3 = std::sqrt(3.0);

    AffineMap m;
    m.shift = t.a;
    m.m11 = -1.5 * (g.y - t.c.y) / d;
    m.m12 = 1.5 * (g.x - t.c.x) / d;
    m.m21 = 0.5 * rt3 * (t.a.y - t.b.y) / d;
    m.m22 = -0.5 * rt3 * (t.a.x - t.b.x) / d;

    // preimage of a circle |q - q0| = r is (p - p0)^T M^T M (p - p0) = r^2
    const double s11 = m.m11 * m.m11 + m.m21 * m.m21;
    const double s12 = m.m11 * m.m12 + m.m21 * m.m22;
    const double s22 = m.m12 * m.m12 + m.m22 * m.m22;
    const double half_tr = 0.5 * (s11 + s22);
    const double det_s = s11 * s22 - s12 * s12;
    const double gap = std::sqrt(std::max(half_tr * half_tr - det_s, 0.0));
    const double lam_min = half_tr - gap;
    const double lam_max = half_tr + gap;
    double rot = 0.0;
    if (gap > relative_tolerance() * half_tr)
        rot = fold_half_turn(0.5 * std::atan2(2.0 * s12, s11 - s22) + pi_v / 2.0);

    auto build = [&](double r) {
        return PlacedConic{{r * r / lam_min, r * r / lam_max}, g, rot};
    };
    SteinerEllipses se;
    se.inellipse = build(rt3 / 6.0);
    se.circumellipse = build(rt3 / 3.0);
    se.map = m;
    return se;
}

PonceletConfig standard_frame_config(const CircleSpec& circumcircle, const PlacedConic& pc) {
    const Point oc = to_conic_frame(pc, circumcircle.center);
    return config_from_pair({oc, circumcircle.radius}, pc.base);
}

} // namespace poncelet
