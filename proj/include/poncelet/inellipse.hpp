#pragma once

#include "poncelet/centers.hpp"
#include "poncelet/family.hpp"
#include "poncelet/triangle.hpp"

namespace poncelet {

// Image of a standard-position conic under rotation then translation.
// Tangency against world-frame lines is tested after the inverse transform.
struct PlacedConic {
    CentralConicStd base;
    Point center;
    double rotation = 0.0; // radians in (-pi/2, pi/2]
};

Point to_conic_frame(const PlacedConic& pc, Point world);
Point from_conic_frame(const PlacedConic& pc, Point local);
Line line_to_conic_frame(const PlacedConic& pc, const Line& world);
double placed_line_tangency(const PlacedConic& pc, const Line& world);
double placed_point_residual(const PlacedConic& pc, Point world); // S_pp
Point placed_tangency_point(const PlacedConic& pc, const Line& world);
std::pair<Point, Point> placed_foci(const PlacedConic& pc);

// X -> M (X - origin_shift); inverse available whenever det(M) != 0.
struct AffineMap {
    double m11 = 1.0, m12 = 0.0, m21 = 0.0, m22 = 1.0;
    Point shift; // subtracted before the linear part
};

Point apply_map(const AffineMap& m, Point p);
Point apply_inverse(const AffineMap& m, Point p);

// Unique inscribed ellipse whose center is the circumcenter of t.
PlacedConic inellipse_centered_at_circumcenter(const Triangle& t);

// Unique inscribed central conic with foci at the circumcenter and
// orthocenter; ellipse iff t is acute, hyperbola iff obtuse.
PlacedConic conic_with_foci_O_H(const Triangle& t);

struct SteinerEllipses {
    PlacedConic inellipse;     // tangent to the three side midpoints
    PlacedConic circumellipse; // through the three vertices
    AffineMap map;             // sends t to the reference equilateral
};

SteinerEllipses steiner_ellipses(const Triangle& t);

// Standard-frame Poncelet configuration for a circle/placed-conic pair:
// translate the conic center to the origin and its focal axis onto x.
PonceletConfig standard_frame_config(const CircleSpec& circumcircle, const PlacedConic& pc);

} // namespace poncelet
