#pragma once

#include "poncelet/triangle.hpp"

namespace poncelet {

// Classical centers of one triangle.  Euler line bookkeeping:
// H = 3G - 2O, N = (O + H)/2, L = 2O - H.
struct CenterSet {
    Point O;        // circumcenter
    double R = 0.0; // circumradius
    Point H;        // orthocenter
    Point G;        // centroid
    Point N;        // nine-point center
    Point L;        // de Longchamps point
};

CenterSet center_set(const Triangle& t);

// Feet of the altitudes (H_A, H_B, H_C).  Requires an oblique triangle.
Triangle orthic_triangle(const Triangle& t);

// Vertexwise image under the homothety with the given center and ratio k.
Triangle homothety_image(const Triangle& t, Point center, double k);
Point homothety_point(Point x, Point center, double k);

// Polar triangle with respect to the circumcircle: pairwise intersections of
// the tangent lines at the vertices.  Right triangles give parallel polars.
Triangle tangential_triangle(const Triangle& t);

struct PolarCircle {
    Point center;        // the orthocenter
    double radius = 0.0; // radius^2 = |AH| |HH_A|, obtuse triangles only
};

PolarCircle polar_circle(const Triangle& t);

// (|AB|^2 + |BC|^2 + |CA|^2) - (9R^2 - |OH|^2); vanishes for every triangle.
double euler_identity_residual(const Triangle& t);

} // namespace poncelet
