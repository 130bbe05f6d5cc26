// Test-only oracles, independent of the library paths they check.
#pragma once

#include <cmath>
#include <functional>
#include <random>

#include "poncelet/triangle.hpp"

namespace oracles {

using poncelet::Point;
using poncelet::Triangle;

// parametric projection of p onto the line through q and r
inline Point project_onto(Point p, Point q, Point r) {
    const Point d = r - q;
    const double s = dot(p - q, d) / dot(d, d);
    return q + s * d;
}

// orthocenter as the intersection of two altitudes, built from scratch
inline Point altitude_orthocenter(const Triangle& t) {
    // altitude from a: passes a, direction normal to bc
    const Point n1 = t.c - t.b;
    const Point n2 = t.a - t.c;
    // solve n1 . (x - a) = 0, n2 . (x - b) = 0
    const double det = n1.x * n2.y - n1.y * n2.x;
    const double r1 = dot(n1, t.a);
    const double r2 = dot(n2, t.b);
    return {(r1 * n2.y - r2 * n1.y) / det, (n1.x * r2 - n2.x * r1) / det};
}

inline double shoelace(const Triangle& t) {
    return 0.5 * std::abs(cross(t.b - t.a, t.c - t.a));
}

// deterministic coarse grid + golden-section refinement
inline std::pair<double, double> golden_extremum(const std::function<double(double)>& f,
                                                 double lo, double hi, bool maximize,
                                                 int grid = 10000) {
    const double sgn = maximize ? 1.0 : -1.0;
    int best = 0;
    double best_v = sgn * f(lo);
    for (int i = 1; i <= grid; ++i) {
        const double v = sgn * f(lo + (hi - lo) * i / grid);
        if (v > best_v) { best_v = v; best = i; }
    }
    double a = lo + (hi - lo) * std::max(best - 1, 0) / grid;
    double b = lo + (hi - lo) * std::min(best + 1, grid) / grid;
    const double gr = 0.6180339887498949;
    for (int it = 0; it < 160; ++it) {
        const double x1 = b - gr * (b - a);
        const double x2 = a + gr * (b - a);
        if (sgn * f(x1) > sgn * f(x2)) b = x2; else a = x1;
    }
    const double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

// seeded triangles with a guaranteed minimum area, vertices in [-s, s]^2
inline Triangle random_triangle(std::mt19937& rng, double s = 3.0) {
    std::uniform_real_distribution<double> u(-s, s);
    while (true) {
        const Triangle t{{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}};
        if (shoelace(t) > 0.05 * s * s) return t;
    }
}

} // namespace oracles
