#pragma once

#include <array>

#include "poncelet/geom.hpp"

namespace poncelet {

struct Triangle {
    Point a;
    Point b;
    Point c;
};

// 2 * signed area (the orientation determinant); positive for counterclockwise.
double orientation_det(const Triangle& t);
double signed_area(const Triangle& t);
inline double area(const Triangle& t) { return std::abs(signed_area(t)); }

// side lengths opposite a, b, c
std::array<double, 3> side_lengths(const Triangle& t);
// interior cosines at a, b, c via the law of cosines
std::array<double, 3> angle_cosines(const Triangle& t);

enum class TriangleShape { Acute, Right, Obtuse };
// Largest squared side vs the sum of the other two, with a tolerance band
// around equality classified as Right.
TriangleShape classify_shape(const Triangle& t);

double longest_side_scale(const Triangle& t);
void require_nondegenerate(const Triangle& t); // throws DegenerateTriangleError

} // namespace poncelet
