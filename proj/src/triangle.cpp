#include "poncelet/triangle.hpp"

#include <algorithm>

namespace poncelet {

double orientation_det(const Triangle& t) {
    return cross(t.b - t.a, t.c - t.a);
}

double signed_area(const Triangle& t) { return 0.5 * orientation_det(t); }

std::array<double, 3> side_lengths(const Triangle& t) {
    return {dist(t.b, t.c), dist(t.c, t.a), dist(t.a, t.b)};
}

std::array<double, 3> angle_cosines(const Triangle& t) {
    const auto [sa, sb, sc] = side_lengths(t);
    return {(sb * sb + sc * sc - sa * sa) / (2.0 * sb * sc),
            (sa * sa + sc * sc - sb * sb) / (2.0 * sa * sc),
            (sa * sa + sb * sb - sc * sc) / (2.0 * sa * sb)};
}

double longest_side_scale(const Triangle& t) {
    const auto s = side_lengths(t);
    return std::max({s[0], s[1], s[2]});
}

TriangleShape classify_shape(const Triangle& t) {
    require_nondegenerate(t);
    auto s = side_lengths(t);
    std::sort(s.begin(), s.end());
    const double gap = s[2] * s[2] - s[0] * s[0] - s[1] * s[1];
    const double tol = quad_tol(s[2]);
    if (gap > tol) return TriangleShape::Obtuse;
    if (gap < -tol) return TriangleShape::Acute;
    return TriangleShape::Right;
}

void require_nondegenerate(const Triangle& t) {
    const double scale = std::max({norm(t.a), norm(t.b), norm(t.c),
                                   longest_side_scale(t)});
    if (std::abs(orientation_det(t)) <= quad_tol(scale))
        throw DegenerateTriangleError("triangle vertices are collinear");
}

} // namespace poncelet
