#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "poncelet/errors.hpp"
#include "poncelet/tolerance.hpp"

namespace poncelet {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
inline Point operator*(Point a, double s) { return s * a; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return norm(a - b); }
inline bool finite(Point a) { return std::isfinite(a.x) && std::isfinite(a.y); }

constexpr double pi_v = 3.1415926535897932384626433832795;
constexpr double two_pi = 6.283185307179586476925286766559;

// wrap an angle into [0, 2*pi)
inline double wrap_angle(double a) {
    a = std::fmod(a, two_pi);
    return a < 0.0 ? a + two_pi : a;
}

// The locus u*x + v*y + w = 0 with (u, v) a unit normal after normalize().
struct Line {
    double u = 0.0;
    double v = 0.0;
    double w = 0.0;
};

// Unit normal, sign canonicalized (u > 0, or u == 0 and v > 0).
Line normalized(const Line& l);
Line line_through(Point p, Point q);
inline double line_eval(const Line& l, Point p) { return l.u * p.x + l.v * p.y + l.w; }
bool same_line(const Line& a, const Line& b, double tol);
Point line_intersection(const Line& a, const Line& b); // throws on parallel

struct CircleSpec {
    Point center;
    double radius = 0.0;
};

enum class ConicKind { Ellipse, Hyperbola };

// Central conic x^2/alpha + y^2/beta = 1; ellipse iff beta > 0.
struct CentralConicStd {
    double alpha = 1.0;
    double beta = 1.0;
};

struct ConicParams {
    ConicKind kind = ConicKind::Ellipse;
    double a = 0.0; // semi-major (ellipse) / transverse semi-axis (hyperbola)
    double b = 0.0; // semi-minor / conjugate semi-axis
    double c = 0.0; // linear eccentricity
    double e = 0.0; // eccentricity
    std::pair<Point, Point> foci;
};

ConicParams conic_params(const CentralConicStd& conic);
CentralConicStd conic_from_params(const ConicParams& p); // exact round-trip

// Joachimsthal symbol S_PQ = xP*xQ/alpha + yP*yQ/beta - 1.
double joachimsthal(const CentralConicStd& conic, Point p, Point q);

// Signed two-tangent discriminant: positive iff two real tangent lines pass
// through p (exterior of an ellipse, the center-side region of a hyperbola).
double tangent_discriminant(const CentralConicStd& conic, Point p);

Line polar_line(const CentralConicStd& conic, Point p);

// Tangent lines through p, sorted by the angle of their tangency point
// measured counterclockwise from the positive x-axis.  0, 1 or 2 lines.
std::vector<Line> tangents_from_point(const CentralConicStd& conic, Point p);

// alpha*u^2 + beta*v^2 - w^2 for a normalized line; zero iff tangent.
double line_conic_tangency(const CentralConicStd& conic, const Line& l);

// Pole of a tangent line = its tangency point.  Throws for lines through the
// center (hyperbola asymptotes have no finite tangency point).
Point tangency_point(const CentralConicStd& conic, const Line& l);

// The other intersection of l with the circle (equals p for a tangent line).
// Precondition: p on the circle and on l.
Point circle_line_second_intersection(const CircleSpec& circle, const Line& l, Point p);

} // namespace poncelet
