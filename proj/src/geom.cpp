#include "poncelet/geom.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace poncelet {

double& relative_tolerance() {
    static double tol = 1e-9;
    return tol;
}

Line normalized(const Line& l) {
    const double n = std::hypot(l.u, l.v);
    if (n == 0.0) throw GeometricInconsistencyError("line has zero normal");
    double s = 1.0 / n;
    if (l.u < 0.0 || (l.u == 0.0 && l.v < 0.0)) s = -s;
    return {l.u * s, l.v * s, l.w * s};
}

Line line_through(Point p, Point q) {
    Line l{-(q.y - p.y), q.x - p.x, 0.0};
    l.w = -(l.u * p.x + l.v * p.y);
    return normalized(l);
}

bool same_line(const Line& a, const Line& b, double tol) {
    const Line na = normalized(a), nb = normalized(b);
    return std::abs(na.u - nb.u) < tol && std::abs(na.v - nb.v) < tol &&
           std::abs(na.w - nb.w) < tol;
}

Point line_intersection(const Line& a, const Line& b) {
    const Line na = normalized(a), nb = normalized(b);
    const double det = na.u * nb.v - na.v * nb.u; // sin of the angle between normals
    if (std::abs(det) < relative_tolerance())
        throw GeometricInconsistencyError("lines are parallel");
    return {(-na.w * nb.v + nb.w * na.v) / det, (-na.u * nb.w + nb.u * na.w) / det};
}

ConicParams conic_params(const CentralConicStd& conic) {
    if (!(conic.alpha > 0.0) || conic.beta == 0.0 || !std::isfinite(conic.alpha) ||
        !std::isfinite(conic.beta))
        throw InvalidConicError("central conic requires alpha > 0 and beta != 0");
    ConicParams p;
    if (conic.beta > 0.0) {
        p.kind = ConicKind::Ellipse;
        if (conic.alpha >= conic.beta) {
            p.a = std::sqrt(conic.alpha);
            p.b = std::sqrt(conic.beta);
            p.c = std::sqrt(conic.alpha - conic.beta);
            p.foci = {{p.c, 0.0}, {-p.c, 0.0}};
        } else { // major axis on y
            p.a = std::sqrt(conic.beta);
            p.b = std::sqrt(conic.alpha);
            p.c = std::sqrt(conic.beta - conic.alpha);
            p.foci = {{0.0, p.c}, {0.0, -p.c}};
        }
    } else {
        p.kind = ConicKind::Hyperbola;
        p.a = std::sqrt(conic.alpha);
        p.b = std::sqrt(-conic.beta);
        p.c = std::sqrt(conic.alpha - conic.beta);
        p.foci = {{p.c, 0.0}, {-p.c, 0.0}};
    }
    p.e = p.a > 0.0 ? p.c / p.a : 0.0;
    return p;
}

CentralConicStd conic_from_params(const ConicParams& p) {
    if (p.kind == ConicKind::Hyperbola) return {p.a * p.a, -p.b * p.b};
    if (p.foci.first.y != 0.0) return {p.b * p.b, p.a * p.a}; // major on y
    return {p.a * p.a, p.b * p.b};
}

double joachimsthal(const CentralConicStd& conic, Point p, Point q) {
    return p.x * q.x / conic.alpha + p.y * q.y / conic.beta - 1.0;
}

double tangent_discriminant(const CentralConicStd& conic, Point p) {
    return conic.alpha * conic.beta * joachimsthal(conic, p, p);
}

Line polar_line(const CentralConicStd& conic, Point p) {
    const double u = p.x / conic.alpha;
    const double v = p.y / conic.beta;
    const double scale = std::sqrt(std::abs(conic.alpha)) + std::sqrt(std::abs(conic.beta));
    if (std::hypot(u, v) * scale < relative_tolerance())
        throw NoPolarError("polar of the conic center is empty");
    return normalized({u, v, -1.0});
}

double line_conic_tangency(const CentralConicStd& conic, const Line& l) {
    return conic.alpha * l.u * l.u + conic.beta * l.v * l.v - l.w * l.w;
}

Point tangency_point(const CentralConicStd& conic, const Line& l) {
    const Line n = normalized(l);
    const double scale = std::sqrt(std::abs(conic.alpha)) + std::sqrt(std::abs(conic.beta));
    if (std::abs(n.w) < relative_tolerance() * scale)
        throw GeometricInconsistencyError("tangency point of a central line is at infinity");
    return {-conic.alpha * n.u / n.w, -conic.beta * n.v / n.w};
}

std::vector<Line> tangents_from_point(const CentralConicStd& conic, Point p) {
    // Lines through p with normal (u, v): tangency demands
    //   (alpha - x^2) u^2 - 2 x y u v + (beta - y^2) v^2 = 0,
    // whose discriminant is alpha*beta*S_pp.
    const double qa = conic.alpha - p.x * p.x;
    const double qb = -p.x * p.y;
    const double qc = conic.beta - p.y * p.y;
    const double disc = qb * qb - qa * qc;
    const double scale2 = std::abs(conic.alpha) + std::abs(conic.beta) + p.x * p.x + p.y * p.y;
    const double tol = quad_tol(scale2); // disc has dimension length^4

    std::vector<Line> out;
    auto push = [&](double u, double v) {
        Line l{u, v, -(u * p.x + v * p.y)};
        out.push_back(normalized(l));
    };

    if (disc < -tol) return out; // no real tangent
    if (disc <= tol) {           // on the conic: unique tangent = polar
        out.push_back(polar_line(conic, p));
        return out;
    }
    const double sd = std::sqrt(disc);
    if (std::abs(qa) >= std::abs(qc)) {
        push((-qb + sd) / qa, 1.0);
        push((-qb - sd) / qa, 1.0);
    } else {
        push(1.0, (-qb + sd) / qc);
        push(1.0, (-qb - sd) / qc);
    }
    auto touch_angle = [&](const Line& l) {
        const double scale = std::sqrt(std::abs(conic.alpha)) + std::sqrt(std::abs(conic.beta));
        if (std::abs(l.w) < relative_tolerance() * scale)
            return wrap_angle(std::atan2(l.u, -l.v)); // asymptote: tangency at infinity
        return wrap_angle(std::atan2(-conic.beta * l.v / l.w, -conic.alpha * l.u / l.w));
    };
    if (touch_angle(out[0]) > touch_angle(out[1])) std::swap(out[0], out[1]);
    return out;
}

Point circle_line_second_intersection(const CircleSpec& circle, const Line& l, Point p) {
    const Line n = normalized(l);
    const double r = circle.radius;
    if (std::abs(line_eval(n, p)) > length_tol(std::max(r, 1.0)) ||
        std::abs(dist(p, circle.center) - r) > length_tol(std::max(r, 1.0)))
        throw GeometricInconsistencyError("point is not on both the line and the circle");
    const double d = line_eval(n, circle.center);
    const double h2 = r * r - d * d;
    if (h2 < -quad_tol(r))
        throw GeometricInconsistencyError("line misses the circle");
    const double h = std::sqrt(std::max(h2, 0.0));
    const Point foot = circle.center - d * Point{n.u, n.v};
    const Point t{-n.v, n.u};
    const Point q1 = foot + h * t;
    const Point q2 = foot - h * t;
    return dist(q1, p) >= dist(q2, p) ? q1 : q2;
}

} // namespace poncelet
