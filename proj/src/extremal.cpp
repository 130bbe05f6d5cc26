#include "poncelet/extremal.hpp"

#include <cmath>

namespace poncelet {

namespace {

double focus_scale(const PonceletConfig& cfg) {
    // signed focus position of the circle center
    return cfg.circle.center.x >= 0.0 ? 1.0 : -1.0;
}

} // namespace

std::pair<double, double> area_domain(const PonceletConfig& cfg) {
    const ConicParams p = conic_params(cfg.conic);
    const double R = cfg.circle.radius;
    const double c = p.c;
    if (cfg.scenario == Scenario::CenterCoincident) {
        if (R > c) return {-R, R};
        const double x0 = (R * R + c * c) *
                          std::sqrt((R * R + c * c) * (3.0 * R * R - c * c)) /
                          (4.0 * R * R * c);
        return {-x0, x0};
    }
    if (cfg.scenario == Scenario::FocusCoincident) {
        const double s = focus_scale(cfg);
        const double lo = s * c - R * s; // mirrored configs flip the interval
        const double hi = p.kind == ConicKind::Ellipse ? s * c + R * s
                                                       : s * 3.0 * R * R / (4.0 * c);
        return s > 0.0 ? std::make_pair(lo, hi) : std::make_pair(hi, lo);
    }
    throw UnsupportedScenarioError("area function covers the two special scenarios");
}

double area_function(const PonceletConfig& cfg, double x) {
    const auto [lo, hi] = area_domain(cfg);
    if (x < lo - length_tol(cfg.circle.radius) || x > hi + length_tol(cfg.circle.radius))
        throw DomainError("vertex x-coordinate outside the family's range");
    const ConicParams p = conic_params(cfg.conic);
    const double R = cfg.circle.radius;
    const double c = p.c;
    if (cfg.scenario == Scenario::CenterCoincident) {
        const double num1 = std::abs(std::pow(R * R - c * c, 2) -
                                     4.0 * (std::pow(R, 4) - c * c * x * x));
        const double rad = std::pow(R * R + c * c, 3) * (3.0 * R * R - c * c) -
                           16.0 * std::pow(R, 4) * c * c * x * x;
        const double den = 4.0 * R * R * (std::pow(R * R + c * c, 2) - 4.0 * c * c * x * x);
        return num1 * std::sqrt(std::max(rad, 0.0)) / den;
    }
    const double s = focus_scale(cfg);
    const double xs = s * x; // fold mirrored configs onto the focus at +c
    const double a = R / 2.0;
    const double e = 2.0 * c / R;
    const double root = 3.0 - 4.0 * e * xs / (a + e * xs);
    return a * std::abs((3.0 - e * e) * a + 2.0 * e * xs) * std::sqrt(std::max(root, 0.0));
}

PedalIntersections pedal_intersections(const PonceletConfig& cfg) {
    const ConicParams p = conic_params(cfg.conic);
    const double R = cfg.circle.radius;
    const double c = p.c;
    PedalIntersections out;
    if (cfg.scenario == Scenario::CenterCoincident) {
        if (R > c) return out; // acute family: pedal curve misses the circle
        const double xp = std::sqrt((R * R + c * c) * (3.0 * R * R - c * c)) / (2.0 * c);
        const double yp = std::sqrt((c * c - R * R) * (3.0 * R * R + c * c)) / (2.0 * c);
        out.points = {{xp, yp}, {-xp, yp}, {xp, -yp}, {-xp, -yp}};
        return out;
    }
    if (cfg.scenario == Scenario::FocusCoincident) {
        if (p.kind == ConicKind::Ellipse) return out;
        // divisor placed outside the root; the printed form puts it inside,
        // which fails the direct circle-circle intersection check
        const double s = focus_scale(cfg);
        const double xp = -s * (3.0 * R * R - 4.0 * c * c) / (8.0 * c);
        const double yp = std::sqrt(-(R - 2.0 * c) * (R + 2.0 * c) * (3.0 * R - 2.0 * c) *
                                    (3.0 * R + 2.0 * c)) /
                          (8.0 * c);
        out.points = {{xp, yp}, {xp, -yp}};
        return out;
    }
    throw UnsupportedScenarioError("pedal intersections cover the two special scenarios");
}

Extremum scan_extremum(const std::function<double(double)>& f, double lo, double hi,
                       bool maximize, int grid) {
    const double sign = maximize ? 1.0 : -1.0;
    int best = 0;
    double best_v = sign * f(lo);
    for (int i = 1; i <= grid; ++i) {
        const double v = sign * f(lo + (hi - lo) * i / grid);
        if (v > best_v) {
            best_v = v;
            best = i;
        }
    }
    double a = lo + (hi - lo) * std::max(best - 1, 0) / grid;
    double b = lo + (hi - lo) * std::min(best + 1, grid) / grid;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int it = 0; it < 120; ++it) {
        const double d = gr * (b - a);
        const double x1 = b - d;
        const double x2 = a + d;
        if (sign * f(x1) > sign * f(x2)) b = x2; else a = x1;
    }
    const double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

AreaProfile extremal_triangles(const PonceletConfig& cfg) {
    const ConicParams p = conic_params(cfg.conic);
    const double R = cfg.circle.radius;
    const double c = p.c;
    AreaProfile prof;
    prof.scenario = cfg.scenario;
    prof.domain = area_domain(cfg);
    prof.f = [cfg](double x) { return area_function(cfg, x); };

    if (cfg.scenario == Scenario::CenterCoincident) {
        const bool acute = R > c;
        prof.max = {0.0, std::pow(3.0 * R * R - c * c, 1.5) * std::sqrt(R * R + c * c) /
                             (4.0 * R * R)};
        prof.critical_points = {0.0};
        if (acute) {
            const double xm = (R * R + c * c) / (2.0 * R);
            prof.critical_points = {-xm, 0.0, xm};
            prof.min = Extremum{xm, std::pow(3.0 * R * R + c * c, 1.5) *
                                        std::sqrt(std::abs(R * R - c * c)) / (4.0 * R * R)};
        }
        return prof;
    }
    if (cfg.scenario == Scenario::FocusCoincident) {
        const double s = focus_scale(cfg);
        const double a = R / 2.0;
        const double e = 2.0 * c / R;
        const double max_area = a * a * std::sqrt(1.0 + e) * std::pow(3.0 - e, 1.5);
        if (p.kind == ConicKind::Ellipse) {
            // the max triangle has its apex closest to the other focus
            prof.max = {s * (c - R), max_area};
            prof.min = Extremum{s * (c + R),
                                a * a * std::sqrt(1.0 - e) * std::pow(3.0 + e, 1.5)};
            prof.critical_points = {-s * a, s * a};
        } else {
            prof.max = {s * (c - R), max_area};
            prof.critical_points = {s * a};
        }
        return prof;
    }
    throw UnsupportedScenarioError("extremal areas cover the two special scenarios");
}

double tangency_ratio(const PonceletConfig& cfg, const FamilySample& sample, SideName side) {
    Point p, q;
    switch (side) {
    case SideName::AB: p = sample.triangle.a; q = sample.triangle.b; break;
    case SideName::BC: p = sample.triangle.b; q = sample.triangle.c; break;
    case SideName::CA: p = sample.triangle.c; q = sample.triangle.a; break;
    }
    const double spq = joachimsthal(cfg.conic, p, q);
    const double sqq = joachimsthal(cfg.conic, q, q);
    if (std::abs(sqq) < relative_tolerance())
        throw SectionRatioError("second endpoint lies on the conic");
    const double lambda = -spq / sqq;
    const double ratio = std::abs(lambda);
    // cross-check against the actual tangency point of the side
    const Line l = line_through(p, q);
    if (std::abs(line_conic_tangency(cfg.conic, l)) >
        quad_tol(cfg.circle.radius * cfg.circle.radius))
        throw SectionRatioError("side is not tangent to the conic");
    const Point t = tangency_point(cfg.conic, l);
    const double seg = dot(t - p, q - t);
    if (seg < 0.0 && lambda > 0.0)
        throw SectionRatioError("tangency point falls outside the side with inconsistent signs");
    const double geometric = dist(p, t) / dist(t, q);
    if (std::abs(geometric - ratio) > length_tol(1.0 + ratio))
        throw SectionRatioError("section equation and tangency point disagree");
    return ratio;
}

} // namespace poncelet
