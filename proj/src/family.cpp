#include "poncelet/family.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace poncelet {

double conic_linear_eccentricity(const CentralConicStd& conic) {
    const ConicParams p = conic_params(conic);
    if (p.kind == ConicKind::Ellipse && p.foci.first.y != 0.0)
        throw UnsupportedScenarioError("focal axis must lie on the x-axis");
    return p.c;
}

double check_criterion(const CircleSpec& circle, const CentralConicStd& conic) {
    const ConicParams p = conic_params(conic);
    const double R = circle.radius;
    const double dp = dist(circle.center, p.foci.first);
    const double dm = dist(circle.center, p.foci.second);
    const double eps = p.kind == ConicKind::Ellipse ? 1.0 : -1.0;
    return (R * R - dp * dp) * (R * R - dm * dm) - 4.0 * eps * p.b * p.b * R * R;
}

namespace {

Scenario detect_scenario(Point center, double R, double c) {
    const double tol = length_tol(R);
    if (norm(center) < tol) return Scenario::CenterCoincident;
    if (dist(center, {c, 0.0}) < tol || dist(center, {-c, 0.0}) < tol)
        return Scenario::FocusCoincident;
    return Scenario::General;
}

PonceletConfig finish_config(Point center, double R, const CentralConicStd& conic) {
    PonceletConfig cfg;
    cfg.circle = {center, R};
    cfg.conic = conic;
    const double c = conic_linear_eccentricity(conic);
    cfg.d_plus = dist(center, {c, 0.0});
    cfg.d_minus = dist(center, {-c, 0.0});
    cfg.scenario = detect_scenario(center, R, c);
    const double res = check_criterion(cfg.circle, cfg.conic);
    if (std::abs(res) > quad_tol(R * R))
        throw InfeasibleConfigError("pair fails the inscription criterion");
    return cfg;
}

} // namespace

PonceletConfig config_from_center(Point center, double R, double c) {
    if (!(R > 0.0) || c < 0.0)
        throw InfeasibleConfigError("need R > 0 and c >= 0");
    const double dp2 = dist(center, {c, 0.0}) * dist(center, {c, 0.0});
    const double dm2 = dist(center, {-c, 0.0}) * dist(center, {-c, 0.0});
    const double beta = (R * R - dp2) * (R * R - dm2) / (4.0 * R * R);
    if (std::abs(beta) <= quad_tol(R))
        throw DegenerateConicError("criterion forces beta = 0: no such central conic exists");
    const double alpha = beta + c * c;
    if (!(alpha > 0.0))
        throw DegenerateConicError("criterion forces alpha <= 0");
    return finish_config(center, R, {alpha, beta});
}

PonceletConfig make_config(double R, double c, Scenario scenario) {
    if (scenario == Scenario::CenterCoincident) {
        if (std::abs(R - c) <= length_tol(R))
            throw DegenerateConicError("R = c: no such central conic exists");
        return config_from_center({0.0, 0.0}, R, c);
    }
    if (scenario == Scenario::FocusCoincident) {
        if (std::abs(R - 2.0 * c) <= length_tol(R))
            throw DegenerateConicError("R = 2c: no such central conic exists");
        return config_from_center({c, 0.0}, R, c);
    }
    throw UnsupportedScenarioError("make_config handles the two special scenarios");
}

PonceletConfig config_from_pair(const CircleSpec& circle, const CentralConicStd& conic) {
    if (!(circle.radius > 0.0)) throw InfeasibleConfigError("circle radius must be positive");
    return finish_config(circle.center, circle.radius, conic);
}

bool theta_admissible(const PonceletConfig& cfg, double theta) {
    const Point a = cfg.circle.center +
                    cfg.circle.radius * Point{std::cos(theta), std::sin(theta)};
    return tangent_discriminant(cfg.conic, a) > quad_tol(cfg.circle.radius * cfg.circle.radius);
}

namespace {

std::vector<std::pair<double, double>> scan_arcs(const PonceletConfig& cfg) {
    // pointwise admissibility scan with bisection refinement of the endpoints
    const int n = 1440;
    std::vector<bool> ok(n);
    for (int i = 0; i < n; ++i) ok[i] = theta_admissible(cfg, two_pi * i / n);
    if (std::all_of(ok.begin(), ok.end(), [](bool b) { return b; }))
        return {{0.0, two_pi}};
    auto refine = [&](double lo, double hi, bool lo_ok) {
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (theta_admissible(cfg, mid) == lo_ok) lo = mid; else hi = mid;
        }
        return 0.5 * (lo + hi);
    };
    std::vector<std::pair<double, double>> arcs;
    int start = -1;
    for (int i = 0; i < n; ++i)
        if (!ok[i] && ok[(i + 1) % n]) { start = i; break; }
    if (start < 0) return {}; // nothing admissible
    for (int i = start + 1; i <= start + n;) {
        if (!ok[i % n]) { ++i; continue; }
        int j = i;
        while (ok[(j + 1) % n] && j < i + n) ++j; // run [i, j] admissible
        const double lo = refine(two_pi * (i - 1) / n, two_pi * i / n, false);
        const double hi = refine(two_pi * j / n, two_pi * (j + 1) / n, true);
        const double lo_w = wrap_angle(lo);
        double hi_w = wrap_angle(hi);
        if (hi_w <= lo_w) hi_w += two_pi;
        arcs.emplace_back(lo_w, hi_w);
        i = j + 2;
    }
    std::sort(arcs.begin(), arcs.end());
    return arcs;
}

} // namespace

FamilyClassification admissible_arcs(const PonceletConfig& cfg) {
    FamilyClassification fc;
    const ConicParams p = conic_params(cfg.conic);
    fc.conic_kind = p.kind;
    const double R = cfg.circle.radius;
    const double c = p.c;

    if (cfg.scenario == Scenario::CenterCoincident) {
        fc.triangle_kind = R > c ? TriangleKind::AllAcute : TriangleKind::AllObtuse;
        if (R > c) {
            fc.admissible_arcs = {{0.0, two_pi}};
            return fc;
        }
        // circle and ellipse cross in four points; the two arcs outside the
        // ellipse surround the co-vertices
        const double x0 = (R * R + c * c) * std::sqrt((R * R + c * c) * (3.0 * R * R - c * c)) /
                          (4.0 * R * R * c);
        const double y0 = (c * c - R * R) * std::sqrt((c * c - R * R) * (3.0 * R * R + c * c)) /
                          (4.0 * R * R * c);
        const double phi = std::atan2(y0, x0);
        fc.admissible_arcs = {{phi, pi_v - phi}, {pi_v + phi, two_pi - phi}};
        fc.boundary_points = {{x0, y0}, {-x0, y0}, {-x0, -y0}, {x0, -y0}};
        return fc;
    }
    if (cfg.scenario == Scenario::FocusCoincident) {
        fc.triangle_kind = p.kind == ConicKind::Ellipse ? TriangleKind::AllAcute
                                                        : TriangleKind::AllObtuse;
        if (p.kind == ConicKind::Ellipse) {
            fc.admissible_arcs = {{0.0, two_pi}};
            return fc;
        }
        // hyperbola: single arc on the side of the center
        const double cs = cfg.circle.center.x > 0.0 ? c : -c; // signed focus position
        const double xb = 3.0 * R * R / (4.0 * cs);
        const double yb = std::sqrt(-(R - 2.0 * c) * (R + 2.0 * c) * (3.0 * R - 2.0 * c) *
                                    (3.0 * R + 2.0 * c)) /
                          (4.0 * std::abs(cs));
        const double phi = wrap_angle(std::atan2(yb, xb - cfg.circle.center.x));
        if (cfg.circle.center.x >= 0.0)
            fc.admissible_arcs = {{phi, two_pi - phi}}; // arc through pi
        else
            fc.admissible_arcs = {{two_pi - phi, two_pi + phi}}; // arc through 0
        fc.boundary_points = {{xb, yb}, {xb, -yb}};
        return fc;
    }
    fc.admissible_arcs = scan_arcs(cfg);
    return fc;
}

std::vector<double> admissible_thetas(const PonceletConfig& cfg, int n) {
    const auto fc = admissible_arcs(cfg);
    double total = 0.0;
    for (const auto& [lo, hi] : fc.admissible_arcs) total += hi - lo;
    if (total <= 0.0) return {};
    std::vector<double> out;
    out.reserve(n);
    if (fc.admissible_arcs.size() == 1 && total >= two_pi - 1e-15) {
        for (int i = 0; i < n; ++i) out.push_back(two_pi * i / n);
        return out;
    }
    int assigned = 0;
    for (size_t k = 0; k < fc.admissible_arcs.size(); ++k) {
        const auto& [lo, hi] = fc.admissible_arcs[k];
        const int m = k + 1 == fc.admissible_arcs.size()
                          ? n - assigned
                          : static_cast<int>(std::lround(n * (hi - lo) / total));
        for (int i = 0; i < m; ++i)
            out.push_back(wrap_angle(lo + (hi - lo) * (i + 0.5) / m));
        assigned += m;
    }
    std::sort(out.begin(), out.end());
    return out;
}

FamilySample triangle_at(const PonceletConfig& cfg, double theta) {
    const double R = cfg.circle.radius;
    const Point a = cfg.circle.center + R * Point{std::cos(theta), std::sin(theta)};
    if (!theta_admissible(cfg, theta)) {
        const auto fc = admissible_arcs(cfg);
        throw InadmissibleVertexError("vertex angle " + std::to_string(theta) +
                                          " lies outside the admissible arcs",
                                      fc.admissible_arcs);
    }
    const auto tangents = tangents_from_point(cfg.conic, a);
    if (tangents.size() != 2) {
        const auto fc = admissible_arcs(cfg);
        throw InadmissibleVertexError("vertex does not admit two tangents",
                                      fc.admissible_arcs);
    }
    Point p1 = circle_line_second_intersection(cfg.circle, tangents[0], a);
    Point p2 = circle_line_second_intersection(cfg.circle, tangents[1], a);
    // label B as the vertex met first when walking counterclockwise from A
    auto ccw_offset = [&](Point p) {
        return wrap_angle(std::atan2(p.y - cfg.circle.center.y, p.x - cfg.circle.center.x) -
                          theta);
    };
    if (ccw_offset(p1) > ccw_offset(p2)) std::swap(p1, p2);
    FamilySample s;
    s.theta = wrap_angle(theta);
    s.triangle = {a, p1, p2};
    require_nondegenerate(s.triangle);
    s.closure_residual = std::abs(line_conic_tangency(cfg.conic, line_through(p1, p2)));
    return s;
}

CircleSpec orthocenter_circle(const PonceletConfig& cfg) {
    const Point center = -1.0 * cfg.circle.center; // reflection about the conic center
    double radius = cfg.d_plus * cfg.d_minus / cfg.circle.radius;
    if (cfg.scenario == Scenario::FocusCoincident) radius = 0.0;
    return {center, radius};
}

FamilyClassification classify(const PonceletConfig& cfg) {
    if (cfg.scenario == Scenario::General)
        throw UnsupportedScenarioError("classification covers the two special scenarios");
    const ConicParams p = conic_params(cfg.conic);
    const double R = cfg.circle.radius;
    const double c = p.c;
    if (cfg.scenario == Scenario::CenterCoincident) {
        if (!(3.0 * R * R > c * c))
            throw InfeasibleConfigError("3R^2 > c^2 fails for a center-coincident pair");
    } else {
        if (!(3.0 * R > 2.0 * c))
            throw InfeasibleConfigError("3R > 2c fails for a focus-coincident pair");
    }
    FamilyClassification fc = admissible_arcs(cfg);
    // focus-position test: ellipse iff both foci on the same side of the circle
    const bool in_p = cfg.d_plus < R, in_m = cfg.d_minus < R;
    const ConicKind by_foci = (in_p == in_m) ? ConicKind::Ellipse : ConicKind::Hyperbola;
    if (by_foci != p.kind)
        throw GeometricInconsistencyError("focus positions contradict the conic kind");
    return fc;
}

AxisRelations axis_relations(const PonceletConfig& cfg) {
    const ConicParams p = conic_params(cfg.conic);
    const double R = cfg.circle.radius;
    AxisRelations rel;
    if (cfg.scenario == Scenario::CenterCoincident) {
        rel.R_from_axes = R > p.c ? p.a + p.b : p.a - p.b;
        rel.OH = p.c * p.c / R;
    } else if (cfg.scenario == Scenario::FocusCoincident) {
        rel.R_from_axes = 2.0 * p.a;
        rel.OH = 2.0 * p.c;
    } else {
        throw UnsupportedScenarioError("axis relations cover the two special scenarios");
    }
    if (std::abs(rel.R_from_axes - R) > length_tol(R))
        throw GeometricInconsistencyError("axis relation does not reproduce the circumradius");
    return rel;
}

} // namespace poncelet
