#include "poncelet/locus.hpp"

#include <cmath>

namespace poncelet {

Polyline orthic_vertex_locus(const PonceletConfig& cfg, int n) {
    if (cfg.scenario != Scenario::CenterCoincident)
        throw UnsupportedScenarioError("orthic vertex locus requires the center scenario");
    if (n < 16) throw DomainError("need at least 16 samples");
    const double R = cfg.circle.radius;
    const double c = conic_linear_eccentricity(cfg.conic);
    const double sp = R * R + c * c;
    const double sm = R * R - c * c;
    Polyline out;
    out.closed = true;
    out.points.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double th = two_pi * i / n;
        const double cs = std::cos(th), sn = std::sin(th);
        const double den = 2.0 * R * R * (sp * sp - 4.0 * R * R * c * c * cs * cs);
        const double fx = -R * cs * sp * (sm * sm - 4.0 * R * R * c * c * sn * sn) / den;
        const double fy = -R * sn * sm * (sp * sp + 4.0 * R * R * c * c * cs * cs) / den;
        out.points.push_back({fx, fy});
    }
    return out;
}

double cassini_implicit_residual(double R, double c, Point p, CassiniVariant variant) {
    const double r2 = p.x * p.x + p.y * p.y;
    const double diff = p.x * p.x - p.y * p.y;
    if (variant == CassiniVariant::ConstantProduct)
        return r2 * r2 - (std::pow(R, 4) - std::pow(c, 4) + 2.0 * c * c * diff);
    return r2 * r2 - 2.0 * R * R * r2 - 2.0 * c * c * diff + 2.0 * R * R * c * c +
           std::pow(c, 4);
}

Polyline cassini_locus(double R, double c, int n, CassiniVariant variant) {
    if (n < 16) throw DomainError("need at least 16 samples");
    Polyline out;
    out.closed = true;
    auto emit = [&](double r2, double phi) {
        if (r2 < 0.0) return;
        const double r = std::sqrt(r2);
        out.points.push_back({r * std::cos(phi), r * std::sin(phi)});
    };
    if (variant == CassiniVariant::ConstantProduct) {
        for (int i = 0; i < n; ++i) {
            const double phi = two_pi * i / n;
            const double cc = c * c * std::cos(2.0 * phi);
            const double rad = cc * cc + std::pow(R, 4) - std::pow(c, 4);
            if (rad < 0.0) continue; // lemniscate lobes
            emit(cc + std::sqrt(rad), phi);
        }
        return out;
    }
    // major-axis locus: both branches of the quadratic in r^2
    for (int branch = 0; branch < 2; ++branch) {
        for (int i = 0; i < n; ++i) {
            const double phi = two_pi * i / n;
            const double half = R * R + c * c * std::cos(2.0 * phi);
            const double rad = half * half - (2.0 * R * R * c * c + std::pow(c, 4));
            if (rad < 0.0) continue;
            emit(branch == 0 ? half + std::sqrt(rad) : half - std::sqrt(rad), phi);
        }
    }
    return out;
}

TangentialLocus tangential_vertex_locus(const PonceletConfig& cfg) {
    const TangentialFamilyObjects obj = tangential_family_objects(cfg);
    return {obj.circumcircle, obj.circum_ellipse};
}

SceneDescription family_scene(const PonceletConfig& cfg, const std::vector<double>& thetas) {
    SceneDescription scene;
    scene.circles.push_back(cfg.circle);
    scene.conics.push_back(PlacedConic{cfg.conic, {0.0, 0.0}, 0.0});
    for (double th : thetas) scene.triangles.push_back(triangle_at(cfg, th).triangle);
    return scene;
}

} // namespace poncelet
