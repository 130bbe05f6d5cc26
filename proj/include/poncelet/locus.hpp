#pragma once

#include <optional>
#include <string>
#include <vector>

#include "poncelet/family.hpp"
#include "poncelet/inellipse.hpp"
#include "poncelet/invariants.hpp"

namespace poncelet {

struct Polyline {
    std::vector<Point> points;
    bool closed = false;
};

struct Label {
    Point at;
    std::string text;
};

struct SceneDescription {
    std::vector<CircleSpec> circles;
    std::vector<PlacedConic> conics;
    std::vector<Triangle> triangles;
    std::vector<Polyline> polylines;
    std::vector<Label> labels;
};

// Closed curve traced by the altitude foot H_A as the vertex angle sweeps a
// full turn (center-coincident scenario only).
Polyline orthic_vertex_locus(const PonceletConfig& cfg, int n);

enum class CassiniVariant {
    ConstantProduct, // (x^2+y^2)^2 = R^4 - c^4 + 2c^2 (x^2 - y^2)
    MajorAxisLocus   // (x^2+y^2)^2 - 2R^2(x^2+y^2) - 2c^2(x^2-y^2) + 2R^2c^2 + c^4 = 0
};

// Polar-form sampling of the circumcenter loci; angles without a real branch
// are skipped (the lemniscate regime splits into two lobes).
Polyline cassini_locus(double R, double c, int n,
                       CassiniVariant variant = CassiniVariant::ConstantProduct);

double cassini_implicit_residual(double R, double c, Point p, CassiniVariant variant);

struct TangentialLocus {
    std::optional<CircleSpec> circle;    // focus scenario
    std::optional<PlacedConic> ellipse;  // center scenario
};

TangentialLocus tangential_vertex_locus(const PonceletConfig& cfg);

// Scene assembly used by the CLI for figure-style SVG output.
SceneDescription family_scene(const PonceletConfig& cfg, const std::vector<double>& thetas);

} // namespace poncelet
