#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "poncelet/family.hpp"

namespace poncelet {

struct Extremum {
    double x = 0.0;
    double area = 0.0;
};

// Area of the family triangle as a function of one vertex's x-coordinate,
// together with its closed-form extrema.  The minimum is absent when the
// family degenerates toward an arc endpoint (focus-hyperbola and obtuse
// center families).
struct AreaProfile {
    Scenario scenario = Scenario::CenterCoincident;
    std::pair<double, double> domain;
    std::function<double(double)> f;
    std::vector<double> critical_points;
    Extremum max;
    std::optional<Extremum> min;
};

std::pair<double, double> area_domain(const PonceletConfig& cfg);
double area_function(const PonceletConfig& cfg, double x);

struct PedalIntersections {
    std::vector<Point> points; // 0, 2 or 4, on both the circle and the pedal curve
};

// Intersections of the circumcircle with the pedal curve of the conic taken
// from the circumcenter; nonempty exactly for the obtuse families.
PedalIntersections pedal_intersections(const PonceletConfig& cfg);

AreaProfile extremal_triangles(const PonceletConfig& cfg);

// Deterministic coarse-grid + golden-section refinement over [lo, hi].
Extremum scan_extremum(const std::function<double(double)>& f, double lo, double hi,
                       bool maximize, int grid = 10000);

enum class SideName { AB, BC, CA };

// |PT| / |TQ| along the tangent side, from the Joachimsthal section equation
// (-S_PQ / S_QQ, sign-adjusted), cross-checked against the tangency point.
double tangency_ratio(const PonceletConfig& cfg, const FamilySample& sample, SideName side);

} // namespace poncelet
