#pragma once

#include <vector>

#include "poncelet/centers.hpp"
#include "poncelet/triangle.hpp"

namespace poncelet {

enum class Scenario { CenterCoincident, FocusCoincident, General };
enum class TriangleKind { AllAcute, AllObtuse };

// A circumcircle paired with an inscribed central conic in standard position.
// d_plus / d_minus are the distances from the circle center to the foci
// (+c, 0) and (-c, 0); they are derived, never stored independently.
struct PonceletConfig {
    CircleSpec circle;
    CentralConicStd conic;
    double d_plus = 0.0;
    double d_minus = 0.0;
    Scenario scenario = Scenario::General;
};

// (R^2 - d+^2)(R^2 - d-^2) - 4 eps b^2 R^2; admissible iff ~0.
double check_criterion(const CircleSpec& circle, const CentralConicStd& conic);
inline double check_criterion(const PonceletConfig& cfg) {
    return check_criterion(cfg.circle, cfg.conic);
}

// Circumcenter at the conic center (circle at origin) or at the focus (c, 0).
PonceletConfig make_config(double R, double c, Scenario scenario);

// Admissible conic for an arbitrary circumcenter: beta from the criterion,
// alpha = beta + c^2.  Detects the special scenarios.
PonceletConfig config_from_center(Point center, double R, double c);

// Validates an explicit pair (criterion residual, focal axis on x).
PonceletConfig config_from_pair(const CircleSpec& circle, const CentralConicStd& conic);

struct FamilySample {
    double theta = 0.0; // angle of vertex A on the circle, in [0, 2*pi)
    Triangle triangle;  // (A, B, C) ordered counterclockwise starting at A
    double closure_residual = 0.0;
};

struct FamilyClassification {
    ConicKind conic_kind = ConicKind::Ellipse;
    TriangleKind triangle_kind = TriangleKind::AllAcute;
    std::vector<std::pair<double, double>> admissible_arcs; // open theta intervals
    std::vector<Point> boundary_points;                     // on circle and conic
    int right_triangle_count_bound = 0;
};

// Arcs of vertex angles that admit a circumscribing triangle.  Closed-form
// for the two special scenarios, pointwise scan for general circumcenters.
FamilyClassification admissible_arcs(const PonceletConfig& cfg);

// n sample angles spread across the admissible arcs (arc endpoints excluded).
std::vector<double> admissible_thetas(const PonceletConfig& cfg, int n);

bool theta_admissible(const PonceletConfig& cfg, double theta);

// Place vertex A at angle theta, draw its two conic tangents, intersect them
// with the circle, and report the unforced tangency of the closing side.
FamilySample triangle_at(const PonceletConfig& cfg, double theta);

// Locus of orthocenters across the family (radius 0 in the focus scenario).
CircleSpec orthocenter_circle(const PonceletConfig& cfg);

// Scenario classification with the feasibility inequalities enforced.
FamilyClassification classify(const PonceletConfig& cfg);

struct AxisRelations {
    double R_from_axes = 0.0;
    double OH = 0.0;
};

AxisRelations axis_relations(const PonceletConfig& cfg);

double conic_linear_eccentricity(const CentralConicStd& conic);

} // namespace poncelet
