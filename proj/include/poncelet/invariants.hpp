#pragma once

#include <optional>
#include <string>
#include <vector>

#include "poncelet/family.hpp"
#include "poncelet/inellipse.hpp"

namespace poncelet {

// Scalar quantities of one triangle, computed from raw vertex geometry
// (angles via side lengths, never from |OH| closed forms).  Orthic-dependent
// fields are absent for right triangles; the inradius additionally requires
// an acute triangle and the polar radius an obtuse one.
struct InvariantRecord {
    double sin2_sum = 0.0;     // sin^2 A + sin^2 B + sin^2 C
    double cos_product = 0.0;  // cos A cos B cos C
    double ah_bh_ch = 0.0;     // |AH| |BH| |CH|
    double oh_distance = 0.0;  // |OH|
    double side_sq_sum = 0.0;  // |AB|^2 + |BC|^2 + |CA|^2
    std::optional<double> area_ratio_orthic;   // Area / Area(orthic)
    std::optional<double> orthic_inradius;     // acute only
    std::optional<double> orthic_angle_expr;   // eps cos aH + cos bH + cos gH
    std::optional<double> polar_radius;        // obtuse only
    std::optional<double> tangential_circumradius; // circumradius of tangential triangle
};

InvariantRecord invariants_of(const Triangle& t);

// Closed-form values the family should realize in the two special scenarios.
InvariantRecord expected_invariants(const PonceletConfig& cfg);

enum class Verdict { Invariant, NotInvariant };

struct InvariantReport {
    std::string name;
    int sample_count = 0;
    double mean = 0.0;
    double max_abs_deviation = 0.0;
    std::optional<double> expected;
    Verdict verdict = Verdict::NotInvariant;
};

// Relative constancy threshold used by sweep verdicts.
double& verdict_tolerance();

// Evaluate all invariants on n equispaced admissible samples; one report per
// invariant, sorted by name.  The focus-scenario acute family additionally
// reports the orthic incircle center coordinates.
std::vector<InvariantReport> sweep(const PonceletConfig& cfg, int n);

struct TangentialFamilyObjects {
    std::optional<CircleSpec> circumcircle; // focus scenario
    std::optional<PlacedConic> circum_ellipse; // center scenario
    double congruent_circumradius = 0.0;    // shared tangential circumradius
};

TangentialFamilyObjects tangential_family_objects(const PonceletConfig& cfg);

// Incenter from the vertices (used for the orthic incircle checks).
Point incenter(const Triangle& t);
double inradius(const Triangle& t);

} // namespace poncelet
