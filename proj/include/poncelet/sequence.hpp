#pragma once

#include <vector>

#include "poncelet/centers.hpp"
#include "poncelet/family.hpp"
#include "poncelet/inellipse.hpp"

namespace poncelet {

struct FociPair {
    Point f1;
    Point f2;
};

struct TowerEntry {
    Triangle triangle;
    FociPair foci;   // images of (O, H) under the level's homothety
    PlacedConic conic; // inscribed conic with those foci
};

// Iterated anticomplementary (ratio -2) or medial (ratio -1/2) triangles of t
// about its centroid, each circumscribing the homothety image of the conic
// with foci at the circumcenter and orthocenter of t.
std::vector<TowerEntry> homothetic_tower(const Triangle& t, double ratio_base, int n);

// Printed closed forms for the focus sequence; they drift from the homothety
// images from level 2 on (the coefficients stop summing to 1) and are kept
// only so the discrepancy stays documented and tested.
FociPair literal_focus_formulas(Point o, Point h, int n, double ratio_base);

struct SequenceState {
    int n = 1;
    double c = 0.0;
    double R = 0.0;
    double alpha = 0.0; // R^2/4
    double beta = 0.0;  // R^2/4 - c^2
};

PonceletConfig config_of(const SequenceState& s);

// Focus-scenario pairs mapped through the tangential-circle recurrence
//   c' = c (5R^2 - 4c^2) / (R^2 - 4c^2),  R' = 2R^3 / |R^2 - 4c^2|;
// c is kept nonnegative by mirroring across the y-axis when the sign flips.
std::vector<SequenceState> poncelet_iterate(double c, double R, int n);

enum class DynamicsForm {
    Reconciled,  // x' = x (5 - 4x^2) sgn(1 - 4x^2) / 2, matching the (c, R) map
    PaperLiteral // x' = x (5 - 4x^2) / (2 (1 - 4x^2))
};

// Orbit of x = c/R under the normalized iteration, x0 included as entry 1.
std::vector<double> dynamics_orbit(double x0, int n,
                                   DynamicsForm form = DynamicsForm::Reconciled);

} // namespace poncelet
