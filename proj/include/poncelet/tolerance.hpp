#pragma once

namespace poncelet {

// Single relative tolerance shared by the whole library.  Length comparisons
// scale it by the configuration's circumradius, quadratic-form residuals by
// its square.  Set it before launching parallel work; everything else is pure.
double& relative_tolerance();

inline double length_tol(double scale) { return relative_tolerance() * scale; }
inline double quad_tol(double scale) { return relative_tolerance() * scale * scale; }

} // namespace poncelet
