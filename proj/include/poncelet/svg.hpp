#pragma once

#include <string>

#include "poncelet/locus.hpp"

namespace poncelet {

// Standalone SVG 1.1 document.  Deterministic: fixed element ordering, fixed
// numeric precision, y-up via one top-level transform.
std::string render_svg(const SceneDescription& scene);

} // namespace poncelet
