// Two-panel SVG diagram: the Newton boundary staircase with its support
// points, and the canonically subdivided fan with labeled rays.  Coordinates
// are deterministic functions of the input.
#pragma once

#include <string>

#include "mixres/mixed_poly.hpp"

namespace mixres {

// Two variables, convenient germs only (UnsupportedDimension / NotConvenient).
std::string emit_svg(const MixedPolynomial& f);

}  // namespace mixres
