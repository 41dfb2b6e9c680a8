#pragma once

#include <string>

#include "patchwork/chart.hpp"
#include "patchwork/subdivision.hpp"

namespace patchwork {

// Renders Delta_* (all four quadrant copies of the subdivision) with the
// glued curve and its nodes; 32 px per lattice unit, deterministic element
// order.
std::string render_svg(const Subdivision& sub, const GluedCurve& curve);
void write_svg(const std::string& path, const Subdivision& sub, const GluedCurve& curve);

}  // namespace patchwork
