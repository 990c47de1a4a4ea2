#pragma once

#include <string>

#include "latdiss/dissect.hpp"
#include "latdiss/geometry.hpp"

namespace latdiss {

inline constexpr int kSvgUnit = 40;  // pixels per lattice unit

// Lattice grid, polygon outline, dissection edges and parity-colored vertices
// (A black, B red, C blue, D green) with a legend. y points up on the page.
// Output bytes depend only on the input.
std::string render_svg(const ConvexLatticePolygon& polygon, const Dissection* dissection = nullptr);

}  // namespace latdiss
