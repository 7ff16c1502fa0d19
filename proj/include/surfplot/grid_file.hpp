#pragma once

#include "surfplot/surface_grid.hpp"

#include <iosfwd>

namespace surfplot {

// Text format:
//
//   grid M N xMin xMax yMin yMax
//   z(1,1) z(2,1) ... z(M,1)
//   ...
//   z(1,N) ... z(M,N)
//
// Row J = 1 comes first. `NaN` marks a sample outside the surface.

/// Throws Parse on malformed input.
SurfaceGrid read_grid(std::istream& in);

/// Writes a uniform grid. Masked samples are written as NaN.
void write_grid(std::ostream& out, const SurfaceGrid& grid);

}  // namespace surfplot
