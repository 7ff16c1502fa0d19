#pragma once

#include "surfplot/projection.hpp"
#include "surfplot/surface_grid.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace surfplot {

/// A convex region inside the sampling rectangle. Samples outside it get
/// the out-of-range height z0 and are masked, so edges touching them are
/// never drawn.
struct ConvexMask {
  std::function<bool(double x, double y)> membership;
  /// Defaults to max f + 10 (max f - min f + 1) over the member samples.
  std::optional<double> z0;
};

/// Throws EmptySurface when no sample is inside, InvalidArgument when an
/// explicit z0 falls within the sampled range.
SurfaceGrid extend_convex_domain(const HeightFunction& f, const DomainRect& domain, std::size_t m,
                                 std::size_t n, const ConvexMask& shape);

struct SphereSplit {
  SurfaceGrid upper;
  SurfaceGrid lower;
  bool upper_first = true;

  /// The two hemispheres in the order they must be drawn.
  std::vector<SurfaceGrid> draw_order() const;
};

/// Cuts a sphere by the horizontal plane through its center into two
/// single-valued hemispheres sampled over the bounding square of its
/// equator. The hemisphere facing the viewer is drawn first.
SphereSplit split_sphere(const Vec3& center, double radius, std::size_t m, std::size_t n,
                         const Viewpoint& view);

}  // namespace surfplot
