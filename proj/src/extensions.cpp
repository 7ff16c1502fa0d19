#include "surfplot/extensions.hpp"

#include "surfplot/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace surfplot {

SurfaceGrid extend_convex_domain(const HeightFunction& f, const DomainRect& domain, std::size_t m,
                                 std::size_t n, const ConvexMask& shape) {
  if (!shape.membership) {
    throw Error(ErrorKind::InvalidArgument, "sampling", "convex domain needs a membership test");
  }
  // Sample the rectangle first for the coordinates, then overwrite outsiders.
  const SurfaceGrid lattice = sample_function([](double, double) { return 0.0; }, domain, m, n);
  std::vector<double> z(lattice.size());
  std::vector<std::uint8_t> mask(lattice.size(), 0);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double x = lattice.x(i);
      const double y = lattice.y(j);
      if (!shape.membership(x, y)) continue;
      const double h = f(x, y);
      if (!std::isfinite(h)) {
        std::ostringstream msg;
        msg << "height function is not finite at sample (" << i + 1 << ", " << j + 1 << ")";
        throw Error(ErrorKind::NonFiniteSample, "sampling", msg.str());
      }
      z[lattice.index(i, j)] = h;
      mask[lattice.index(i, j)] = 1;
      lo = std::min(lo, h);
      hi = std::max(hi, h);
    }
  }
  if (!(lo <= hi)) {
    throw Error(ErrorKind::EmptySurface, "sampling", "no grid sample lies inside the convex domain");
  }
  const double z0 = shape.z0.value_or(hi + 10.0 * (hi - lo + 1.0));
  if (z0 >= lo && z0 <= hi) {
    throw Error(ErrorKind::InvalidArgument, "sampling", "z0 must lie outside the range of f");
  }
  for (std::size_t k = 0; k < mask.size(); ++k) {
    if (mask[k] == 0) z[k] = z0;
  }
  return SurfaceGrid({lattice.xs().begin(), lattice.xs().end()},
                     {lattice.ys().begin(), lattice.ys().end()}, std::move(z), std::move(mask));
}

std::vector<SurfaceGrid> SphereSplit::draw_order() const {
  if (upper_first) return {upper, lower};
  return {lower, upper};
}

SphereSplit split_sphere(const Vec3& center, double radius, std::size_t m, std::size_t n,
                         const Viewpoint& view) {
  if (!(radius > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "sampling", "sphere radius must be positive");
  }
  const DomainRect square{center.x - radius, center.x + radius, center.y - radius, center.y + radius};
  const double r2 = radius * radius;
  ConvexMask disk;
  disk.membership = [&](double x, double y) {
    const double dx = x - center.x;
    const double dy = y - center.y;
    return dx * dx + dy * dy <= r2;
  };
  auto cap = [&](double x, double y) {
    const double dx = x - center.x;
    const double dy = y - center.y;
    return std::sqrt(std::max(0.0, r2 - (dx * dx + dy * dy)));
  };
  SphereSplit split{
      extend_convex_domain([&](double x, double y) { return center.z + cap(x, y); }, square, m, n, disk),
      extend_convex_domain([&](double x, double y) { return center.z - cap(x, y); }, square, m, n, disk),
      view.v3() > center.z};
  return split;
}

}  // namespace surfplot
