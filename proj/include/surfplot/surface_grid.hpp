#pragma once

#include "surfplot/projection.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace surfplot {

struct DomainRect {
  double x_min = -1.0;
  double x_max = 1.0;
  double y_min = -1.0;
  double y_max = 1.0;

  double center_x() const { return 0.5 * (x_min + x_max); }
  double center_y() const { return 0.5 * (y_min + y_max); }
  friend bool operator==(const DomainRect&, const DomainRect&) = default;
};

/// Heights sampled on a rectangular lattice. Indices are zero-based:
/// column i runs along x (0..m-1), row j along y (0..n-1). Sample
/// coordinates are stored explicitly so that pieces produced by
/// partition_domain can carry their inserted split line; grids built by
/// sample_function are uniform.
class SurfaceGrid {
 public:
  /// `heights` is indexed [i * n + j]. An empty `mask` means every sample
  /// belongs to the surface; otherwise mask[i * n + j] != 0 marks membership.
  SurfaceGrid(std::vector<double> xs, std::vector<double> ys, std::vector<double> heights,
              std::vector<std::uint8_t> mask = {});

  static SurfaceGrid uniform(const DomainRect& domain, std::size_t m, std::size_t n,
                             std::vector<double> heights, std::vector<std::uint8_t> mask = {});

  std::size_t columns() const { return xs_.size(); }
  std::size_t rows() const { return ys_.size(); }
  std::size_t size() const { return z_.size(); }

  double x(std::size_t i) const { return xs_[i]; }
  double y(std::size_t j) const { return ys_[j]; }
  double height(std::size_t i, std::size_t j) const { return z_[index(i, j)]; }
  bool member(std::size_t i, std::size_t j) const { return mask_.empty() || mask_[index(i, j)] != 0; }
  bool has_mask() const { return !mask_.empty(); }
  Vec3 point(std::size_t i, std::size_t j) const { return {xs_[i], ys_[j], height(i, j)}; }

  DomainRect domain() const { return {xs_.front(), xs_.back(), ys_.front(), ys_.back()}; }
  std::span<const double> xs() const { return xs_; }
  std::span<const double> ys() const { return ys_; }
  std::span<const double> heights() const { return z_; }
  std::span<const std::uint8_t> mask() const { return mask_; }

  std::size_t index(std::size_t i, std::size_t j) const { return i * ys_.size() + j; }

  friend bool operator==(const SurfaceGrid&, const SurfaceGrid&) = default;

 private:
  std::vector<double> xs_;
  std::vector<double> ys_;
  std::vector<double> z_;
  std::vector<std::uint8_t> mask_;
};

enum class ViewpointRegion { SW, NW, NE, SE, W, N, E, S, Interior };

std::string_view to_string(ViewpointRegion region);

using HeightFunction = std::function<double(double x, double y)>;

/// Throws NonFiniteSample naming the offending sample.
SurfaceGrid sample_function(const HeightFunction& f, const DomainRect& domain, std::size_t m,
                            std::size_t n);

/// Translates the domain to be centered on the origin, moving V by the same vector.
std::pair<SurfaceGrid, Viewpoint> normalize(const SurfaceGrid& grid, const Viewpoint& view);

/// Region of the footprint (v1, v2) relative to `domain`. A coordinate only
/// counts as outside when strictly beyond the domain edge.
ViewpointRegion classify_viewpoint(double v1, double v2, const DomainRect& domain);

/// Rotates grid and viewpoint clockwise about the z axis by k quarter turns
/// (k taken mod 4). Exact: coordinates are only swapped and negated.
std::pair<SurfaceGrid, Viewpoint> rotate_grid_quarter_turns(const SurfaceGrid& grid,
                                                            const Viewpoint& view, int k);

/// Clockwise quarter turns that carry a corner region to SW: SE 1, NE 2, NW 3.
int canonical_quarter_turns(ViewpointRegion corner);

/// Like canonical_quarter_turns but decides the corner with non-strict
/// comparisons, so a footprint on an edge line of `domain` (the situation of
/// every partition piece) still resolves. Throws InvalidArgument when the
/// footprint is not at any corner.
int corner_quarter_turns(double v1, double v2, const DomainRect& domain);

/// False when a split of `axis` (sorted sample coordinates) at `split`
/// would fall within half a cell of either end.
bool split_fits(std::span<const double> axis, double split);

/// Splits the grid along x = v1 (S/N), y = v2 (W/E) or both (Interior),
/// inserting a linearly interpolated sample line at each split unless one
/// already exists there. Pieces share their seam samples exactly and are
/// ordered left before right, bottom before top.
/// Throws SplitTooClose when a split line is within half a cell of the
/// domain edge, and InvalidArgument for corner regions.
std::vector<SurfaceGrid> partition_domain(const SurfaceGrid& grid, double v1, double v2,
                                          ViewpointRegion region);

}  // namespace surfplot
