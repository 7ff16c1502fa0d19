#include "surfplot/surface_grid.hpp"

#include "surfplot/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace surfplot {

namespace {

void require_axis(const std::vector<double>& axis, const char* name) {
  if (axis.size() < 2) {
    std::ostringstream msg;
    msg << "grid needs at least 2 samples along " << name << ", got " << axis.size();
    throw Error(ErrorKind::InvalidArgument, "grid", msg.str());
  }
  for (std::size_t k = 0; k < axis.size(); ++k) {
    if (!std::isfinite(axis[k]) || (k > 0 && !(axis[k] > axis[k - 1]))) {
      std::ostringstream msg;
      msg << name << " coordinates must be finite and strictly increasing";
      throw Error(ErrorKind::InvalidArgument, "grid", msg.str());
    }
  }
}

std::vector<double> uniform_axis(double lo, double hi, std::size_t count) {
  std::vector<double> axis(count);
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t k = 0; k < count; ++k) axis[k] = lo + static_cast<double>(k) * step;
  axis.back() = hi;
  return axis;
}

// Same grid with x and y exchanged. Lets the row split reuse the column split.
SurfaceGrid transpose(const SurfaceGrid& g) {
  const std::size_t m = g.columns();
  const std::size_t n = g.rows();
  std::vector<double> z(m * n);
  std::vector<std::uint8_t> mask(g.has_mask() ? m * n : 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      z[j * m + i] = g.height(i, j);
      if (!mask.empty()) mask[j * m + i] = g.member(i, j) ? 1 : 0;
    }
  }
  return SurfaceGrid({g.ys().begin(), g.ys().end()}, {g.xs().begin(), g.xs().end()}, std::move(z),
                     std::move(mask));
}

struct ColumnRange {
  std::size_t first;
  std::size_t last;  // inclusive
};

SurfaceGrid copy_columns(const SurfaceGrid& g, ColumnRange range, const std::vector<double>* inserted_z,
                         const std::vector<std::uint8_t>* inserted_mask, double inserted_x,
                         bool inserted_first) {
  const std::size_t n = g.rows();
  std::vector<double> xs;
  std::vector<double> z;
  std::vector<std::uint8_t> mask;
  auto append_inserted = [&] {
    xs.push_back(inserted_x);
    z.insert(z.end(), inserted_z->begin(), inserted_z->end());
    if (g.has_mask()) mask.insert(mask.end(), inserted_mask->begin(), inserted_mask->end());
  };
  if (inserted_z != nullptr && inserted_first) append_inserted();
  for (std::size_t i = range.first; i <= range.last; ++i) {
    xs.push_back(g.x(i));
    for (std::size_t j = 0; j < n; ++j) {
      z.push_back(g.height(i, j));
      if (g.has_mask()) mask.push_back(g.member(i, j) ? 1 : 0);
    }
  }
  if (inserted_z != nullptr && !inserted_first) append_inserted();
  return SurfaceGrid(std::move(xs), {g.ys().begin(), g.ys().end()}, std::move(z), std::move(mask));
}

std::pair<SurfaceGrid, SurfaceGrid> split_at_x(const SurfaceGrid& g, double split) {
  const std::size_t m = g.columns();
  const DomainRect dom = g.domain();
  if (!(split > dom.x_min && split < dom.x_max)) {
    throw Error(ErrorKind::InvalidArgument, "partition", "split line lies outside the domain");
  }
  if (!split_fits(g.xs(), split)) {
    std::ostringstream msg;
    msg << "split line at " << split << " is within half a cell of the domain edge";
    throw Error(ErrorKind::SplitTooClose, "partition", msg.str());
  }

  // Largest column index with x(i) <= split.
  const auto it = std::upper_bound(g.xs().begin(), g.xs().end(), split);
  const std::size_t i = static_cast<std::size_t>(it - g.xs().begin()) - 1;
  if (g.x(i) == split) {
    return {copy_columns(g, {0, i}, nullptr, nullptr, 0.0, false),
            copy_columns(g, {i, m - 1}, nullptr, nullptr, 0.0, false)};
  }

  const std::size_t n = g.rows();
  const double t = (split - g.x(i)) / (g.x(i + 1) - g.x(i));
  std::vector<double> z(n);
  std::vector<std::uint8_t> mask(g.has_mask() ? n : 0);
  for (std::size_t j = 0; j < n; ++j) {
    const bool inside = g.member(i, j) && g.member(i + 1, j);
    const double z0 = g.height(i, j);
    const double z1 = g.height(i + 1, j);
    z[j] = inside ? z0 + t * (z1 - z0) : (g.member(i, j) ? z1 : z0);
    if (!mask.empty()) mask[j] = inside ? 1 : 0;
  }
  return {copy_columns(g, {0, i}, &z, &mask, split, false),
          copy_columns(g, {i + 1, m - 1}, &z, &mask, split, true)};
}

std::pair<SurfaceGrid, SurfaceGrid> split_at_y(const SurfaceGrid& g, double split) {
  auto [below, above] = split_at_x(transpose(g), split);
  return {transpose(below), transpose(above)};
}

SurfaceGrid rotate_quarter_cw(const SurfaceGrid& g) {
  // (x, y) -> (y, -x): new column i' is old row i', new row j' is old
  // column m-1-j'.
  const std::size_t m = g.columns();
  const std::size_t n = g.rows();
  std::vector<double> xs(g.ys().begin(), g.ys().end());
  std::vector<double> ys(m);
  for (std::size_t j = 0; j < m; ++j) ys[j] = -g.x(m - 1 - j);
  std::vector<double> z(m * n);
  std::vector<std::uint8_t> mask(g.has_mask() ? m * n : 0);
  for (std::size_t ip = 0; ip < n; ++ip) {
    for (std::size_t jp = 0; jp < m; ++jp) {
      const std::size_t dst = ip * m + jp;
      z[dst] = g.height(m - 1 - jp, ip);
      if (!mask.empty()) mask[dst] = g.member(m - 1 - jp, ip) ? 1 : 0;
    }
  }
  return SurfaceGrid(std::move(xs), std::move(ys), std::move(z), std::move(mask));
}

}  // namespace

bool split_fits(std::span<const double> axis, double split) {
  const std::size_t m = axis.size();
  const double first_cell = axis[1] - axis[0];
  const double last_cell = axis[m - 1] - axis[m - 2];
  return !(split - axis[0] < 0.5 * first_cell) && !(axis[m - 1] - split < 0.5 * last_cell);
}

SurfaceGrid::SurfaceGrid(std::vector<double> xs, std::vector<double> ys, std::vector<double> heights,
                         std::vector<std::uint8_t> mask)
    : xs_(std::move(xs)), ys_(std::move(ys)), z_(std::move(heights)), mask_(std::move(mask)) {
  require_axis(xs_, "x");
  require_axis(ys_, "y");
  if (z_.size() != xs_.size() * ys_.size()) {
    throw Error(ErrorKind::InvalidArgument, "grid", "height count does not match grid dimensions");
  }
  if (!mask_.empty() && mask_.size() != z_.size()) {
    throw Error(ErrorKind::InvalidArgument, "grid", "mask size does not match grid dimensions");
  }
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    for (std::size_t j = 0; j < ys_.size(); ++j) {
      if (member(i, j) && !std::isfinite(height(i, j))) {
        std::ostringstream msg;
        msg << "non-finite height at sample (" << i + 1 << ", " << j + 1 << ")";
        throw Error(ErrorKind::NonFiniteSample, "grid", msg.str());
      }
    }
  }
}

SurfaceGrid SurfaceGrid::uniform(const DomainRect& domain, std::size_t m, std::size_t n,
                                 std::vector<double> heights, std::vector<std::uint8_t> mask) {
  if (m < 2 || n < 2) {
    throw Error(ErrorKind::InvalidArgument, "grid", "grid needs M >= 2 and N >= 2");
  }
  if (!(domain.x_min < domain.x_max) || !(domain.y_min < domain.y_max)) {
    throw Error(ErrorKind::InvalidArgument, "grid", "domain must satisfy xMin < xMax and yMin < yMax");
  }
  return SurfaceGrid(uniform_axis(domain.x_min, domain.x_max, m),
                     uniform_axis(domain.y_min, domain.y_max, n), std::move(heights),
                     std::move(mask));
}

std::string_view to_string(ViewpointRegion region) {
  switch (region) {
    case ViewpointRegion::SW: return "SW";
    case ViewpointRegion::NW: return "NW";
    case ViewpointRegion::NE: return "NE";
    case ViewpointRegion::SE: return "SE";
    case ViewpointRegion::W: return "W";
    case ViewpointRegion::N: return "N";
    case ViewpointRegion::E: return "E";
    case ViewpointRegion::S: return "S";
    case ViewpointRegion::Interior: return "Interior";
  }
  return "?";
}

SurfaceGrid sample_function(const HeightFunction& f, const DomainRect& domain, std::size_t m,
                            std::size_t n) {
  if (m < 2 || n < 2) {
    throw Error(ErrorKind::InvalidArgument, "sampling", "grid needs M >= 2 and N >= 2");
  }
  if (!(domain.x_min < domain.x_max) || !(domain.y_min < domain.y_max)) {
    throw Error(ErrorKind::InvalidArgument, "sampling",
                "domain must satisfy xMin < xMax and yMin < yMax");
  }
  const auto xs = uniform_axis(domain.x_min, domain.x_max, m);
  const auto ys = uniform_axis(domain.y_min, domain.y_max, n);
  std::vector<double> z(m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double h = f(xs[i], ys[j]);
      if (!std::isfinite(h)) {
        std::ostringstream msg;
        msg << "height function is not finite at sample (" << i + 1 << ", " << j + 1 << "), (x, y) = ("
            << xs[i] << ", " << ys[j] << ")";
        throw Error(ErrorKind::NonFiniteSample, "sampling", msg.str());
      }
      z[i * n + j] = h;
    }
  }
  return SurfaceGrid(xs, ys, std::move(z));
}

std::pair<SurfaceGrid, Viewpoint> normalize(const SurfaceGrid& grid, const Viewpoint& view) {
  const DomainRect dom = grid.domain();
  const double cx = dom.center_x();
  const double cy = dom.center_y();
  std::vector<double> xs(grid.xs().begin(), grid.xs().end());
  std::vector<double> ys(grid.ys().begin(), grid.ys().end());
  for (double& x : xs) x -= cx;
  for (double& y : ys) y -= cy;
  SurfaceGrid moved(std::move(xs), std::move(ys), {grid.heights().begin(), grid.heights().end()},
                    {grid.mask().begin(), grid.mask().end()});
  return {std::move(moved), Viewpoint(view.v1() - cx, view.v2() - cy, view.v3())};
}

ViewpointRegion classify_viewpoint(double v1, double v2, const DomainRect& domain) {
  const int col = v1 < domain.x_min ? -1 : (v1 > domain.x_max ? 1 : 0);
  const int row = v2 < domain.y_min ? -1 : (v2 > domain.y_max ? 1 : 0);
  if (row < 0) return col < 0 ? ViewpointRegion::SW : (col > 0 ? ViewpointRegion::SE : ViewpointRegion::S);
  if (row > 0) return col < 0 ? ViewpointRegion::NW : (col > 0 ? ViewpointRegion::NE : ViewpointRegion::N);
  return col < 0 ? ViewpointRegion::W : (col > 0 ? ViewpointRegion::E : ViewpointRegion::Interior);
}

std::pair<SurfaceGrid, Viewpoint> rotate_grid_quarter_turns(const SurfaceGrid& grid,
                                                            const Viewpoint& view, int k) {
  k = ((k % 4) + 4) % 4;
  SurfaceGrid g = grid;
  double v1 = view.v1();
  double v2 = view.v2();
  for (int step = 0; step < k; ++step) {
    g = rotate_quarter_cw(g);
    const double next_v1 = v2;
    v2 = -v1;
    v1 = next_v1;
  }
  if (k == 0) return {std::move(g), view};
  return {std::move(g), Viewpoint(v1, v2, view.v3())};
}

int canonical_quarter_turns(ViewpointRegion corner) {
  switch (corner) {
    case ViewpointRegion::SW: return 0;
    case ViewpointRegion::SE: return 1;
    case ViewpointRegion::NE: return 2;
    case ViewpointRegion::NW: return 3;
    default:
      throw Error(ErrorKind::InvalidArgument, "classification",
                  std::string("region ") + std::string(to_string(corner)) + " is not a corner");
  }
}

int corner_quarter_turns(double v1, double v2, const DomainRect& domain) {
  const bool west = v1 <= domain.x_min;
  const bool east = v1 >= domain.x_max;
  const bool south = v2 <= domain.y_min;
  const bool north = v2 >= domain.y_max;
  if (west && south) return 0;
  if (east && south) return 1;
  if (east && north) return 2;
  if (west && north) return 3;
  throw Error(ErrorKind::InvalidArgument, "classification",
              "viewpoint footprint is not at a corner of the piece");
}

std::vector<SurfaceGrid> partition_domain(const SurfaceGrid& grid, double v1, double v2,
                                          ViewpointRegion region) {
  switch (region) {
    case ViewpointRegion::S:
    case ViewpointRegion::N: {
      auto [left, right] = split_at_x(grid, v1);
      return {std::move(left), std::move(right)};
    }
    case ViewpointRegion::W:
    case ViewpointRegion::E: {
      auto [below, above] = split_at_y(grid, v2);
      return {std::move(below), std::move(above)};
    }
    case ViewpointRegion::Interior: {
      auto [left, right] = split_at_x(grid, v1);
      auto [lb, lt] = split_at_y(left, v2);
      auto [rb, rt] = split_at_y(right, v2);
      return {std::move(lb), std::move(lt), std::move(rb), std::move(rt)};
    }
    default:
      throw Error(ErrorKind::InvalidArgument, "partition",
                  std::string("corner region ") + std::string(to_string(region)) +
                      " needs rotation, not partitioning");
  }
}

}  // namespace surfplot
