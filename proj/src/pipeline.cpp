#include "surfplot/pipeline.hpp"

#include "surfplot/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <utility>

namespace surfplot {

DevicePoint PlotTransform::apply(const ImagePoint& p) const {
  return {std::clamp(scale * p.u + offset_u, 0.0, x_limit),
          std::clamp(scale * p.v + offset_v, 0.0, y_limit)};
}

void RenderConfig::validate() const {
  if (kx < 2 || ky < 2) {
    throw Error(ErrorKind::InvalidArgument, "config", "device needs at least 2x2 units");
  }
  if (!(margin >= 0.0 && margin < 0.5)) {
    throw Error(ErrorKind::InvalidArgument, "config", "margin must lie in [0, 0.5)");
  }
}

PlotTransform fit_transform(std::span<const ImagePoint> points, const RenderConfig& cfg) {
  cfg.validate();
  if (points.empty()) {
    throw Error(ErrorKind::DegenerateImage, "framing", "nothing to frame");
  }
  double u_lo = points.front().u, u_hi = u_lo;
  double v_lo = points.front().v, v_hi = v_lo;
  for (const auto& p : points) {
    u_lo = std::min(u_lo, p.u);
    u_hi = std::max(u_hi, p.u);
    v_lo = std::min(v_lo, p.v);
    v_hi = std::max(v_hi, p.v);
  }
  const double u_extent = u_hi - u_lo;
  const double v_extent = v_hi - v_lo;
  if (!(u_extent > 0.0) && !(v_extent > 0.0)) {
    throw Error(ErrorKind::DegenerateImage, "framing", "image collapses to a single point");
  }
  PlotTransform xf;
  xf.x_limit = static_cast<double>(cfg.kx - 1);
  xf.y_limit = static_cast<double>(cfg.ky - 1);
  const double usable = 1.0 - 2.0 * cfg.margin;
  double scale = std::numeric_limits<double>::infinity();
  if (u_extent > 0.0) scale = std::min(scale, xf.x_limit * usable / u_extent);
  if (v_extent > 0.0) scale = std::min(scale, xf.y_limit * usable / v_extent);
  xf.scale = scale;
  xf.offset_u = 0.5 * xf.x_limit - scale * (0.5 * (u_lo + u_hi));
  xf.offset_v = 0.5 * xf.y_limit - scale * (0.5 * (v_lo + v_hi));
  return xf;
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct DrawContext {
  std::size_t piece = 0;
  std::size_t sub_piece = 0;
  int quarter_turns = 0;
};

void draw_oriented(const SurfaceGrid& grid, std::span<const DevicePoint> device,
                   const RenderConfig& cfg, HorizonBuffer& buf, SegmentList& out,
                   RenderObserver* observer, const DrawContext& ctx) {
  const std::size_t m = grid.columns();
  const std::size_t n = grid.rows();
  const auto order = patch_order(cfg.ordering, m, n);
  const bool fresh = buf.pristine();
  if (observer != nullptr) {
    observer->piece_started({ctx.piece, ctx.sub_piece, ctx.quarter_turns, &grid, device, order, fresh});
  }

  // Leading edges, broken wherever a masked sample interrupts them.
  const std::size_t leading_start = out.size();
  std::vector<DevicePoint> polyline;
  std::vector<DevicePoint> run;
  auto flush_run = [&] {
    if (fresh) draw_leading_edges(run, buf, out);
    run.clear();
  };
  std::optional<DevicePoint> previous;
  for (const GridIndex& s : leading_edge_sequence(m, n)) {
    if (!grid.member(s.i, s.j)) {
      flush_run();
      previous.reset();
      continue;
    }
    const DevicePoint p = device[grid.index(s.i, s.j)];
    polyline.push_back(p);
    run.push_back(p);
    if (!fresh && previous) draw_edge(*previous, p, buf, out);
    previous = p;
  }
  flush_run();
  if (observer != nullptr) {
    observer->leading_edges_drawn(polyline, std::span<const Segment>(out).subspan(leading_start), buf);
  }

  std::optional<HorizonBuffer> before;
  for (const PatchId& patch : order) {
    const GridIndex corner{patch.i, patch.j};
    const GridIndex ends[2] = {{patch.i - 1, patch.j}, {patch.i, patch.j - 1}};
    for (int e = 0; e < 2; ++e) {
      const GridIndex& far = ends[e];
      if (!grid.member(corner.i, corner.j) || !grid.member(far.i, far.j)) continue;
      const DevicePoint a = device[grid.index(corner.i, corner.j)];
      const DevicePoint b = device[grid.index(far.i, far.j)];
      if (observer == nullptr) {
        draw_edge(a, b, buf, out);
        continue;
      }
      before = buf;
      const std::size_t emitted_from = out.size();
      const EdgeCase edge_case = draw_edge(a, b, buf, out);
      observer->edge_drawn({patch, e == 0, a, b, edge_case, &*before, &buf,
                            std::span<const Segment>(out).subspan(emitted_from)});
    }
  }
}

// Projects every member sample. Samples the eye cannot see are reported
// through `failures` instead of throwing so the caller can tell an empty
// render from a partially invalid one.
std::vector<ImagePoint> project_members(const SurfaceGrid& grid, const Viewpoint& view,
                                        std::size_t& members, std::size_t& failures,
                                        std::optional<Error>& first_failure) {
  const ProjectionBasis basis = basis_from_viewpoint(view);
  std::vector<ImagePoint> image(grid.size(), ImagePoint{kNaN, kNaN});
  for (std::size_t i = 0; i < grid.columns(); ++i) {
    for (std::size_t j = 0; j < grid.rows(); ++j) {
      if (!grid.member(i, j)) continue;
      ++members;
      try {
        image[grid.index(i, j)] = project_point(grid.point(i, j), view, basis);
      } catch (const Error& err) {
        ++failures;
        if (!first_failure) {
          std::ostringstream msg;
          msg << err.what() << " [sample (" << i + 1 << ", " << j + 1 << ") of the oriented piece]";
          first_failure.emplace(err.kind(), err.stage(), msg.str());
        }
      }
    }
  }
  return image;
}

std::vector<DevicePoint> to_device(const SurfaceGrid& grid, std::span<const ImagePoint> image,
                                   const PlotTransform& xf) {
  std::vector<DevicePoint> device(image.size(), DevicePoint{kNaN, kNaN});
  for (std::size_t i = 0; i < grid.columns(); ++i) {
    for (std::size_t j = 0; j < grid.rows(); ++j) {
      if (grid.member(i, j)) device[grid.index(i, j)] = xf.apply(image[grid.index(i, j)]);
    }
  }
  return device;
}

SurfaceGrid translated(const SurfaceGrid& grid, double cx, double cy) {
  std::vector<double> xs(grid.xs().begin(), grid.xs().end());
  std::vector<double> ys(grid.ys().begin(), grid.ys().end());
  for (double& x : xs) x -= cx;
  for (double& y : ys) y -= cy;
  return SurfaceGrid(std::move(xs), std::move(ys), {grid.heights().begin(), grid.heights().end()},
                     {grid.mask().begin(), grid.mask().end()});
}

enum class Side { Low, High, Split };

// Where the footprint coordinate sits relative to one axis of a piece. A
// split too close to the edge is replaced by the nearer side.
Side place(std::span<const double> axis, double v) {
  if (v < axis.front()) return Side::Low;
  if (v > axis.back()) return Side::High;
  if (split_fits(axis, v)) return Side::Split;
  return v - axis.front() <= axis.back() - v ? Side::Low : Side::High;
}

// A footprint too close to an edge to split at is treated as lying on that edge.
double snapped(std::span<const double> axis, double v, Side side) {
  if (side == Side::Low) return std::min(v, axis.front());
  if (side == Side::High) return std::max(v, axis.back());
  return v;
}

std::optional<ViewpointRegion> split_region(Side x, Side y) {
  if (x == Side::Split && y == Side::Split) return ViewpointRegion::Interior;
  if (x == Side::Split) return y == Side::Low ? ViewpointRegion::S : ViewpointRegion::N;
  if (y == Side::Split) return x == Side::Low ? ViewpointRegion::W : ViewpointRegion::E;
  return std::nullopt;
}

struct PlannedPiece {
  std::size_t piece;
  std::size_t sub_piece;
  int band_key;  // pieces with equal keys share a horizon in BandSharing::Shared
  int quarter_turns;
  SurfaceGrid grid;
  std::vector<ImagePoint> image;
};

RenderResult render_impl(std::span<const SurfaceGrid> pieces, const Viewpoint& requested,
                         const RenderConfig& cfg, BandSharing sharing, RenderObserver* observer) {
  const auto started = std::chrono::steady_clock::now();
  cfg.validate();
  if (pieces.empty()) {
    throw Error(ErrorKind::InvalidArgument, "render", "no surface pieces to render");
  }

  DomainRect hull = pieces.front().domain();
  for (const auto& p : pieces) {
    const DomainRect d = p.domain();
    hull = {std::min(hull.x_min, d.x_min), std::max(hull.x_max, d.x_max),
            std::min(hull.y_min, d.y_min), std::max(hull.y_max, d.y_max)};
  }
  const double cx = hull.center_x();
  const double cy = hull.center_y();
  const Viewpoint view =
      nudge_if_degenerate(Viewpoint(requested.v1() - cx, requested.v2() - cy, requested.v3()));
  if (!(view.d() > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "projection", "viewpoint coincides with the domain center");
  }

  RenderResult result;
  result.region = classify_viewpoint(
      view.v1(), view.v2(), {hull.x_min - cx, hull.x_max - cx, hull.y_min - cy, hull.y_max - cy});

  std::vector<PlannedPiece> planned;
  std::size_t members = 0;
  std::size_t failures = 0;
  std::optional<Error> first_failure;
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    const SurfaceGrid grid = translated(pieces[p], cx, cy);
    const Side x_side = place(grid.xs(), view.v1());
    const Side y_side = place(grid.ys(), view.v2());
    std::vector<SurfaceGrid> subs;
    int key_base = 0;
    if (const auto region = split_region(x_side, y_side)) {
      subs = partition_domain(grid, view.v1(), view.v2(), *region);
      key_base = 16 * (static_cast<int>(*region) + 1);
    } else {
      subs.push_back(grid);
    }
    for (std::size_t s = 0; s < subs.size(); ++s) {
      const int turns = corner_quarter_turns(snapped(grid.xs(), view.v1(), x_side),
                                             snapped(grid.ys(), view.v2(), y_side), subs[s].domain());
      auto [oriented, oriented_view] = rotate_grid_quarter_turns(subs[s], view, turns);
      auto image = project_members(oriented, oriented_view, members, failures, first_failure);
      planned.push_back({p, s, key_base + static_cast<int>(s), turns, std::move(oriented),
                         std::move(image)});
    }
  }
  if (failures == members) {
    throw Error(ErrorKind::EmptyRender, "projection", "no surface sample is visible from the viewpoint");
  }
  if (first_failure) throw *first_failure;

  std::vector<ImagePoint> all_points;
  for (const auto& piece : planned) {
    for (std::size_t i = 0; i < piece.grid.columns(); ++i) {
      for (std::size_t j = 0; j < piece.grid.rows(); ++j) {
        if (piece.grid.member(i, j)) all_points.push_back(piece.image[piece.grid.index(i, j)]);
      }
    }
  }
  const PlotTransform xf = fit_transform(all_points, cfg);

  std::map<int, HorizonBuffer> shared;
  result.stats.segments_per_piece.assign(pieces.size(), 0);
  for (const auto& piece : planned) {
    const auto device = to_device(piece.grid, piece.image, xf);
    std::optional<HorizonBuffer> own;
    HorizonBuffer* buf;
    if (sharing == BandSharing::Shared) {
      buf = &shared.try_emplace(piece.band_key, cfg.kx).first->second;
    } else {
      own.emplace(cfg.kx);
      buf = &*own;
    }
    const std::size_t before = result.segments.size();
    draw_oriented(piece.grid, device, cfg, *buf, result.segments, observer,
                  {piece.piece, piece.sub_piece, piece.quarter_turns});
    result.stats.segments_per_piece[piece.piece] += result.segments.size() - before;
    result.stats.point_count += piece.grid.size();
    result.stats.patch_count += (piece.grid.columns() - 1) * (piece.grid.rows() - 1);
  }
  result.stats.emitted_segments = result.segments.size();
  result.stats.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - started);
  return result;
}

}  // namespace

void render_piece(const SurfaceGrid& grid, const Viewpoint& view, const PlotTransform& xf,
                  const RenderConfig& cfg, HorizonBuffer& buf, SegmentList& out,
                  RenderObserver* observer) {
  cfg.validate();
  std::size_t members = 0;
  std::size_t failures = 0;
  std::optional<Error> first_failure;
  const auto image = project_members(grid, view, members, failures, first_failure);
  if (first_failure) throw *first_failure;
  const auto device = to_device(grid, image, xf);
  draw_oriented(grid, device, cfg, buf, out, observer, {});
}

RenderResult render(const SurfaceGrid& grid, const Viewpoint& view, const RenderConfig& cfg,
                    RenderObserver* observer) {
  return render_impl(std::span<const SurfaceGrid>(&grid, 1), view, cfg, BandSharing::Independent,
                     observer);
}

RenderResult render_pieces(std::span<const SurfaceGrid> pieces, const Viewpoint& view,
                           const RenderConfig& cfg, BandSharing sharing, RenderObserver* observer) {
  return render_impl(pieces, view, cfg, sharing, observer);
}

RenderResult render_shared_band(std::span<const SurfaceGrid> pieces, const Viewpoint& view,
                                const RenderConfig& cfg, RenderObserver* observer) {
  return render_impl(pieces, view, cfg, BandSharing::Shared, observer);
}

}  // namespace surfplot
