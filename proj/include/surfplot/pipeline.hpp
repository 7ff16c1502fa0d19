#pragma once

#include "surfplot/horizon.hpp"
#include "surfplot/ordering.hpp"
#include "surfplot/projection.hpp"
#include "surfplot/surface_grid.hpp"

#include <chrono>
#include <cstddef>
#include <span>
#include <vector>

namespace surfplot {

/// Maps image-plane (u, v) to device coordinates with one uniform scale.
struct PlotTransform {
  double scale = 1.0;
  double offset_u = 0.0;
  double offset_v = 0.0;
  double x_limit = 1.0;  // kx - 1
  double y_limit = 1.0;  // ky - 1

  DevicePoint apply(const ImagePoint& p) const;
};

struct RenderConfig {
  std::size_t kx = 1024;
  std::size_t ky = 768;
  OrderingStrategy ordering = OrderingStrategy::RowMajorFront;
  double margin = 0.05;  // fraction of each device side left blank

  /// Throws InvalidArgument.
  void validate() const;
};

struct RenderStats {
  std::size_t point_count = 0;
  std::size_t patch_count = 0;
  std::size_t emitted_segments = 0;
  std::chrono::nanoseconds elapsed{0};
  /// Emitted segments attributed to each input piece (one entry for render()).
  std::vector<std::size_t> segments_per_piece;
};

struct RenderResult {
  SegmentList segments;
  RenderStats stats;
  /// Footprint region after normalization, before any partitioning.
  ViewpointRegion region = ViewpointRegion::SW;
};

/// Fits the bounding box of `points` into the device, centered, aspect
/// preserved, device y upward. Throws DegenerateImage.
PlotTransform fit_transform(std::span<const ImagePoint> points, const RenderConfig& cfg);

/// What a piece looks like once it has been oriented for drawing.
struct PieceEvent {
  std::size_t piece = 0;      // index of the input piece
  std::size_t sub_piece = 0;  // index within its partition
  int quarter_turns = 0;      // clockwise turns applied to reach SW
  const SurfaceGrid* grid = nullptr;              // oriented grid
  std::span<const DevicePoint> device;            // indexed like grid->index(i, j)
  std::span<const PatchId> order;
  bool fresh_band = true;
};

struct EdgeEvent {
  PatchId patch;
  bool back_edge = true;  // L1 joins (i,j)-(i-1,j); otherwise L2 joins (i,j)-(i,j-1)
  DevicePoint a;
  DevicePoint b;
  EdgeCase edge_case = EdgeCase::BothVisible;
  const HorizonBuffer* before = nullptr;
  const HorizonBuffer* after = nullptr;
  std::span<const Segment> emitted;
};

/// Hooks for instrumented renders. Attaching an observer makes the render
/// copy the horizon before every edge, so only tests should use it.
class RenderObserver {
 public:
  virtual ~RenderObserver() = default;
  virtual void piece_started(const PieceEvent&) {}
  /// `polyline` is the full leading-edge polyline of the piece (member samples only).
  virtual void leading_edges_drawn(std::span<const DevicePoint> /*polyline*/,
                                   std::span<const Segment> /*emitted*/, const HorizonBuffer&) {}
  virtual void edge_drawn(const EdgeEvent&) {}
};

/// Draws one piece whose footprint is SW of its domain: leading edges, then
/// the back and right edge of every patch in the configured order. A
/// pristine `buf` gets its leading edges drawn unconditionally; a buffer
/// carried over from an earlier piece has them tested like any other edge.
void render_piece(const SurfaceGrid& grid, const Viewpoint& view, const PlotTransform& xf,
                  const RenderConfig& cfg, HorizonBuffer& buf, SegmentList& out,
                  RenderObserver* observer = nullptr);

/// Full render of a single-valued surface: normalize, classify the
/// footprint, rotate a corner case to SW or partition an edge/interior case,
/// frame everything with one transform and draw each piece with its own
/// horizon.
RenderResult render(const SurfaceGrid& grid, const Viewpoint& view, const RenderConfig& cfg,
                    RenderObserver* observer = nullptr);

enum class BandSharing { Shared, Independent };

/// Renders several single-valued pieces in the given order into one frame.
/// With BandSharing::Shared the horizon is carried from piece to piece.
RenderResult render_pieces(std::span<const SurfaceGrid> pieces, const Viewpoint& view,
                           const RenderConfig& cfg, BandSharing sharing,
                           RenderObserver* observer = nullptr);

RenderResult render_shared_band(std::span<const SurfaceGrid> pieces, const Viewpoint& view,
                                const RenderConfig& cfg, RenderObserver* observer = nullptr);

}  // namespace surfplot
