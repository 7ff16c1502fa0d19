#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace surfplot {

/// Point on the plotting raster; y grows upward.
struct DevicePoint {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const DevicePoint&, const DevicePoint&) = default;
};

struct Segment {
  DevicePoint a;
  DevicePoint b;
  friend bool operator==(const Segment&, const Segment&) = default;
};

using SegmentList = std::vector<Segment>;

/// The floating horizon: per device column, the upper (max) and lower (min)
/// curves bounding the image region already covered. Columns nobody has
/// drawn through hold the sentinel -1 in both arrays.
class HorizonBuffer {
 public:
  static constexpr double kUntouched = -1.0;

  /// Throws InvalidArgument when kx < 2.
  explicit HorizonBuffer(std::size_t kx);

  std::size_t columns() const { return max_.size(); }
  double max(std::size_t k) const { return max_[k]; }
  double min(std::size_t k) const { return min_[k]; }
  bool touched(std::size_t k) const { return max_[k] != kUntouched; }
  /// True while no column has been touched.
  bool pristine() const;

  /// Device column owning abscissa x: round(x), clamped to [0, kx-1].
  std::size_t column_of(double x) const;

  /// Widens column k so that it covers y.
  void widen(std::size_t k, double y);
  /// Overwrites column k. Intended for tests and tooling.
  void assign(std::size_t k, double lo, double hi);

  friend bool operator==(const HorizonBuffer&, const HorizonBuffer&) = default;

 private:
  std::vector<double> max_;
  std::vector<double> min_;
};

HorizonBuffer init_horizon(std::size_t kx);

/// A point is visible when it lies on or outside the band of its column.
bool visible(const DevicePoint& c, const HorizonBuffer& buf);

/// Walks from hidden `a` toward `b` one device column at a time and returns
/// the first point that tests visible. Inside a single column the walk
/// degenerates to a vertical scan and the band edge crossing is returned.
std::optional<DevicePoint> first_visible(const DevicePoint& a, const DevicePoint& b,
                                         const HorizonBuffer& buf);

/// Widens the band with the segment a-b, linearly interpolated at every
/// column it spans. Endpoint columns take the endpoint heights.
void update_band(HorizonBuffer& buf, const DevicePoint& a, const DevicePoint& b);

enum class EdgeCase {
  BothVisible,   // drawn whole
  BothHidden,    // dropped
  EndVisible,    // a hidden: drawn from the first visible point to b
  StartVisible,  // b hidden: drawn from a to the last visible point
};

/// Draws the visible part of edge a-b into `out` and widens the band with it.
EdgeCase draw_edge(const DevicePoint& a, const DevicePoint& b, HorizonBuffer& buf, SegmentList& out);

/// Draws a leading-edge polyline unconditionally and collapses the band onto
/// it: max == min == the polyline height on every column it covers.
void draw_leading_edges(std::span<const DevicePoint> points, HorizonBuffer& buf, SegmentList& out);

}  // namespace surfplot
