#include "surfplot/horizon.hpp"

#include "surfplot/error.hpp"

#include <algorithm>
#include <cmath>

namespace surfplot {

HorizonBuffer::HorizonBuffer(std::size_t kx) {
  if (kx < 2) {
    throw Error(ErrorKind::InvalidArgument, "horizon", "device needs at least 2 columns");
  }
  max_.assign(kx, kUntouched);
  min_.assign(kx, kUntouched);
}

bool HorizonBuffer::pristine() const {
  return std::all_of(max_.begin(), max_.end(), [](double v) { return v == kUntouched; });
}

std::size_t HorizonBuffer::column_of(double x) const {
  const double k = std::floor(x + 0.5);
  if (!(k > 0.0)) return 0;
  const double last = static_cast<double>(max_.size() - 1);
  return static_cast<std::size_t>(std::min(k, last));
}

void HorizonBuffer::widen(std::size_t k, double y) {
  if (max_[k] == kUntouched) {
    max_[k] = y;
    min_[k] = y;
    return;
  }
  max_[k] = std::max(max_[k], y);
  min_[k] = std::min(min_[k], y);
}

void HorizonBuffer::assign(std::size_t k, double lo, double hi) {
  min_[k] = lo;
  max_[k] = hi;
}

HorizonBuffer init_horizon(std::size_t kx) { return HorizonBuffer(kx); }

bool visible(const DevicePoint& c, const HorizonBuffer& buf) {
  const std::size_t k = buf.column_of(c.x);
  return c.y >= buf.max(k) || c.y <= buf.min(k);
}

namespace {

double y_at(const DevicePoint& a, const DevicePoint& b, double x) {
  return a.y + (b.y - a.y) * ((x - a.x) / (b.x - a.x));
}

// Both points share column k, a is hidden and b visible: where the segment
// leaves the band.
DevicePoint band_exit(const DevicePoint& a, const DevicePoint& b, std::size_t k,
                      const HorizonBuffer& buf) {
  const double edge = b.y >= buf.max(k) ? buf.max(k) : buf.min(k);
  const double t = (edge - a.y) / (b.y - a.y);
  return {a.x + t * (b.x - a.x), edge};
}

}  // namespace

std::optional<DevicePoint> first_visible(const DevicePoint& a, const DevicePoint& b,
                                         const HorizonBuffer& buf) {
  const std::size_t ka = buf.column_of(a.x);
  const std::size_t kb = buf.column_of(b.x);
  if (ka == kb) {
    if (!visible(b, buf)) return std::nullopt;
    if (visible(a, buf)) return a;
    return band_exit(a, b, kb, buf);
  }
  const bool rightward = kb > ka;
  std::size_t k = ka;
  while (k != kb) {
    k = rightward ? k + 1 : k - 1;
    const DevicePoint c = k == kb ? b : DevicePoint{static_cast<double>(k), y_at(a, b, static_cast<double>(k))};
    if (visible(c, buf)) return c;
  }
  return std::nullopt;
}

void update_band(HorizonBuffer& buf, const DevicePoint& a, const DevicePoint& b) {
  const std::size_t ka = buf.column_of(a.x);
  const std::size_t kb = buf.column_of(b.x);
  if (ka == kb) {
    buf.widen(ka, a.y);
    buf.widen(ka, b.y);
    return;
  }
  const std::size_t lo = std::min(ka, kb);
  const std::size_t hi = std::max(ka, kb);
  for (std::size_t k = lo; k <= hi; ++k) {
    double y;
    if (k == ka) {
      y = a.y;
    } else if (k == kb) {
      y = b.y;
    } else {
      y = y_at(a, b, static_cast<double>(k));
    }
    buf.widen(k, y);
  }
}

EdgeCase draw_edge(const DevicePoint& a, const DevicePoint& b, HorizonBuffer& buf, SegmentList& out) {
  const bool a_visible = visible(a, buf);
  const bool b_visible = visible(b, buf);
  if (a_visible && b_visible) {
    out.push_back({a, b});
    update_band(buf, a, b);
    return EdgeCase::BothVisible;
  }
  if (!a_visible && !b_visible) return EdgeCase::BothHidden;
  if (!a_visible) {
    if (const auto c = first_visible(a, b, buf)) {
      if (!(*c == b)) out.push_back({*c, b});
      update_band(buf, *c, b);
    }
    return EdgeCase::EndVisible;
  }
  if (const auto c = first_visible(b, a, buf)) {
    if (!(*c == a)) out.push_back({a, *c});
    update_band(buf, a, *c);
  }
  return EdgeCase::StartVisible;
}

void draw_leading_edges(std::span<const DevicePoint> points, HorizonBuffer& buf, SegmentList& out) {
  // Later pairs overwrite earlier ones, so where the polyline folds back over
  // a column the band holds the part drawn last.
  auto collapse = [&buf](const DevicePoint& a, const DevicePoint& b) {
    const std::size_t ka = buf.column_of(a.x);
    const std::size_t kb = buf.column_of(b.x);
    if (ka == kb) {
      buf.assign(ka, std::min(a.y, b.y), std::max(a.y, b.y));
      return;
    }
    for (std::size_t k = std::min(ka, kb); k <= std::max(ka, kb); ++k) {
      const double y = k == ka ? a.y : k == kb ? b.y : y_at(a, b, static_cast<double>(k));
      buf.assign(k, y, y);
    }
  };
  if (points.size() == 1) collapse(points.front(), points.front());
  for (std::size_t k = 1; k < points.size(); ++k) {
    const DevicePoint& a = points[k - 1];
    const DevicePoint& b = points[k];
    if (!(a == b)) out.push_back({a, b});
    collapse(a, b);
  }
}

}  // namespace surfplot
