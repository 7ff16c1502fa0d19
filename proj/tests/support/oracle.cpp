#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace surfplot::testing {

double distance_to_segment(const DevicePoint& p, const DevicePoint& a, const DevicePoint& b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = 0.0;
  if (len2 > 0.0) t = std::clamp(((p.x - a.x) * dx + (p.y - a.y) * dy) / len2, 0.0, 1.0);
  return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

bool strictly_inside(const DevicePoint& p, const Quad& q) {
  constexpr double kBoundary = 1e-9;
  int winding = 0;
  for (int k = 0; k < 4; ++k) {
    const DevicePoint& a = q.p[k];
    const DevicePoint& b = q.p[(k + 1) % 4];
    if (distance_to_segment(p, a, b) <= kBoundary) return false;
    const double cross = (b.x - a.x) * (p.y - a.y) - (p.x - a.x) * (b.y - a.y);
    if (a.y <= p.y) {
      if (b.y > p.y && cross > 0.0) ++winding;
    } else if (b.y <= p.y && cross < 0.0) {
      --winding;
    }
  }
  return winding != 0;
}

double band_curve_distance(const DevicePoint& p, const HorizonBuffer& buf) {
  double best = std::numeric_limits<double>::infinity();
  const std::size_t kx = buf.columns();
  for (std::size_t k = 0; k < kx; ++k) {
    if (!buf.touched(k)) continue;
    const double x = static_cast<double>(k);
    const bool run_start = k == 0 || !buf.touched(k - 1);
    const bool run_end = k + 1 == kx || !buf.touched(k + 1);
    if (run_start || run_end) {
      best = std::min(best, distance_to_segment(p, {x, buf.min(k)}, {x, buf.max(k)}));
    }
    if (!run_end) {
      const double xn = x + 1.0;
      best = std::min(best, distance_to_segment(p, {x, buf.max(k)}, {xn, buf.max(k + 1)}));
      best = std::min(best, distance_to_segment(p, {x, buf.min(k)}, {xn, buf.min(k + 1)}));
    }
  }
  return best;
}

double total_length(std::span<const Segment> segments) {
  double sum = 0.0;
  for (const auto& s : segments) sum += std::hypot(s.b.x - s.a.x, s.b.y - s.a.y);
  return sum;
}

void OracleObserver::piece_started(const PieceEvent& e) {
  grid_ = e.grid;
  device_.assign(e.device.begin(), e.device.end());
  earlier_.clear();
  has_current_ = false;
}

void OracleObserver::leading_edges_drawn(std::span<const DevicePoint> polyline,
                                         std::span<const Segment> emitted, const HorizonBuffer&) {
  for (std::size_t k = 1; k < polyline.size(); ++k) {
    tally_.leading_length += std::hypot(polyline[k].x - polyline[k - 1].x, polyline[k].y - polyline[k - 1].y);
  }
  tally_.leading_emitted += total_length(emitted);
}

Quad OracleObserver::quad_of(const PatchId& p) const {
  auto at = [&](std::size_t i, std::size_t j) { return device_[grid_->index(i, j)]; };
  return {{at(p.i - 1, p.j - 1), at(p.i, p.j - 1), at(p.i, p.j), at(p.i - 1, p.j)}};
}

void OracleObserver::edge_drawn(const EdgeEvent& e) {
  if (!has_current_ || !(e.patch == current_)) {
    if (has_current_) earlier_.push_back(quad_of(current_));
    current_ = e.patch;
    has_current_ = true;
  }
  ++tally_.edges;

  const HorizonBuffer& before = *e.before;
  const HorizonBuffer& after = *e.after;
  for (std::size_t k = 0; k < before.columns(); ++k) {
    if (!before.touched(k)) continue;
    if (after.max(k) < before.max(k) || after.min(k) > before.min(k)) ++tally_.monotonicity_violations;
  }

  for (std::size_t s = 0; s < samples_per_edge_; ++s) {
    const double t = static_cast<double>(s) / static_cast<double>(samples_per_edge_ - 1);
    const DevicePoint p{e.a.x + t * (e.b.x - e.a.x), e.a.y + t * (e.b.y - e.a.y)};
    const bool horizon_visible = visible(p, before);
    bool oracle_visible = true;
    for (const Quad& q : earlier_) {
      if (strictly_inside(p, q)) {
        oracle_visible = false;
        break;
      }
    }
    ++tally_.samples;
    if (horizon_visible == oracle_visible) {
      ++tally_.agreements;
      continue;
    }
    const double dist = band_curve_distance(p, before);
    tally_.worst_distance = std::max(tally_.worst_distance, dist);
    if (dist > tolerance_) ++tally_.far_disagreements;
  }
}

}  // namespace surfplot::testing
