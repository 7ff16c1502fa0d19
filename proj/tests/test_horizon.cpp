#include "support/oracle.hpp"

#include "surfplot/error.hpp"
#include "surfplot/horizon.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace surfplot;
using surfplot::testing::Rng;

namespace {

HorizonBuffer band(std::size_t kx, std::size_t first, std::size_t last, double lo, double hi) {
  HorizonBuffer buf(kx);
  for (std::size_t k = first; k <= last; ++k) buf.assign(k, lo, hi);
  return buf;
}

}  // namespace

TEST_CASE("initial horizon") {
  const HorizonBuffer buf = init_horizon(4);
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(buf.max(k) == -1.0);
    CHECK(buf.min(k) == -1.0);
    CHECK_FALSE(buf.touched(k));
  }
  CHECK(buf.pristine());
  CHECK_THROWS_AS(init_horizon(1), Error);
  for (double y : {0.0, 0.5, 10.0, 700.0}) CHECK(visible({2.0, y}, buf));
}

TEST_CASE("visibility against the band") {
  HorizonBuffer buf(8);
  buf.assign(5, 3, 10);
  CHECK(visible({5, 12}, buf));
  CHECK_FALSE(visible({5, 7}, buf));
  CHECK(visible({5, 3}, buf));
  CHECK(visible({5, 10}, buf));
  CHECK(visible({5.4, 2}, buf));
  CHECK_FALSE(visible({4.6, 7}, buf));  // rounds to column 5
}

TEST_CASE("column lookup rounds and clamps") {
  const HorizonBuffer buf(10);
  CHECK(buf.column_of(0.0) == 0);
  CHECK(buf.column_of(0.49) == 0);
  CHECK(buf.column_of(0.5) == 1);
  CHECK(buf.column_of(-3.0) == 0);
  CHECK(buf.column_of(9.4) == 9);
  CHECK(buf.column_of(42.0) == 9);
}

TEST_CASE("first visible point walks column by column") {
  const HorizonBuffer partly = band(5, 0, 2, 0, 10);
  const auto c = first_visible({0, 5}, {4, 5}, partly);
  REQUIRE(c.has_value());
  CHECK(*c == DevicePoint{3, 5});

  const HorizonBuffer buried = band(5, 0, 4, 0, 10);
  CHECK_FALSE(first_visible({0, 5}, {4, 5}, buried).has_value());

  // Leaving the band through its top inside one column.
  const HorizonBuffer one = band(5, 2, 2, 0, 10);
  const auto up = first_visible({2, 5}, {2.2, 15}, one);
  REQUIRE(up.has_value());
  CHECK(up->y == doctest::Approx(10.0));
  CHECK(up->x == doctest::Approx(2.1));
}

TEST_CASE("band updates") {
  {
    HorizonBuffer buf(5);
    update_band(buf, {0, 5}, {4, 5});
    for (std::size_t k = 0; k < 5; ++k) {
      CHECK(buf.max(k) == 5);
      CHECK(buf.min(k) == 5);
    }
  }
  {
    HorizonBuffer buf = band(5, 0, 4, 0, 4);
    update_band(buf, {0, 8}, {4, 0});
    const double want_max[] = {8, 6, 4, 4, 4};
    for (std::size_t k = 0; k < 5; ++k) {
      CHECK(buf.max(k) == want_max[k]);
      CHECK(buf.min(k) == 0);
    }
  }
  {
    HorizonBuffer buf(5);
    update_band(buf, {3, 2}, {3, 9});
    CHECK(buf.max(3) == 9);
    CHECK(buf.min(3) == 2);
    CHECK_FALSE(buf.touched(2));
    CHECK_FALSE(buf.touched(4));
  }
}

TEST_CASE("edge cases (i) to (iv)") {
  {
    HorizonBuffer buf(5);
    SegmentList out;
    CHECK(draw_edge({0, 5}, {4, 5}, buf, out) == EdgeCase::BothVisible);
    REQUIRE(out.size() == 1);
    CHECK(out[0] == Segment{{0, 5}, {4, 5}});
    for (std::size_t k = 0; k < 5; ++k) CHECK(buf.max(k) == 5);
  }
  {
    HorizonBuffer buf = band(5, 0, 4, 0, 10);
    const HorizonBuffer untouched = buf;
    SegmentList out;
    CHECK(draw_edge({0, 5}, {4, 5}, buf, out) == EdgeCase::BothHidden);
    CHECK(out.empty());
    CHECK(buf == untouched);
  }
  {
    HorizonBuffer buf = band(5, 0, 2, 0, 10);
    SegmentList out;
    CHECK(draw_edge({0, 5}, {4, 5}, buf, out) == EdgeCase::EndVisible);
    REQUIRE(out.size() == 1);
    CHECK(out[0] == Segment{{3, 5}, {4, 5}});
    CHECK(buf.max(3) == 5);
    CHECK(buf.max(0) == 10);
  }
  {
    HorizonBuffer buf = band(5, 2, 4, 0, 10);
    SegmentList out;
    CHECK(draw_edge({0, 5}, {4, 5}, buf, out) == EdgeCase::StartVisible);
    REQUIRE(out.size() == 1);
    CHECK(out[0] == Segment{{0, 5}, {1, 5}});
  }
}

TEST_CASE("leading edges collapse the band onto the polyline") {
  {
    HorizonBuffer buf(6);
    SegmentList out;
    const DevicePoint pts[] = {{0, 3}, {2, 5}};
    draw_leading_edges(pts, buf, out);
    REQUIRE(out.size() == 1);
    CHECK(out[0] == Segment{{0, 3}, {2, 5}});
    const double want[] = {3, 4, 5};
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(buf.max(k) == want[k]);
      CHECK(buf.min(k) == want[k]);
    }
    CHECK_FALSE(buf.touched(3));
  }
  {
    HorizonBuffer buf(6);
    SegmentList out;
    const DevicePoint pt[] = {{4, 7}};
    draw_leading_edges(pt, buf, out);
    CHECK(out.empty());
    CHECK(buf.max(4) == 7);
    CHECK(buf.min(4) == 7);
    CHECK_FALSE(buf.touched(3));
  }
  {
    // A polyline that doubles back keeps the part drawn last.
    HorizonBuffer buf(10);
    SegmentList out;
    const DevicePoint pts[] = {{8, 9}, {2, 3}, {6, 1}};
    draw_leading_edges(pts, buf, out);
    CHECK(out.size() == 2);
    for (std::size_t k = 2; k <= 6; ++k) {
      CHECK(buf.max(k) == buf.min(k));
      CHECK(buf.max(k) == doctest::Approx(3.0 - 0.5 * (static_cast<double>(k) - 2.0)));
    }
    CHECK(buf.max(8) == 9);
  }
}

TEST_CASE("random leading polylines leave a zero-area band") {
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    HorizonBuffer buf(200);
    SegmentList out;
    std::vector<DevicePoint> pts;
    double x = rng.uniform(0, 20);
    for (std::size_t k = 0, count = rng.index(1, 12); k < count; ++k) {
      pts.push_back({x, rng.uniform(0, 500)});
      x += rng.uniform(2, 15);
    }
    draw_leading_edges(pts, buf, out);
    CHECK(out.size() == pts.size() - 1);
    for (std::size_t k = 0; k < buf.columns(); ++k) {
      if (buf.touched(k)) CHECK(buf.max(k) == buf.min(k));
    }
  }
}

TEST_CASE("draw_edge properties on random bands") {
  Rng rng(32);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t kx = 64;
    HorizonBuffer buf(kx);
    for (std::size_t k = 0; k < kx; ++k) {
      if (rng.index(0, 3) == 0) continue;
      const double a = rng.uniform(0, 100);
      const double b = rng.uniform(0, 100);
      buf.assign(k, std::min(a, b), std::max(a, b));
    }
    const DevicePoint a{rng.uniform(0, kx - 1), rng.uniform(0, 100)};
    const DevicePoint b{rng.uniform(0, kx - 1), rng.uniform(0, 100)};
    const HorizonBuffer before = buf;
    SegmentList out;
    const EdgeCase c = draw_edge(a, b, buf, out);

    CHECK(out.size() <= 1);
    for (const auto& s : out) {
      // Emitted pieces are collinear with the edge and inside its box.
      for (const DevicePoint& p : {s.a, s.b}) {
        const double cross = (b.x - a.x) * (p.y - a.y) - (p.x - a.x) * (b.y - a.y);
        CHECK(std::abs(cross) <= 1e-9 * (1.0 + std::hypot(b.x - a.x, b.y - a.y)) * 100.0);
        CHECK(p.x >= std::min(a.x, b.x) - 1e-9);
        CHECK(p.x <= std::max(a.x, b.x) + 1e-9);
        CHECK(p.y >= std::min(a.y, b.y) - 1e-9);
        CHECK(p.y <= std::max(a.y, b.y) + 1e-9);
      }
    }
    if (c == EdgeCase::BothHidden) CHECK(buf == before);
    if (c == EdgeCase::BothVisible) CHECK(out.size() == 1);
    for (std::size_t k = 0; k < kx; ++k) {
      if (buf.touched(k)) CHECK(buf.min(k) <= buf.max(k));
      if (!before.touched(k)) continue;
      CHECK(buf.max(k) >= before.max(k));
      CHECK(buf.min(k) <= before.min(k));
    }
  }
}
