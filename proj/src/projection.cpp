#include "surfplot/projection.hpp"

#include "surfplot/error.hpp"

#include <sstream>

namespace surfplot {

Viewpoint::Viewpoint(double v1, double v2, double v3)
    : v1_(v1), v2_(v2), v3_(v3),
      d_(std::sqrt(v1 * v1 + v2 * v2 + v3 * v3)),
      d1_(std::sqrt(v1 * v1 + v2 * v2)) {}

bool is_degenerate(const Viewpoint& view) {
  return view.d1() < kDegenerateFootprint * view.d();
}

Viewpoint nudge_if_degenerate(const Viewpoint& view) {
  if (view.d() == 0.0 || !is_degenerate(view)) return view;
  return Viewpoint(kViewpointNudge * view.d(), view.v2(), view.v3());
}

ProjectionBasis basis_from_viewpoint(const Viewpoint& view) {
  if (!(view.d() > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "projection", "viewpoint coincides with the origin");
  }
  if (is_degenerate(view)) {
    std::ostringstream msg;
    msg << "viewpoint (" << view.v1() << ", " << view.v2() << ", " << view.v3()
        << ") lies on the z axis; the vertical image axis is undefined";
    throw Error(ErrorKind::DegenerateViewpoint, "projection", msg.str());
  }
  const double d = view.d();
  const double d1 = view.d1();
  const double dd1 = d * d1;
  ProjectionBasis basis;
  basis.x_axis = {-view.v2() / d1, view.v1() / d1, 0.0};
  basis.y_axis = {-view.v1() * view.v3() / dd1, -view.v2() * view.v3() / dd1, d1 * d1 / dd1};
  return basis;
}

double perspective_ratio(const Vec3& point, const Viewpoint& view) {
  const double d2 = view.d() * view.d();
  const double denom = d2 - dot(point, view.position());
  if (std::abs(denom) < kEyePlaneTolerance * d2) {
    throw Error(ErrorKind::PointAtEyePlane, "projection",
                "point lies on the plane through the eye parallel to the image plane");
  }
  const double r = d2 / denom;
  if (!(r > 0.0) || !(r < kMaxPerspectiveRatio)) {
    std::ostringstream msg;
    msg << "point (" << point.x << ", " << point.y << ", " << point.z
        << ") is behind the eye (r = " << r << ")";
    throw Error(ErrorKind::BehindEye, "projection", msg.str());
  }
  return r;
}

ImagePoint project_point(const Vec3& point, const Viewpoint& view, const ProjectionBasis& basis) {
  const double r = perspective_ratio(point, view);
  return {r * dot(point, basis.x_axis), r * dot(point, basis.y_axis)};
}

}  // namespace surfplot
