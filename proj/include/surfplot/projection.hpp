#pragma once

#include <cmath>

namespace surfplot {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
  friend bool operator==(const Vec3&, const Vec3&) = default;
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

/// Observer position V. Caches d = |V| and d1 = |V0|, the length of its
/// footprint on the x-y plane.
class Viewpoint {
 public:
  Viewpoint() = default;
  Viewpoint(double v1, double v2, double v3);
  explicit Viewpoint(const Vec3& v) : Viewpoint(v.x, v.y, v.z) {}

  double v1() const { return v1_; }
  double v2() const { return v2_; }
  double v3() const { return v3_; }
  double d() const { return d_; }
  double d1() const { return d1_; }
  Vec3 position() const { return {v1_, v2_, v3_}; }

  friend bool operator==(const Viewpoint&, const Viewpoint&) = default;

 private:
  double v1_ = 0.0, v2_ = 0.0, v3_ = 0.0;
  double d_ = 0.0, d1_ = 0.0;
};

/// Unit axes of the image plane through the origin normal to V. The y axis
/// is the perspective image of the world z axis.
struct ProjectionBasis {
  Vec3 x_axis;
  Vec3 y_axis;
};

struct ImagePoint {
  double u = 0.0;
  double v = 0.0;
  friend bool operator==(const ImagePoint&, const ImagePoint&) = default;
};

/// Relative footprint length below which V counts as lying on the z axis.
inline constexpr double kDegenerateFootprint = 0.5e-6;
/// Horizontal offset (relative to d) applied by nudge_if_degenerate.
inline constexpr double kViewpointNudge = 1e-6;
/// |d^2 - A.V| below kEyePlaneTolerance * d^2 means A sits on the eye plane.
inline constexpr double kEyePlaneTolerance = 1e-12;
/// Perspective ratios at or above this are rejected as effectively behind the eye.
inline constexpr double kMaxPerspectiveRatio = 1e6;

bool is_degenerate(const Viewpoint& view);

/// Moves a viewpoint sitting on the z axis to (kViewpointNudge * d, v2, v3).
/// Non-degenerate viewpoints are returned unchanged.
Viewpoint nudge_if_degenerate(const Viewpoint& view);

/// Throws Error{DegenerateViewpoint} when V is on the z axis and
/// Error{InvalidArgument} when V is the origin.
ProjectionBasis basis_from_viewpoint(const Viewpoint& view);

/// Perspective scalar r = d^2 / (d^2 - A.V): the image of A is V + r (A - V).
/// Throws PointAtEyePlane or BehindEye.
double perspective_ratio(const Vec3& point, const Viewpoint& view);

/// Image-plane coordinates (u, v) = r (A.X, A.Y) of `point` seen from `view`.
/// `basis` must have been built from `view`.
ImagePoint project_point(const Vec3& point, const Viewpoint& view, const ProjectionBasis& basis);

}  // namespace surfplot
