#pragma once

#include "surfplot/pipeline.hpp"
#include "surfplot/projection.hpp"
#include "surfplot/surface_grid.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace surfplot {

struct ParameterSpec {
  std::string name;
  double default_value = 0.0;
  std::string description;
};

struct SurfaceKind {
  std::string name;
  std::string description;
  std::vector<ParameterSpec> parameters;
};

/// ripple, saddle, gauss, plane, sphere, disk. Immutable.
const std::vector<SurfaceKind>& builtin_catalog();
const SurfaceKind* find_builtin(std::string_view name);

/// What to draw: a builtin by name with parameter overrides, or a grid
/// loaded from the grid file format (kind "grid").
struct SurfaceSpec {
  std::string kind = "ripple";
  std::map<std::string, double> parameters;
  std::optional<SurfaceGrid> grid;
};

struct RenderJob {
  SurfaceSpec surface;
  std::size_t m = 40;
  std::size_t n = 40;
  Viewpoint view{8.0, -8.0, 6.0};
  RenderConfig config;
};

/// Rejects unknown kinds, unknown parameters and invalid sizes with
/// InvalidArgument. Does not render.
void validate_job(const RenderJob& job);

/// Samples the surface and renders it. Spheres go through the shared-band
/// renderer, everything else through render().
RenderResult run_job(const RenderJob& job);

/// Parses "MxN" (also used for "WxH" device sizes). Throws Parse.
std::pair<std::size_t, std::size_t> parse_dimensions(std::string_view text);

/// Parses "v1,v2,v3". Throws Parse.
Vec3 parse_vector3(std::string_view text);

/// Parses "row" or "cantor". Throws Parse.
OrderingStrategy parse_ordering(std::string_view text);

}  // namespace surfplot
