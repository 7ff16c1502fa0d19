#include "surfplot/catalog.hpp"

#include "surfplot/error.hpp"
#include "surfplot/extensions.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace surfplot {

namespace {

std::vector<SurfaceKind> make_catalog() {
  return {
      {"ripple", "amplitude * sin(frequency * rho) / (frequency * rho) over [-extent, extent]^2",
       {{"amplitude", 1.0, "peak height at the center"},
        {"frequency", 10.0, "radial frequency c"},
        {"extent", 1.0, "half width of the square domain"}}},
      {"saddle", "amplitude * (x^2 - y^2) over [-extent, extent]^2",
       {{"amplitude", 1.0, "height scale"}, {"extent", 1.0, "half width of the square domain"}}},
      {"gauss", "amplitude * exp(-width * rho^2) over [-extent, extent]^2",
       {{"amplitude", 1.0, "peak height"},
        {"width", 4.0, "decay rate c"},
        {"extent", 1.0, "half width of the square domain"}}},
      {"plane", "slope_x * x + slope_y * y + offset over [-extent, extent]^2",
       {{"slope_x", 0.0, "dz/dx"},
        {"slope_y", 0.0, "dz/dy"},
        {"offset", 0.0, "height at the origin"},
        {"extent", 1.0, "half width of the square domain"}}},
      {"sphere", "sphere split into two hemispheres drawn with one shared horizon",
       {{"radius", 1.0, "sphere radius"},
        {"cx", 0.0, "center x"},
        {"cy", 0.0, "center y"},
        {"cz", 0.0, "center z"}}},
      {"disk", "amplitude * (1 - rho^2 / radius^2) over the disk rho <= radius",
       {{"amplitude", 0.5, "height at the center"}, {"radius", 1.0, "disk radius"}}},
  };
}

double param(const RenderJob& job, const SurfaceKind& kind, const std::string& name) {
  if (auto it = job.surface.parameters.find(name); it != job.surface.parameters.end()) return it->second;
  for (const auto& p : kind.parameters) {
    if (p.name == name) return p.default_value;
  }
  throw Error(ErrorKind::InvalidArgument, "surface", "unknown parameter " + name);
}

void require_positive(double value, const std::string& name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw Error(ErrorKind::InvalidArgument, "surface", name + " must be positive");
  }
}

std::size_t parse_count(std::string_view text, std::string_view whole) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
    throw Error(ErrorKind::Parse, "arguments",
                "expected dimensions of the form MxN, got '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

const std::vector<SurfaceKind>& builtin_catalog() {
  static const std::vector<SurfaceKind> catalog = make_catalog();
  return catalog;
}

const SurfaceKind* find_builtin(std::string_view name) {
  for (const auto& kind : builtin_catalog()) {
    if (kind.name == name) return &kind;
  }
  return nullptr;
}

void validate_job(const RenderJob& job) {
  job.config.validate();
  if (job.surface.kind == "grid") {
    if (!job.surface.grid) {
      throw Error(ErrorKind::InvalidArgument, "surface", "grid surface without grid data");
    }
    return;
  }
  const SurfaceKind* kind = find_builtin(job.surface.kind);
  if (kind == nullptr) {
    throw Error(ErrorKind::InvalidArgument, "surface", "unknown surface '" + job.surface.kind + "'");
  }
  for (const auto& [name, value] : job.surface.parameters) {
    bool known = false;
    for (const auto& p : kind->parameters) known = known || p.name == name;
    if (!known) {
      throw Error(ErrorKind::InvalidArgument, "surface",
                  "surface '" + kind->name + "' has no parameter '" + name + "'");
    }
    if (!std::isfinite(value)) {
      throw Error(ErrorKind::InvalidArgument, "surface", "parameter '" + name + "' is not finite");
    }
  }
  if (job.m < 2 || job.n < 2) {
    throw Error(ErrorKind::InvalidArgument, "surface", "grid needs M >= 2 and N >= 2");
  }
}

RenderResult run_job(const RenderJob& job) {
  validate_job(job);
  if (job.surface.kind == "grid") return render(*job.surface.grid, job.view, job.config);

  const SurfaceKind& kind = *find_builtin(job.surface.kind);
  auto p = [&](const char* name) { return param(job, kind, name); };

  if (kind.name == "sphere") {
    require_positive(p("radius"), "radius");
    const SphereSplit split =
        split_sphere({p("cx"), p("cy"), p("cz")}, p("radius"), job.m, job.n, job.view);
    const auto pieces = split.draw_order();
    return render_shared_band(pieces, job.view, job.config);
  }
  if (kind.name == "disk") {
    const double radius = p("radius");
    require_positive(radius, "radius");
    const double amplitude = p("amplitude");
    ConvexMask mask;
    mask.membership = [radius](double x, double y) { return x * x + y * y <= radius * radius; };
    const SurfaceGrid grid = extend_convex_domain(
        [&](double x, double y) { return amplitude * (1.0 - (x * x + y * y) / (radius * radius)); },
        {-radius, radius, -radius, radius}, job.m, job.n, mask);
    return render(grid, job.view, job.config);
  }

  const double extent = p("extent");
  require_positive(extent, "extent");
  const DomainRect domain{-extent, extent, -extent, extent};
  HeightFunction f;
  if (kind.name == "ripple") {
    const double amplitude = p("amplitude");
    const double c = p("frequency");
    f = [amplitude, c](double x, double y) {
      const double arg = c * std::sqrt(x * x + y * y);
      return arg == 0.0 ? amplitude : amplitude * std::sin(arg) / arg;
    };
  } else if (kind.name == "saddle") {
    const double amplitude = p("amplitude");
    f = [amplitude](double x, double y) { return amplitude * (x * x - y * y); };
  } else if (kind.name == "gauss") {
    const double amplitude = p("amplitude");
    const double width = p("width");
    f = [amplitude, width](double x, double y) { return amplitude * std::exp(-width * (x * x + y * y)); };
  } else {
    const double sx = p("slope_x");
    const double sy = p("slope_y");
    const double offset = p("offset");
    f = [sx, sy, offset](double x, double y) { return sx * x + sy * y + offset; };
  }
  return render(sample_function(f, domain, job.m, job.n), job.view, job.config);
}

std::pair<std::size_t, std::size_t> parse_dimensions(std::string_view text) {
  const auto sep = text.find_first_of("xX");
  if (sep == std::string_view::npos) {
    throw Error(ErrorKind::Parse, "arguments",
                "expected dimensions of the form MxN, got '" + std::string(text) + "'");
  }
  return {parse_count(text.substr(0, sep), text), parse_count(text.substr(sep + 1), text)};
}

Vec3 parse_vector3(std::string_view text) {
  double values[3];
  std::size_t start = 0;
  for (int k = 0; k < 3; ++k) {
    const std::size_t comma = text.find(',', start);
    const bool last = k == 2;
    if (last != (comma == std::string_view::npos)) {
      throw Error(ErrorKind::Parse, "arguments",
                  "expected three comma separated numbers, got '" + std::string(text) + "'");
    }
    const std::string piece(text.substr(start, last ? std::string_view::npos : comma - start));
    std::size_t used = 0;
    try {
      values[k] = std::stod(piece, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != piece.size() || !std::isfinite(values[k])) {
      throw Error(ErrorKind::Parse, "arguments", "bad number '" + piece + "' in '" + std::string(text) + "'");
    }
    start = comma + 1;
  }
  return {values[0], values[1], values[2]};
}

OrderingStrategy parse_ordering(std::string_view text) {
  if (text == "row") return OrderingStrategy::RowMajorFront;
  if (text == "cantor") return OrderingStrategy::CantorDiagonal;
  throw Error(ErrorKind::Parse, "arguments", "ordering must be 'row' or 'cantor', got '" + std::string(text) + "'");
}

}  // namespace surfplot
