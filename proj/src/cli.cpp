#include "surfplot/cli.hpp"

#include "surfplot/catalog.hpp"
#include "surfplot/error.hpp"
#include "surfplot/grid_file.hpp"
#include "surfplot/output.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>

namespace surfplot {

namespace {

constexpr int kUsageError = 2;
constexpr int kRenderError = 1;

struct Options {
  std::string surface = "ripple";
  std::string input;
  std::string grid = "40x40";
  std::string view = "8,-8,6";
  std::string device = "1024x768";
  std::string ordering = "row";
  std::string format = "svg";
  std::string out = "-";
  double margin = 0.05;
  std::vector<std::string> params;
};

RenderJob build_job(const Options& opt) {
  RenderJob job;
  if (!opt.input.empty()) {
    std::ifstream file(opt.input);
    if (!file) throw Error(ErrorKind::InvalidArgument, "arguments", "cannot open grid file " + opt.input);
    job.surface.kind = "grid";
    job.surface.grid = read_grid(file);
  } else {
    job.surface.kind = opt.surface;
  }
  for (const auto& p : opt.params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(ErrorKind::Parse, "arguments", "--param expects name=value, got '" + p + "'");
    }
    std::size_t used = 0;
    double value = 0.0;
    const std::string text = p.substr(eq + 1);
    try {
      value = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size()) {
      throw Error(ErrorKind::Parse, "arguments", "bad value in --param '" + p + "'");
    }
    job.surface.parameters[p.substr(0, eq)] = value;
  }
  std::tie(job.m, job.n) = parse_dimensions(opt.grid);
  job.view = Viewpoint(parse_vector3(opt.view));
  std::tie(job.config.kx, job.config.ky) = parse_dimensions(opt.device);
  job.config.ordering = parse_ordering(opt.ordering);
  job.config.margin = opt.margin;
  validate_job(job);
  return job;
}

void emit(const std::string& format, const RenderResult& result, const RenderConfig& cfg,
          std::ostream& sink) {
  if (format == "segments") {
    write_segments(result.segments, sink);
  } else if (format == "json") {
    write_json(result, cfg, sink);
  } else {
    write_svg(result.segments, cfg, sink);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Perspective wireframe plots of z = f(x, y) with hidden lines removed", "surfplot"};
  Options opt;
  app.add_option("--surface", opt.surface, "builtin surface: ripple, saddle, gauss, plane, sphere, disk")
      ->capture_default_str();
  app.add_option("--input", opt.input, "grid file to plot instead of a builtin surface");
  app.add_option("--grid", opt.grid, "samples per axis, MxN")->capture_default_str();
  app.add_option("--view", opt.view, "viewpoint v1,v2,v3")->capture_default_str();
  app.add_option("--device", opt.device, "device raster, WxH")->capture_default_str();
  app.add_option("--ordering", opt.ordering, "patch ordering")
      ->check(CLI::IsMember({"row", "cantor"}))
      ->capture_default_str();
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"svg", "segments", "json"}))
      ->capture_default_str();
  app.add_option("--out", opt.out, "output file, - for stdout")->capture_default_str();
  app.add_option("--margin", opt.margin, "blank fraction on each device side")->capture_default_str();
  app.add_option("--param", opt.params, "surface parameter override name=value (repeatable)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsageError;
  }

  RenderJob job;
  try {
    job = build_job(opt);
  } catch (const Error& e) {
    // Bad flags are usage errors; a grid file that fails to load is not.
    if (e.stage() == "grid file" || e.stage() == "grid") {
      err << "surfplot: error in stage '" << e.stage() << "': " << e.what() << '\n';
      return kRenderError;
    }
    err << "surfplot: " << e.what() << "\nRun with --help for more information.\n";
    return kUsageError;
  }

  try {
    const RenderResult result = run_job(job);
    if (opt.out == "-") {
      emit(opt.format, result, job.config, out);
    } else {
      std::ofstream file(opt.out, std::ios::binary);
      if (!file) throw Error(ErrorKind::Io, "output", "cannot open " + opt.out + " for writing");
      emit(opt.format, result, job.config, file);
    }
  } catch (const Error& e) {
    err << "surfplot: error in stage '" << e.stage() << "': " << e.what() << '\n';
    return kRenderError;
  }
  return 0;
}

}  // namespace surfplot
