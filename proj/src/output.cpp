#include "surfplot/output.hpp"

#include "surfplot/error.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace surfplot {

namespace {

void check_stream(const std::ostream& out, const char* what) {
  if (!out) throw Error(ErrorKind::Io, "output", std::string("failed to write ") + what);
}

}  // namespace

void write_segments(const SegmentList& segments, std::ostream& out) {
  char line[160];
  for (const auto& s : segments) {
    std::snprintf(line, sizeof line, "%.6f %.6f %.6f %.6f\n", s.a.x, s.a.y, s.b.x, s.b.y);
    out << line;
  }
  out.flush();
  check_stream(out, "segments");
}

SegmentList read_segments(std::istream& in) {
  SegmentList segments;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    Segment s;
    std::string extra;
    if (!(fields >> s.a.x >> s.a.y >> s.b.x >> s.b.y) || (fields >> extra)) {
      throw Error(ErrorKind::Parse, "segments", "line " + std::to_string(number) + " is not 'x1 y1 x2 y2'");
    }
    segments.push_back(s);
  }
  return segments;
}

void write_svg(const SegmentList& segments, const RenderConfig& cfg, std::ostream& out) {
  const double flip = static_cast<double>(cfg.ky - 1);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cfg.kx << "\" height=\"" << cfg.ky
      << "\" viewBox=\"0 0 " << cfg.kx << ' ' << cfg.ky << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<g stroke=\"black\" stroke-width=\"1\" stroke-linecap=\"round\" fill=\"none\">\n";
  char line[200];
  for (const auto& s : segments) {
    std::snprintf(line, sizeof line, "<line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\"/>\n", s.a.x,
                  flip - s.a.y, s.b.x, flip - s.b.y);
    out << line;
  }
  out << "</g>\n</svg>\n";
  out.flush();
  check_stream(out, "svg");
}

nlohmann::json render_response(const RenderResult& result, const RenderConfig& cfg) {
  nlohmann::json segments = nlohmann::json::array();
  for (const auto& s : result.segments) segments.push_back({s.a.x, s.a.y, s.b.x, s.b.y});
  const double elapsed_ms = std::chrono::duration<double, std::milli>(result.stats.elapsed).count();
  return {
      {"segments", std::move(segments)},
      {"stats",
       {{"points", result.stats.point_count},
        {"patches", result.stats.patch_count},
        {"segments", result.stats.emitted_segments},
        {"elapsedMs", elapsed_ms}}},
      {"region", std::string(to_string(result.region))},
      {"device", {cfg.kx, cfg.ky}},
  };
}

void write_json(const RenderResult& result, const RenderConfig& cfg, std::ostream& out) {
  out << render_response(result, cfg).dump() << '\n';
  out.flush();
  check_stream(out, "json");
}

}  // namespace surfplot
