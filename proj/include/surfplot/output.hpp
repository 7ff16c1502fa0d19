#pragma once

#include "surfplot/horizon.hpp"
#include "surfplot/pipeline.hpp"

#include <iosfwd>
#include <string>

#include <json.hpp>

namespace surfplot {

/// One segment per line, "x1 y1 x2 y2" with six decimals, device units, y up.
void write_segments(const SegmentList& segments, std::ostream& out);

/// Inverse of write_segments. Throws Parse.
SegmentList read_segments(std::istream& in);

/// SVG document with viewBox "0 0 kx ky"; device y is flipped to
/// document y = ky - 1 - y.
void write_svg(const SegmentList& segments, const RenderConfig& cfg, std::ostream& out);

/// Response body shared by the json output format and the render service:
/// {"segments": [[x1,y1,x2,y2],...], "stats": {...}, "region": "...", "device": [kx, ky]}
nlohmann::json render_response(const RenderResult& result, const RenderConfig& cfg);

void write_json(const RenderResult& result, const RenderConfig& cfg, std::ostream& out);

}  // namespace surfplot
