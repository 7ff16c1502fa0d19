#include "surfplot/grid_file.hpp"

#include "surfplot/error.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

namespace surfplot {

namespace {

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(ErrorKind::Parse, "grid file", what);
}

double parse_height(const std::string& token, std::size_t i, std::size_t j) {
  std::string lower(token);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "nan") return std::numeric_limits<double>::quiet_NaN();
  try {
    std::size_t used = 0;
    const double value = std::stod(token, &used);
    if (used == token.size() && std::isfinite(value)) return value;
  } catch (const std::exception&) {
  }
  std::ostringstream msg;
  msg << "bad height '" << token << "' at sample (" << i + 1 << ", " << j + 1 << ")";
  parse_error(msg.str());
}

}  // namespace

SurfaceGrid read_grid(std::istream& in) {
  std::string tag;
  long long m = 0;
  long long n = 0;
  DomainRect dom;
  if (!(in >> tag) || tag != "grid") parse_error("expected header 'grid M N xMin xMax yMin yMax'");
  if (!(in >> m >> n >> dom.x_min >> dom.x_max >> dom.y_min >> dom.y_max)) {
    parse_error("incomplete header, expected 'grid M N xMin xMax yMin yMax'");
  }
  if (m < 2 || n < 2) parse_error("grid needs M >= 2 and N >= 2");
  if (!(dom.x_min < dom.x_max) || !(dom.y_min < dom.y_max)) {
    parse_error("domain must satisfy xMin < xMax and yMin < yMax");
  }
  const auto cols = static_cast<std::size_t>(m);
  const auto rows = static_cast<std::size_t>(n);
  std::vector<double> z(cols * rows);
  std::vector<std::uint8_t> mask(cols * rows, 1);
  bool masked = false;
  std::string token;
  for (std::size_t j = 0; j < rows; ++j) {
    for (std::size_t i = 0; i < cols; ++i) {
      if (!(in >> token)) {
        std::ostringstream msg;
        msg << "expected " << cols * rows << " heights, input ended at sample (" << i + 1 << ", "
            << j + 1 << ")";
        parse_error(msg.str());
      }
      const double h = parse_height(token, i, j);
      if (std::isnan(h)) {
        mask[i * rows + j] = 0;
        masked = true;
      } else {
        z[i * rows + j] = h;
      }
    }
  }
  if (in >> token) parse_error("trailing data after the last row");
  if (!masked) return SurfaceGrid::uniform(dom, cols, rows, std::move(z));

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t k = 0; k < z.size(); ++k) {
    if (mask[k] == 0) continue;
    lo = std::min(lo, z[k]);
    hi = std::max(hi, z[k]);
  }
  if (!(lo <= hi)) throw Error(ErrorKind::EmptySurface, "grid file", "every sample is masked");
  const double z0 = hi + 10.0 * (hi - lo + 1.0);
  for (std::size_t k = 0; k < z.size(); ++k) {
    if (mask[k] == 0) z[k] = z0;
  }
  return SurfaceGrid::uniform(dom, cols, rows, std::move(z), std::move(mask));
}

void write_grid(std::ostream& out, const SurfaceGrid& grid) {
  const DomainRect dom = grid.domain();
  out << std::setprecision(17) << "grid " << grid.columns() << ' ' << grid.rows() << ' ' << dom.x_min
      << ' ' << dom.x_max << ' ' << dom.y_min << ' ' << dom.y_max << '\n';
  for (std::size_t j = 0; j < grid.rows(); ++j) {
    for (std::size_t i = 0; i < grid.columns(); ++i) {
      if (i > 0) out << ' ';
      if (grid.member(i, j)) {
        out << grid.height(i, j);
      } else {
        out << "NaN";
      }
    }
    out << '\n';
  }
  if (!out) throw Error(ErrorKind::Io, "output", "failed to write grid");
}

}  // namespace surfplot
