#include "surfplot/ordering.hpp"

#include "surfplot/error.hpp"

#include <algorithm>

namespace surfplot {

namespace {

void require_grid(std::size_t m, std::size_t n) {
  if (m < 2 || n < 2) {
    throw Error(ErrorKind::InvalidArgument, "ordering", "patch orderings need M >= 2 and N >= 2");
  }
}

}  // namespace

std::string_view to_string(OrderingStrategy strategy) {
  return strategy == OrderingStrategy::CantorDiagonal ? "cantor" : "row";
}

std::vector<PatchId> row_major_order(std::size_t m, std::size_t n) {
  require_grid(m, n);
  std::vector<PatchId> order;
  order.reserve((m - 1) * (n - 1));
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 1; i < m; ++i) order.push_back({i, j});
  }
  return order;
}

std::vector<PatchId> cantor_order(std::size_t m, std::size_t n) {
  require_grid(m, n);
  std::vector<PatchId> order;
  order.reserve((m - 1) * (n - 1));
  for (std::size_t diagonal = 2; diagonal <= (m - 1) + (n - 1); ++diagonal) {
    const std::size_t i_lo = diagonal > n - 1 ? diagonal - (n - 1) : 1;
    const std::size_t i_hi = std::min(m - 1, diagonal - 1);
    for (std::size_t i = i_lo; i <= i_hi; ++i) order.push_back({i, diagonal - i});
  }
  return order;
}

std::vector<PatchId> patch_order(OrderingStrategy strategy, std::size_t m, std::size_t n) {
  return strategy == OrderingStrategy::CantorDiagonal ? cantor_order(m, n) : row_major_order(m, n);
}

std::vector<GridIndex> leading_edge_sequence(std::size_t m, std::size_t n) {
  require_grid(m, n);
  std::vector<GridIndex> seq;
  seq.reserve(m + n - 1);
  for (std::size_t j = n; j-- > 0;) seq.push_back({0, j});
  for (std::size_t i = 1; i < m; ++i) seq.push_back({i, 0});
  return seq;
}

}  // namespace surfplot
