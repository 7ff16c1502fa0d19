#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace surfplot {

/// Zero-based sample index: column i along x, row j along y.
struct GridIndex {
  std::size_t i = 0;
  std::size_t j = 0;
  friend bool operator==(const GridIndex&, const GridIndex&) = default;
};

/// Patch named by its far corner: vertices (i,j), (i-1,j), (i,j-1), (i-1,j-1),
/// with 1 <= i < M and 1 <= j < N.
using PatchId = GridIndex;

enum class OrderingStrategy { RowMajorFront, CantorDiagonal };

std::string_view to_string(OrderingStrategy strategy);

/// Rows front to back, each row left to right.
std::vector<PatchId> row_major_order(std::size_t m, std::size_t n);

/// Anti-diagonals of increasing i + j, increasing i within a diagonal.
std::vector<PatchId> cantor_order(std::size_t m, std::size_t n);

std::vector<PatchId> patch_order(OrderingStrategy strategy, std::size_t m, std::size_t n);

/// Left leading edge from the back corner down to (0,0), then the front
/// leading edge out to (M-1, 0). Always M + N - 1 points.
std::vector<GridIndex> leading_edge_sequence(std::size_t m, std::size_t n);

}  // namespace surfplot
