#pragma once

#include <array>
#include <compare>
#include <vector>

#include "catmirror/nct.hpp"

namespace catmirror {

/// A quadrangular dissection of the labeled 2n-gon (vertices 1..2n).
/// Diagonals are stored normalized (a < b) and sorted.
class QuadDissection {
 public:
  QuadDissection() = default;  // the bigon, n = 1
  QuadDissection(int n, std::vector<Edge> diagonals);

  int half_size() const noexcept { return n_; }
  int polygon_size() const noexcept { return 2 * n_; }
  const std::vector<Edge>& diagonals() const noexcept { return diagonals_; }

  friend bool operator==(const QuadDissection&, const QuadDissection&) = default;
  friend auto operator<=>(const QuadDissection&, const QuadDissection&) = default;

 private:
  int n_ = 1;
  std::vector<Edge> diagonals_;
};

/// Four polygon vertices in counterclockwise order, smallest label first.
using Cell = std::array<int, 4>;

ValidationReport validate(const QuadDissection& q);

/// Cells of a valid dissection, sorted. Throws ValidationError on invalid input.
std::vector<Cell> cells(const QuadDissection& q);

/// Faces of the polygon cut along the given (non-crossing) diagonals, each as a
/// sorted corner list. Used by validation; no quadrangularity requirement.
std::vector<std::vector<int>> split_faces(int polygon_size, const std::vector<Edge>& diagonals);

}  // namespace catmirror
