#pragma once

#include <compare>
#include <vector>

#include "catmirror/validation.hpp"

namespace catmirror {

/// Unordered vertex pair stored with a < b.
struct Edge {
  int a = 0;
  int b = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(int u, int v) noexcept { return u < v ? Edge{u, v} : Edge{v, u}; }

/// A labeled tree drawn on n points of a circle (labels 1..n counterclockwise,
/// vertex 1 at the bottom) whose chords are pairwise non-crossing.
///
/// The constructor only normalizes (orients each edge, sorts the list); it
/// does not check the tree invariants. Use validate() / require_valid().
class NctTree {
 public:
  NctTree() = default;  // the single vertex
  NctTree(int n, std::vector<Edge> edges);

  int size() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Neighbors of v (1-based) in increasing label order.
  std::vector<int> neighbors(int v) const;

  friend bool operator==(const NctTree&, const NctTree&) = default;
  friend auto operator<=>(const NctTree&, const NctTree&) = default;

 private:
  int n_ = 1;
  std::vector<Edge> edges_;
};

ValidationReport validate(const NctTree& t);

/// Returns a tree with the same edges relabeled through `map` (1-based labels).
template <typename Map>
NctTree relabel(const NctTree& t, int new_size, Map&& map) {
  std::vector<Edge> out;
  out.reserve(t.edges().size());
  for (const auto& e : t.edges()) out.push_back(make_edge(map(e.a), map(e.b)));
  return NctTree(new_size, std::move(out));
}

}  // namespace catmirror
