#pragma once

#include <compare>

#include "catmirror/dissection.hpp"

namespace catmirror {

/// The element delta^k r^f of the dihedral group acting on the labels of a
/// `two_n`-gon. delta relabels v -> v-1 and r relabels v -> 3-v (mod two_n);
/// s = delta r is the reflection through vertex 1 (v -> 2-v).
struct DihedralElement {
  int two_n = 2;
  int k = 0;
  int f = 0;

  static DihedralElement identity(int two_n) { return {two_n, 0, 0}; }
  static DihedralElement rotation(int two_n, int k);
  static DihedralElement delta(int two_n) { return rotation(two_n, 1); }
  static DihedralElement r(int two_n) { return {two_n, 0, 1}; }
  static DihedralElement s(int two_n) { return {two_n, 1, 1}; }
  /// Validated constructor; reduces k mod two_n.
  static DihedralElement make(int two_n, int k, int f);

  /// Image of a polygon label (1..two_n).
  int apply(int v) const noexcept;

  friend auto operator<=>(const DihedralElement&, const DihedralElement&) = default;
};

/// g∘h; both must share two_n.
DihedralElement dihedral_compose(const DihedralElement& g, const DihedralElement& h);
DihedralElement dihedral_inverse(const DihedralElement& g);
QuadDissection dihedral_apply(const DihedralElement& g, const QuadDissection& q);

/// Maps any integer to its representative in 1..m.
inline int wrap_label(int v, int m) noexcept { return ((v - 1) % m + m) % m + 1; }

}  // namespace catmirror
