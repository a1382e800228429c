#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "catmirror/validation.hpp"

namespace catmirror {

/// Plane ternary tree stored as its preorder code (1 = internal node, 0 = leaf).
/// Value type: cheap to compare, hash and copy.
class TernaryTree {
 public:
  TernaryTree() : code_{0} {}  // the leaf

  static TernaryTree leaf() { return {}; }
  static TernaryTree node(const TernaryTree& left, const TernaryTree& middle, const TernaryTree& right);
  /// Wraps a raw preorder code without checking it; see validate().
  static TernaryTree from_code(std::vector<std::uint8_t> code);

  bool is_leaf() const noexcept { return code_.size() == 1 && code_[0] == 0; }
  /// Children (left, middle, right) of an internal root.
  std::array<TernaryTree, 3> children() const;
  int internal_count() const noexcept;
  const std::vector<std::uint8_t>& code() const noexcept { return code_; }

  friend bool operator==(const TernaryTree&, const TernaryTree&) = default;
  friend auto operator<=>(const TernaryTree&, const TernaryTree&) = default;

 private:
  std::vector<std::uint8_t> code_;
};

/// Checks that the code is a complete preorder encoding (leaves = 2 * internal + 1).
ValidationReport validate(const TernaryTree& t);

}  // namespace catmirror
