#include "catmirror/ternary.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace catmirror {

namespace {

// Length of the complete subtree code starting at `pos`.
std::size_t subtree_length(const std::vector<std::uint8_t>& code, std::size_t pos) {
  std::size_t need = 1;
  std::size_t i = pos;
  while (need > 0) {
    need += code.at(i++) ? 2 : static_cast<std::size_t>(-1);
  }
  return i - pos;
}

}  // namespace

TernaryTree TernaryTree::node(const TernaryTree& left, const TernaryTree& middle, const TernaryTree& right) {
  TernaryTree t;
  t.code_.clear();
  t.code_.reserve(1 + left.code_.size() + middle.code_.size() + right.code_.size());
  t.code_.push_back(1);
  for (const auto* part : {&left, &middle, &right}) t.code_.insert(t.code_.end(), part->code_.begin(), part->code_.end());
  return t;
}

TernaryTree TernaryTree::from_code(std::vector<std::uint8_t> code) {
  TernaryTree t;
  t.code_ = std::move(code);
  return t;
}

std::array<TernaryTree, 3> TernaryTree::children() const {
  if (is_leaf()) throw std::logic_error("a leaf has no children");
  std::array<TernaryTree, 3> out;
  std::size_t pos = 1;
  for (auto& child : out) {
    const std::size_t len = subtree_length(code_, pos);
    child.code_.assign(code_.begin() + static_cast<std::ptrdiff_t>(pos),
                       code_.begin() + static_cast<std::ptrdiff_t>(pos + len));
    pos += len;
  }
  return out;
}

int TernaryTree::internal_count() const noexcept {
  return static_cast<int>(std::count(code_.begin(), code_.end(), std::uint8_t{1}));
}

ValidationReport validate(const TernaryTree& t) {
  ValidationReport report;
  const auto& code = t.code();
  if (code.empty()) {
    report.add("empty code");
    return report;
  }
  long need = 1;
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (code[i] > 1) {
      report.add("symbol other than 0/1 at " + std::to_string(i));
      return report;
    }
    if (need == 0) {
      report.add("trailing symbols after complete tree");
      return report;
    }
    need += code[i] ? 2 : -1;
  }
  if (need != 0) report.add("incomplete tree code");
  const auto internal = static_cast<long>(t.internal_count());
  const auto leaves = static_cast<long>(code.size()) - internal;
  if (need == 0 && leaves != 2 * internal + 1) report.add("leaf count != 2 * internal + 1");
  return report;
}

}  // namespace catmirror
