#pragma once

#include <compare>
#include <vector>

#include "catmirror/validation.hpp"

namespace catmirror {

struct Dart {
  int from = 0;
  int to = 0;

  friend auto operator<=>(const Dart&, const Dart&) = default;
};

using Chain = std::vector<int>;

/// Flagged perfectly chain-decomposed binary ditree on vertices 0..m-1.
///
/// Darts are kept sorted; chains keep the order they were given in. Two PCDDs
/// describing isomorphic structures compare equal only after canonicalization
/// (see canonical() in bijections.hpp); every public operation returns
/// canonical values.
class Pcdd {
 public:
  Pcdd();  // the empty PCDD
  Pcdd(int m, std::vector<Dart> darts, std::vector<Chain> chains, int flag);

  static Pcdd empty() { return {}; }
  static Pcdd point();

  int size() const noexcept { return m_; }
  bool is_empty() const noexcept { return m_ == 0; }
  const std::vector<Dart>& darts() const noexcept { return darts_; }
  const std::vector<Chain>& chains() const noexcept { return chains_; }
  int flag() const noexcept { return flag_; }
  const Chain& flag_chain() const { return chains_.at(static_cast<std::size_t>(flag_)); }

  int in_degree(int v) const noexcept;
  int out_degree(int v) const noexcept;

  friend bool operator==(const Pcdd&, const Pcdd&) = default;
  friend auto operator<=>(const Pcdd&, const Pcdd&) = default;

 private:
  int m_ = 0;
  std::vector<Dart> darts_;
  std::vector<Chain> chains_;
  int flag_ = 0;
};

ValidationReport validate(const Pcdd& p);

}  // namespace catmirror
