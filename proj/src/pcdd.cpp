#include "catmirror/pcdd.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace catmirror {

Pcdd::Pcdd() : chains_{Chain{}} {}

Pcdd::Pcdd(int m, std::vector<Dart> darts, std::vector<Chain> chains, int flag)
    : m_(m), darts_(std::move(darts)), chains_(std::move(chains)), flag_(flag) {
  std::sort(darts_.begin(), darts_.end());
}

Pcdd Pcdd::point() { return Pcdd(1, {}, {Chain{0}, Chain{0}}, 0); }

int Pcdd::in_degree(int v) const noexcept {
  return static_cast<int>(std::count_if(darts_.begin(), darts_.end(), [v](const Dart& d) { return d.to == v; }));
}

int Pcdd::out_degree(int v) const noexcept {
  return static_cast<int>(std::count_if(darts_.begin(), darts_.end(), [v](const Dart& d) { return d.from == v; }));
}

ValidationReport validate(const Pcdd& p) {
  ValidationReport report;
  const int m = p.size();
  const auto& darts = p.darts();
  const auto& chains = p.chains();
  if (m < 0) {
    report.add("negative vertex count");
    return report;
  }
  if (m == 0) {
    if (!darts.empty()) report.add("empty PCDD with darts");
    if (chains.size() != 1 || !chains[0].empty()) report.add("empty PCDD must have exactly one empty chain");
    if (p.flag() != 0) report.add("empty PCDD flag must be 0");
    return report;
  }

  bool darts_ok = true;
  for (const auto& d : darts) {
    if (d.from < 0 || d.from >= m || d.to < 0 || d.to >= m || d.from == d.to) {
      report.add("dart " + std::to_string(d.from) + ">" + std::to_string(d.to) + " invalid");
      darts_ok = false;
    }
  }
  if (std::adjacent_find(darts.begin(), darts.end()) != darts.end()) {
    report.add("duplicate dart");
    darts_ok = false;
  }
  if (!darts_ok) return report;

  if (static_cast<int>(darts.size()) != m - 1) report.add("a tree on m vertices needs m-1 darts");
  std::vector<int> parent(static_cast<std::size_t>(m));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = m;
  for (const auto& d : darts) {
    int a = find(d.from), b = find(d.to);
    if (a == b) {
      report.add("darts contain a cycle");
    } else {
      parent[a] = b;
      --components;
    }
  }
  if (components != 1) report.add("underlying graph is disconnected");
  for (int v = 0; v < m; ++v) {
    if (p.in_degree(v) > 2) report.add("in-degree of " + std::to_string(v) + " exceeds 2");
    if (p.out_degree(v) > 2) report.add("out-degree of " + std::to_string(v) + " exceeds 2");
  }

  std::vector<int> visits(static_cast<std::size_t>(m), 0);
  std::multiset<Dart> covered;
  for (std::size_t c = 0; c < chains.size(); ++c) {
    const auto& chain = chains[c];
    if (chain.empty()) {
      report.add("empty chain " + std::to_string(c));
      continue;
    }
    bool ok = true;
    for (int v : chain) {
      if (v < 0 || v >= m) ok = false;
    }
    if (!ok) {
      report.add("chain " + std::to_string(c) + " has an out-of-range vertex");
      continue;
    }
    for (int v : chain) ++visits[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      Dart d{chain[i], chain[i + 1]};
      if (!std::binary_search(darts.begin(), darts.end(), d)) {
        report.add("chain " + std::to_string(c) + " steps along a missing dart");
      }
      covered.insert(d);
    }
  }
  for (const auto& d : darts) {
    if (covered.count(d) != 1) {
      report.add("dart " + std::to_string(d.from) + ">" + std::to_string(d.to) + " covered " +
                 std::to_string(covered.count(d)) + " times");
    }
  }
  for (int v = 0; v < m; ++v) {
    if (visits[static_cast<std::size_t>(v)] != 2) {
      report.add("vertex " + std::to_string(v) + " lies on " + std::to_string(visits[static_cast<std::size_t>(v)]) +
                 " chains");
    }
  }
  if (p.flag() < 0 || p.flag() >= static_cast<int>(chains.size())) report.add("flag index out of range");
  return report;
}

}  // namespace catmirror
