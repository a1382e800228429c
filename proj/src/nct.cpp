#include "catmirror/nct.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "catmirror/chords.hpp"

namespace catmirror {

NctTree::NctTree(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (auto& e : edges_) e = make_edge(e.a, e.b);
  std::sort(edges_.begin(), edges_.end());
}

std::vector<int> NctTree::neighbors(int v) const {
  std::vector<int> out;
  for (const auto& e : edges_) {
    if (e.a == v) out.push_back(e.b);
    else if (e.b == v) out.push_back(e.a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ValidationReport validate(const NctTree& t) {
  ValidationReport report;
  const int n = t.size();
  if (n < 1) {
    report.add("vertex count must be at least 1");
    return report;
  }
  const auto& edges = t.edges();
  if (static_cast<int>(edges.size()) != n - 1) {
    report.add("expected " + std::to_string(n - 1) + " edges, found " + std::to_string(edges.size()));
  }
  bool labels_ok = true;
  for (const auto& e : edges) {
    if (e.a < 1 || e.b > n) {
      report.add("edge " + std::to_string(e.a) + "-" + std::to_string(e.b) + " out of range");
      labels_ok = false;
    } else if (e.a == e.b) {
      report.add("loop at " + std::to_string(e.a));
      labels_ok = false;
    }
  }
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) report.add("duplicate edge");
  if (!labels_ok) return report;

  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto& e = edges[i];
      const auto& f = edges[j];
      if (e.a == f.a || e.a == f.b || e.b == f.a || e.b == f.b) continue;
      if (chords_cross_unchecked(e.a, e.b, f.a, f.b)) {
        report.add("crossing edges " + std::to_string(e.a) + "-" + std::to_string(e.b) + " and " +
                   std::to_string(f.a) + "-" + std::to_string(f.b));
      }
    }
  }

  std::vector<int> parent(static_cast<std::size_t>(n) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n;
  for (const auto& e : edges) {
    int ra = find(e.a), rb = find(e.b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  if (components != 1) report.add("disconnected (" + std::to_string(components) + " components)");
  return report;
}

}  // namespace catmirror
