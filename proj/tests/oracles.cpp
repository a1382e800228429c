#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace oracle {

using catmirror::Edge;
using catmirror::NctTree;
using catmirror::QuadDissection;
using catmirror::TernaryTree;

namespace {

// Plain interleaving on sorted labels, written independently of the library.
bool interleaved(int a, int b, int c, int d) {
  if (a > b) std::swap(a, b);
  if (c > d) std::swap(c, d);
  if (a == c || a == d || b == c || b == d) return false;
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

void choose(const std::vector<Edge>& pool, std::size_t k, const std::function<void(const std::vector<Edge>&)>& visit) {
  std::vector<Edge> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (pick.size() == k) {
      visit(pick);
      return;
    }
    for (std::size_t i = start; i + (k - pick.size()) <= pool.size(); ++i) {
      bool ok = true;
      for (const auto& e : pick)
        if (interleaved(e.a, e.b, pool[i].a, pool[i].b)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      pick.push_back(pool[i]);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
}

}  // namespace

std::vector<NctTree> brute_ncts(int n) {
  if (n == 1) return {NctTree()};
  std::vector<Edge> pool;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pool.push_back({i, j});
  std::vector<NctTree> out;
  choose(pool, static_cast<std::size_t>(n - 1), [&](const std::vector<Edge>& pick) {
    std::vector<int> parent(static_cast<std::size_t>(n) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& e : pick) {
      int a = find(e.a), b = find(e.b);
      if (a == b) return;
      parent[a] = b;
    }
    out.emplace_back(n, pick);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<QuadDissection> brute_dissections(int n) {
  if (n <= 2) return {QuadDissection(n, {})};
  const int len = 2 * n;
  std::vector<Edge> pool;
  for (int i = 1; i <= len; ++i)
    for (int j = i + 2; j <= len; ++j)
      if ((i + j) % 2 == 1 && !(i == 1 && j == len)) pool.push_back({i, j});
  std::vector<QuadDissection> out;
  choose(pool, static_cast<std::size_t>(n - 2), [&](const std::vector<Edge>& pick) { out.emplace_back(n, pick); });
  std::sort(out.begin(), out.end());
  return out;
}

bool chords_cross_geometric(int a, int b, int c, int d, int cycle_len) {
  const double pi = std::acos(-1.0);
  auto pt = [&](int v) {
    const double t = 2 * pi * (v - 1) / cycle_len;
    return std::pair<double, double>{std::cos(t), std::sin(t)};
  };
  auto orient = [](std::pair<double, double> p, std::pair<double, double> q, std::pair<double, double> r) {
    return (q.first - p.first) * (r.second - p.second) - (q.second - p.second) * (r.first - p.first);
  };
  const auto A = pt(a), B = pt(b), C = pt(c), D = pt(d);
  const double o1 = orient(A, B, C), o2 = orient(A, B, D), o3 = orient(C, D, A), o4 = orient(C, D, B);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

std::vector<NctTree> crossing_duals(const NctTree& t, const std::vector<NctTree>& family) {
  const int n = t.size();
  std::vector<NctTree> out;
  auto hits = [](int a, int b, const NctTree& other, int parity_offset) {
    int count = 0;
    for (const auto& f : other.edges())
      if (interleaved(a, b, 2 * f.a - parity_offset, 2 * f.b - parity_offset)) ++count;
    return count;
  };
  for (const auto& t2 : family) {
    if (t2.size() != n) continue;
    bool ok = true;
    for (const auto& e : t.edges()) ok = ok && hits(2 * e.a - 1, 2 * e.b - 1, t2, 0) == 1;
    for (const auto& f : t2.edges()) ok = ok && hits(2 * f.a, 2 * f.b, t, 1) == 1;
    if (ok) out.push_back(t2);
  }
  return out;
}

std::vector<TernaryTree> brute_ternary(int m) {
  // Every 0/1 word with m ones and 2m+1 zeros whose running deficit first
  // reaches zero at the end is a preorder code.
  const int len = 3 * m + 1;
  std::vector<TernaryTree> out;
  std::vector<std::uint8_t> code;
  std::function<void(int, int, long)> rec = [&](int ones, int zeros, long need) {
    if (static_cast<int>(code.size()) == len) {
      if (need == 0) out.push_back(TernaryTree::from_code(code));
      return;
    }
    if (need <= 0) return;
    if (ones < m) {
      code.push_back(1);
      rec(ones + 1, zeros, need + 2);
      code.pop_back();
    }
    if (zeros < 2 * m + 1) {
      code.push_back(0);
      rec(ones, zeros + 1, need - 1);
      code.pop_back();
    }
  };
  rec(0, 0, 1);
  std::sort(out.begin(), out.end());
  return out;
}

TernaryTree mirror(const TernaryTree& t) {
  // Parse the code into nested subtrees, swap first and last child.
  const auto& code = t.code();
  std::size_t pos = 0;
  std::function<std::vector<std::uint8_t>()> rec = [&]() -> std::vector<std::uint8_t> {
    if (code[pos++] == 0) return {0};
    auto a = rec();
    auto b = rec();
    auto c = rec();
    std::vector<std::uint8_t> out{1};
    out.insert(out.end(), c.begin(), c.end());
    out.insert(out.end(), b.begin(), b.end());
    out.insert(out.end(), a.begin(), a.end());
    return out;
  };
  return TernaryTree::from_code(rec());
}

}  // namespace oracle
