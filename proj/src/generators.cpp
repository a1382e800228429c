#include "catmirror/generators.hpp"

#include <algorithm>
#include <stdexcept>

#include "catmirror/bijections.hpp"
#include "catmirror/symmetry.hpp"

namespace catmirror {

namespace {

// Every tree of size a+b+c-1 = n arises exactly once as fuse_nct of a triple.
template <typename Visit>
void fuse_all(int n, const std::vector<std::vector<NctTree>>& table, Visit&& visit) {
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; a + b <= n; ++b) {
      const int c = n + 1 - a - b;
      for (const auto& l : table[static_cast<std::size_t>(a)])
        for (const auto& m : table[static_cast<std::size_t>(b)])
          for (const auto& r : table[static_cast<std::size_t>(c)]) visit(fuse_nct(l, m, r));
    }
  }
}

std::vector<std::vector<NctTree>> tables_below(int n) {
  std::vector<std::vector<NctTree>> table(static_cast<std::size_t>(std::max(n, 2)));
  table[1] = {NctTree()};
  for (int size = 2; size < n; ++size) {
    fuse_all(size, table, [&](NctTree t) { table[static_cast<std::size_t>(size)].push_back(std::move(t)); });
  }
  return table;
}

}  // namespace

void for_each_nct(int n, const std::function<void(const NctTree&)>& visit) {
  if (n < 1) throw std::invalid_argument("tree size must be at least 1");
  if (n == 1) {
    visit(NctTree());
    return;
  }
  fuse_all(n, tables_below(n), visit);
}

void for_each_dissection(int n, const std::function<void(const QuadDissection&)>& visit) {
  for_each_nct(n, [&](const NctTree& t) { visit(phi_inv(t)); });
}

std::vector<NctTree> gen_ncts(int n) {
  std::vector<NctTree> out;
  for_each_nct(n, [&](const NctTree& t) { out.push_back(t); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<QuadDissection> gen_dissections(int n) {
  std::vector<QuadDissection> out;
  for_each_dissection(n, [&](const QuadDissection& q) { out.push_back(q); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TernaryTree> gen_ternary(int m) {
  if (m < 0) throw std::invalid_argument("internal count must be non-negative");
  std::vector<std::vector<TernaryTree>> table(static_cast<std::size_t>(m) + 1);
  table[0] = {TernaryTree::leaf()};
  for (int size = 1; size <= m; ++size) {
    auto& row = table[static_cast<std::size_t>(size)];
    for (int a = 0; a < size; ++a)
      for (int b = 0; a + b < size; ++b) {
        const int c = size - 1 - a - b;
        for (const auto& l : table[static_cast<std::size_t>(a)])
          for (const auto& mid : table[static_cast<std::size_t>(b)])
            for (const auto& r : table[static_cast<std::size_t>(c)]) row.push_back(TernaryTree::node(l, mid, r));
      }
  }
  auto out = std::move(table[static_cast<std::size_t>(m)]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Pcdd> gen_pcdds(int m) {
  if (m < 0) throw std::invalid_argument("vertex count must be non-negative");
  std::vector<Pcdd> out;
  for_each_nct(m + 1, [&](const NctTree& t) { out.push_back(medial(t)); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TernaryTree> gen_self_dual_ternary(int m) {
  if (m < 0) throw std::invalid_argument("internal count must be non-negative");
  std::vector<std::vector<TernaryTree>> sd(static_cast<std::size_t>(m) + 1);
  sd[0] = {TernaryTree::leaf()};
  for (int size = 1; size <= m; ++size) {
    // t = Node(t0, t1, t0*), t1 self-dual with size - 1 - 2|t0| internal nodes.
    for (int i = 0; 2 * i + 1 <= size; ++i) {
      const auto t0s = gen_ternary(i);
      for (const auto& t0 : t0s) {
        const auto t0_star = ternary_star(t0);
        for (const auto& t1 : sd[static_cast<std::size_t>(size - 1 - 2 * i)]) {
          sd[static_cast<std::size_t>(size)].push_back(TernaryTree::node(t0, t1, t0_star));
        }
      }
    }
  }
  auto out = std::move(sd[static_cast<std::size_t>(m)]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace catmirror
