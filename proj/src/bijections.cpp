#include "catmirror/bijections.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "catmirror/chords.hpp"
#include "catmirror/dihedral.hpp"
#include "catmirror/symmetry.hpp"

namespace catmirror {

// ---------------------------------------------------------------- phi

NctTree phi(const QuadDissection& q) {
  const int n = q.half_size();
  if (n == 1) {
    require_valid(q);
    return NctTree();
  }
  std::vector<Edge> out;
  for (const auto& c : cells(q)) {
    std::array<int, 2> odd{};
    int i = 0;
    for (int v : c)
      if (v % 2 == 1) odd[i++] = v;
    out.push_back(make_edge((odd[0] + 1) / 2, (odd[1] + 1) / 2));
  }
  return NctTree(n, std::move(out));
}

NctTree even_tree(const QuadDissection& q) {
  const int n = q.half_size();
  if (n == 1) {
    require_valid(q);
    return NctTree();
  }
  std::vector<Edge> out;
  for (const auto& c : cells(q)) {
    std::array<int, 2> even{};
    int i = 0;
    for (int v : c)
      if (v % 2 == 0) even[i++] = v;
    out.push_back(make_edge(even[0] / 2, even[1] / 2));
  }
  return NctTree(n, std::move(out));
}

namespace {

// Natural split of t at the edge {1,k}: component sizes and the pieces.
struct Split {
  int k = 0;
  int m = 0;
  NctTriple parts;
};

std::vector<int> component_without(const NctTree& t, int start, Edge removed) {
  const int n = t.size();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  for (const auto& e : t.edges()) {
    if (e == removed) continue;
    adj[static_cast<std::size_t>(e.a)].push_back(e.b);
    adj[static_cast<std::size_t>(e.b)].push_back(e.a);
  }
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> stack{start}, out;
  seen[static_cast<std::size_t>(start)] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (int y : adj[static_cast<std::size_t>(x)]) {
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        stack.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <typename Keep, typename Map>
NctTree induced(const NctTree& t, int size, Keep&& keep, Map&& map) {
  std::vector<Edge> out;
  for (const auto& e : t.edges())
    if (keep(e.a) && keep(e.b)) out.push_back(make_edge(map(e.a), map(e.b)));
  return NctTree(size, std::move(out));
}

Split split(const NctTree& t) {
  const int n = t.size();
  if (n < 2) throw std::invalid_argument("cannot unfuse the single-vertex tree");
  const auto nb = t.neighbors(1);
  if (nb.empty()) throw std::invalid_argument("vertex 1 is isolated");
  Split s;
  s.k = nb.front();
  const Edge root{1, s.k};
  s.m = component_without(t, s.k, root).back();
  const int k = s.k, m = s.m;
  s.parts.left = induced(
      t, n - m + 1, [m](int v) { return v == 1 || v > m; }, [m](int v) { return v == 1 ? 1 : v - m + 1; });
  s.parts.middle = induced(
      t, m - k + 1, [k, m](int v) { return k <= v && v <= m; }, [k](int v) { return v - k + 1; });
  s.parts.right = induced(
      t, k - 1, [k](int v) { return 2 <= v && v <= k; }, [k](int v) { return v == k ? 1 : v; });
  return s;
}

}  // namespace

NctTriple unfuse_nct(const NctTree& t) {
  require_valid(t);
  return split(t).parts;
}

NctTree fuse_nct(const NctTree& left, const NctTree& middle, const NctTree& right) {
  const int a = left.size(), b = middle.size(), c = right.size();
  const int n = a + b + c - 1;
  const int k = c + 1;
  const int m = k + b - 1;
  std::vector<Edge> out{make_edge(1, k)};
  for (const auto& e : left.edges()) {
    auto f = [m](int v) { return v == 1 ? 1 : v + m - 1; };
    out.push_back(make_edge(f(e.a), f(e.b)));
  }
  for (const auto& e : middle.edges()) out.push_back(make_edge(e.a + k - 1, e.b + k - 1));
  for (const auto& e : right.edges()) {
    auto f = [k](int v) { return v == 1 ? k : v; };
    out.push_back(make_edge(f(e.a), f(e.b)));
  }
  return NctTree(n, std::move(out));
}

NctTree fuse_nct(const NctTriple& parts) { return fuse_nct(parts.left, parts.middle, parts.right); }

namespace {

QuadDissection phi_inv_raw(const NctTree& t) {
  const int n = t.size();
  if (n == 1) return QuadDissection();
  // Root cell {1, 2, 2k-1, 2m}; the right, middle and left pieces fill the
  // sub-polygons [2..2k-1], [2k-1..2m] and {1} + [2m..2n].
  const auto s = split(t);
  const int x = 2 * s.k - 1, y = 2 * s.m, len = 2 * n;
  std::vector<Edge> out;
  if (x != 3) out.push_back({2, x});
  if (y != x + 1) out.push_back({x, y});
  if (y != len) out.push_back({1, y});
  const auto right = phi_inv_raw(s.parts.right);
  const auto middle = phi_inv_raw(s.parts.middle);
  const auto left = phi_inv_raw(s.parts.left);
  for (const auto& d : right.diagonals()) {
    auto f = [x](int v) { return v == 1 ? x : v; };
    out.push_back(make_edge(f(d.a), f(d.b)));
  }
  for (const auto& d : middle.diagonals()) out.push_back(make_edge(d.a + x - 1, d.b + x - 1));
  for (const auto& d : left.diagonals()) {
    auto f = [y](int v) { return v == 1 ? 1 : v + y - 2; };
    out.push_back(make_edge(f(d.a), f(d.b)));
  }
  return QuadDissection(n, std::move(out));
}

}  // namespace

QuadDissection phi_inv(const NctTree& t) {
  require_valid(t);
  return phi_inv_raw(t);
}

QuadDissection superpose(const NctTree& odd, const NctTree& even) {
  const int n = odd.size();
  if (even.size() != n) throw std::invalid_argument("superpose: trees of different sizes");
  if (n == 1) return QuadDissection();
  const int len = 2 * n;
  std::vector<Edge> out;
  for (const auto& e : odd.edges()) {
    const int a = 2 * e.a - 1, b = 2 * e.b - 1;
    int hits = 0;
    std::array<int, 4> cell{};
    for (const auto& f : even.edges()) {
      if (chords_cross_unchecked(a, b, 2 * f.a, 2 * f.b)) {
        ++hits;
        cell = {a, b, 2 * f.a, 2 * f.b};
      }
    }
    if (hits != 1) throw std::invalid_argument("superpose: trees are not delta-dual");
    std::sort(cell.begin(), cell.end());
    for (int i = 0; i < 4; ++i) {
      const Edge side = make_edge(cell[static_cast<std::size_t>(i)], cell[static_cast<std::size_t>((i + 1) % 4)]);
      if (side.b - side.a != 1 && !(side.a == 1 && side.b == len)) out.push_back(side);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  QuadDissection q(n, std::move(out));
  require_valid(q);
  return q;
}

// ---------------------------------------------------------------- psi

TernaryTree psi(const QuadDissection& q) {
  const int n = q.half_size();
  if (n == 1) {
    require_valid(q);
    return TernaryTree::leaf();
  }
  const int len = 2 * n;
  const auto cs = cells(q);
  auto holds = [](const Cell& c, int v) { return std::find(c.begin(), c.end(), v) != c.end(); };
  auto cell_with = [&](int u, int v, const Cell* exclude) -> const Cell& {
    for (const auto& c : cs)
      if (&c != exclude && holds(c, u) && holds(c, v)) return c;
    throw std::logic_error("psi: no cell on edge");
  };
  auto is_side = [len](int u, int v) {
    const int d = ((v - u) % len + len) % len;
    return d == 1 || d == len - 1;
  };
  auto build = [&](auto&& self, const Cell& c, int a, int b) -> TernaryTree {
    const int i = static_cast<int>(std::find(c.begin(), c.end(), a) - c.begin());
    const int j = static_cast<int>(std::find(c.begin(), c.end(), b) - c.begin());
    const int start = (i + 1) % 4 == j ? j : i;
    std::array<TernaryTree, 3> kids;  // right, middle, left: edges ccw after the parent edge
    for (int t = 0; t < 3; ++t) {
      const int u = c[static_cast<std::size_t>((start + t) % 4)];
      const int v = c[static_cast<std::size_t>((start + t + 1) % 4)];
      if (!is_side(u, v)) kids[static_cast<std::size_t>(t)] = self(self, cell_with(u, v, &c), u, v);
    }
    return TernaryTree::node(kids[2], kids[1], kids[0]);
  };
  return build(build, cell_with(1, 2, nullptr), 1, 2);
}

QuadDissection psi_inv(const TernaryTree& t) {
  require_valid(t);
  const int n = t.internal_count() + 1;
  if (n == 1) return QuadDissection();
  const int len = 2 * n;
  std::vector<Edge> out;
  int cursor = 2;  // leaves take the sides (2,3), (3,4), ..., (2n,1) in (right, middle, left)-preorder
  auto visit = [&](auto&& self, const TernaryTree& node, bool root) -> std::pair<int, int> {
    if (node.is_leaf()) {
      const int a = cursor++;
      return {a, cursor};
    }
    const auto ch = node.children();
    const int a = self(self, ch[2], false).first;
    self(self, ch[1], false);
    const int b = self(self, ch[0], false).second;
    if (!root) out.push_back(make_edge(wrap_label(a, len), wrap_label(b, len)));
    return {a, b};
  };
  visit(visit, t, true);
  return QuadDissection(n, std::move(out));
}

// ---------------------------------------------------------------- sigma

TernaryTree sigma(const NctTree& t) {
  if (t.size() == 1) return TernaryTree::leaf();
  const auto parts = unfuse_nct(t);
  return TernaryTree::node(sigma(parts.left), sigma(nct_delta(parts.middle, true)), sigma(parts.right));
}

NctTree sigma_inv(const TernaryTree& t) {
  if (t.is_leaf()) return NctTree();
  const auto [l, m, r] = t.children();
  return fuse_nct(sigma_inv(l), nct_delta(sigma_inv(m)), sigma_inv(r));
}

// ---------------------------------------------------------------- medial

Pcdd medial(const NctTree& t) {
  const int n = t.size();
  if (n == 1) return Pcdd::empty();
  const auto& edges = t.edges();
  auto index = [&](int u, int v) {
    return static_cast<int>(std::lower_bound(edges.begin(), edges.end(), make_edge(u, v)) - edges.begin());
  };
  std::vector<Chain> chains;
  std::vector<Dart> darts;
  for (int v = 1; v <= n; ++v) {
    auto nb = t.neighbors(v);
    std::sort(nb.begin(), nb.end(), [v, n](int x, int y) { return (x - v + n) % n < (y - v + n) % n; });
    Chain chain;
    for (int w : nb) chain.push_back(index(v, w));
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) darts.push_back({chain[i], chain[i + 1]});
    chains.push_back(std::move(chain));
  }
  return Pcdd(n - 1, std::move(darts), std::move(chains), 0);
}

namespace {

// Fusion and decomposition on raw (not necessarily canonical) PCDDs.

Pcdd fuse_raw(const Pcdd& l, const Pcdd& m, const Pcdd& r) {
  std::vector<Dart> darts;
  std::vector<Chain> chains;
  std::array<Chain, 3> flags;
  int offset = 0;
  const std::array<const Pcdd*, 3> parts{&l, &m, &r};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& p = *parts[i];
    for (const auto& d : p.darts()) darts.push_back({d.from + offset, d.to + offset});
    for (std::size_t c = 0; c < p.chains().size(); ++c) {
      Chain shifted;
      for (int v : p.chains()[c]) shifted.push_back(v + offset);
      if (static_cast<int>(c) == p.flag()) flags[i] = std::move(shifted);
      else chains.push_back(std::move(shifted));
    }
    offset += p.size();
  }
  const int v0 = offset;
  const auto& [fl, fm, fr] = flags;
  if (!fl.empty()) darts.push_back({v0, fl.front()});
  if (!fr.empty()) darts.push_back({v0, fr.front()});
  if (!fm.empty()) darts.push_back({fm.back(), v0});
  Chain through = fm;
  through.push_back(v0);
  through.insert(through.end(), fr.begin(), fr.end());
  Chain flag{v0};
  flag.insert(flag.end(), fl.begin(), fl.end());
  chains.insert(chains.begin(), std::move(flag));
  chains.push_back(std::move(through));
  return Pcdd(v0 + 1, std::move(darts), std::move(chains), 0);
}

PcddTriple unfuse_raw(const Pcdd& p) {
  if (p.is_empty()) throw std::invalid_argument("the empty PCDD has no decomposition");
  const int flag = p.flag();
  const auto& chains = p.chains();
  const Chain& f = chains.at(static_cast<std::size_t>(flag));
  const int v0 = f.front();
  int other = -1;
  for (std::size_t c = 0; c < chains.size(); ++c) {
    if (static_cast<int>(c) == flag) continue;
    if (std::find(chains[c].begin(), chains[c].end(), v0) != chains[c].end()) {
      if (other != -1) throw std::invalid_argument("root vertex lies on too many chains");
      other = static_cast<int>(c);
    }
  }
  if (other == -1) throw std::invalid_argument("root vertex lies on a single chain");
  const Chain& oc = chains[static_cast<std::size_t>(other)];
  const auto pos = std::find(oc.begin(), oc.end(), v0);
  const Chain fm(oc.begin(), pos), fr(pos + 1, oc.end()), fl(f.begin() + 1, f.end());

  const int m = p.size();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));
  for (const auto& d : p.darts()) {
    if (d.from == v0 || d.to == v0) continue;
    adj[static_cast<std::size_t>(d.from)].push_back(d.to);
    adj[static_cast<std::size_t>(d.to)].push_back(d.from);
  }
  auto sub = [&](const Chain& flag_part) -> Pcdd {
    if (flag_part.empty()) return Pcdd::empty();
    std::vector<char> in(static_cast<std::size_t>(m), 0);
    std::vector<int> stack{flag_part.front()};
    in[static_cast<std::size_t>(flag_part.front())] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[static_cast<std::size_t>(x)]) {
        if (!in[static_cast<std::size_t>(y)]) {
          in[static_cast<std::size_t>(y)] = 1;
          stack.push_back(y);
        }
      }
    }
    std::vector<int> rank(static_cast<std::size_t>(m), -1);
    int size = 0;
    for (int v = 0; v < m; ++v)
      if (in[static_cast<std::size_t>(v)]) rank[static_cast<std::size_t>(v)] = size++;
    auto map_chain = [&](const Chain& c) {
      Chain out;
      for (int v : c) {
        if (!in[static_cast<std::size_t>(v)]) throw std::invalid_argument("chain leaves its component");
        out.push_back(rank[static_cast<std::size_t>(v)]);
      }
      return out;
    };
    std::vector<Chain> sub_chains{map_chain(flag_part)};
    for (std::size_t c = 0; c < chains.size(); ++c) {
      if (static_cast<int>(c) == flag || static_cast<int>(c) == other) continue;
      if (in[static_cast<std::size_t>(chains[c].front())]) sub_chains.push_back(map_chain(chains[c]));
    }
    std::vector<Dart> sub_darts;
    for (const auto& d : p.darts()) {
      if (in[static_cast<std::size_t>(d.from)] && in[static_cast<std::size_t>(d.to)]) {
        sub_darts.push_back({rank[static_cast<std::size_t>(d.from)], rank[static_cast<std::size_t>(d.to)]});
      }
    }
    return Pcdd(size, std::move(sub_darts), std::move(sub_chains), 0);
  };
  PcddTriple out{sub(fl), sub(fm), sub(fr)};
  if (out.left.size() + out.middle.size() + out.right.size() + 1 != m) {
    throw std::invalid_argument("decomposition does not cover every vertex");
  }
  return out;
}

NctTree medial_inv_raw(const Pcdd& p) {
  if (p.is_empty()) return NctTree();
  const auto parts = unfuse_raw(p);
  return fuse_nct(medial_inv_raw(parts.left), medial_inv_raw(parts.middle), medial_inv_raw(parts.right));
}

TernaryTree tau_raw(const Pcdd& p) {
  if (p.is_empty()) return TernaryTree::leaf();
  const auto parts = unfuse_raw(p);
  return TernaryTree::node(tau_raw(parts.left), tau_raw(pcdd_bar(parts.middle)), tau_raw(parts.right));
}

}  // namespace

NctTree medial_inv(const Pcdd& p) {
  require_valid(p);
  return medial_inv_raw(p);
}

Pcdd canonical(const Pcdd& p) { return medial(medial_inv(p)); }

Pcdd fuse_pcdd(const Pcdd& left, const Pcdd& middle, const Pcdd& right) {
  for (const auto* part : {&left, &middle, &right}) require_valid(*part);
  return canonical(fuse_raw(left, middle, right));
}

PcddTriple unfuse_pcdd(const Pcdd& p) {
  require_valid(p);
  auto raw = unfuse_raw(p);
  return {canonical(raw.left), canonical(raw.middle), canonical(raw.right)};
}

TernaryTree tau(const Pcdd& p) {
  require_valid(p);
  return tau_raw(p);
}

// ---------------------------------------------------------------- beta

BetaImage beta_encode(const TernaryTree& t) {
  if (ternary_star(t) != t) throw std::invalid_argument("beta_encode: tree is not self-dual");
  if (t.is_leaf()) return t;
  const auto [t0, t1, t2] = t.children();
  const auto inner = beta_encode(t1);
  if (t.internal_count() % 2 == 0) {
    const auto& [u, v] = std::get<TernaryPair>(inner);
    return TernaryTree::node(t0, u, v);
  }
  return TernaryPair{t0, std::get<TernaryTree>(inner)};
}

TernaryTree beta_decode(const BetaImage& image) {
  if (const auto* tree = std::get_if<TernaryTree>(&image)) {
    if (tree->is_leaf()) return *tree;
    const auto [t0, u, v] = tree->children();
    return TernaryTree::node(t0, beta_decode(TernaryPair{u, v}), ternary_star(t0));
  }
  const auto& [t0, y] = std::get<TernaryPair>(image);
  return TernaryTree::node(t0, beta_decode(y), ternary_star(t0));
}

}  // namespace catmirror
