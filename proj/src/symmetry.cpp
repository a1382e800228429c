#include "catmirror/symmetry.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "catmirror/bijections.hpp"
#include "catmirror/dihedral.hpp"

namespace catmirror {

NctTree nct_reflect_s(const NctTree& t) {
  const int n = t.size();
  return relabel(t, n, [n](int v) { return wrap_label(n + 2 - v, n); });
}

NctTree nct_rotate(const NctTree& t, int j) {
  const int n = t.size();
  return relabel(t, n, [n, j](int v) { return wrap_label(v - j, n); });
}

NctTree nct_rev(const NctTree& t) {
  const int n = t.size();
  return relabel(t, n, [n](int v) { return n + 1 - v; });
}

NctTree nct_delta(const NctTree& t, bool inverse) {
  const int n = t.size();
  if (n == 1) return t;
  std::vector<Edge> out;
  for (const auto& c : cells(phi_inv(t))) {
    std::array<int, 2> even{};
    int i = 0;
    for (int v : c)
      if (v % 2 == 0) even[i++] = v;
    // delta moves vertex 2i onto odd vertex 2i-1, delta^-1 onto 2i+1.
    const int shift = inverse ? 1 : 0;
    out.push_back(make_edge(wrap_label(even[0] / 2 + shift, n), wrap_label(even[1] / 2 + shift, n)));
  }
  return NctTree(n, std::move(out));
}

NctTree nct_delta_by_rotation(const NctTree& t, bool inverse) {
  const int n = t.size();
  if (n == 1) return t;
  const auto g = DihedralElement::rotation(2 * n, inverse ? -1 : 1);
  return phi(dihedral_apply(g, phi_inv(t)));
}

NctTree nct_star(const NctTree& t) { return nct_reflect_s(nct_delta(t)); }

NctTree nct_barstar(const NctTree& t) { return nct_reflect_s(nct_delta(t, true)); }

TernaryTree ternary_star(const TernaryTree& t) {
  if (t.is_leaf()) return t;
  auto [l, m, r] = t.children();
  return TernaryTree::node(ternary_star(r), ternary_star(m), ternary_star(l));
}

namespace {

// A visit of a chain to a vertex: the dart it arrives on and the dart it
// leaves on (indices into the sorted dart list, -1 at chain ends).
struct Passage {
  int in = -1;
  int out = -1;
};

using Slots = std::vector<std::array<Passage, 2>>;

int dart_index(const Pcdd& p, int from, int to) {
  const auto& ds = p.darts();
  auto it = std::lower_bound(ds.begin(), ds.end(), Dart{from, to});
  if (it == ds.end() || it->from != from || it->to != to) throw std::invalid_argument("chain uses a missing dart");
  return static_cast<int>(it - ds.begin());
}

Slots passages(const Pcdd& p) {
  Slots slots(static_cast<std::size_t>(p.size()));
  std::vector<int> used(slots.size(), 0);
  for (const auto& chain : p.chains()) {
    for (std::size_t i = 0; i < chain.size(); ++i) {
      const int v = chain[i];
      Passage pass;
      if (i > 0) pass.in = dart_index(p, chain[i - 1], v);
      if (i + 1 < chain.size()) pass.out = dart_index(p, v, chain[i + 1]);
      slots[static_cast<std::size_t>(v)][static_cast<std::size_t>(used[static_cast<std::size_t>(v)]++)] = pass;
    }
  }
  return slots;
}

// The opposite pairing at every vertex that has both in- and out-darts.
Slots switched(const Pcdd& p) {
  Slots slots = passages(p);
  for (int v = 0; v < p.size(); ++v) {
    if (p.in_degree(v) >= 1 && p.out_degree(v) >= 1) {
      auto& s = slots[static_cast<std::size_t>(v)];
      std::swap(s[0].out, s[1].out);
    }
  }
  return slots;
}

struct Traced {
  std::vector<Chain> chains;
  std::vector<std::pair<int, int>> starts;  // (vertex, slot) of each chain's first passage
  std::vector<std::pair<int, int>> ends;
};

Traced trace(const Pcdd& p, const Slots& slots) {
  Traced out;
  for (int v = 0; v < p.size(); ++v) {
    for (int s = 0; s < 2; ++s) {
      if (slots[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)].in != -1) continue;
      Chain chain{v};
      int w = v, ws = s;
      int cur = slots[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)].out;
      while (cur != -1) {
        w = p.darts()[static_cast<std::size_t>(cur)].to;
        const auto& at = slots[static_cast<std::size_t>(w)];
        ws = at[0].in == cur ? 0 : 1;
        chain.push_back(w);
        cur = at[static_cast<std::size_t>(ws)].out;
      }
      out.chains.push_back(std::move(chain));
      out.starts.emplace_back(v, s);
      out.ends.emplace_back(w, ws);
    }
  }
  return out;
}

int find_chain(const std::vector<std::pair<int, int>>& anchors, int v, int slot) {
  auto it = std::find(anchors.begin(), anchors.end(), std::make_pair(v, slot));
  if (it == anchors.end()) throw std::logic_error("dual flag chain not found");
  return static_cast<int>(it - anchors.begin());
}

}  // namespace

Pcdd pcdd_star(const Pcdd& p) {
  require_valid(p);
  if (p.is_empty()) return p;
  const auto old_slots = passages(p);
  const auto new_slots = switched(p);
  const auto traced = trace(p, new_slots);
  const auto& f = p.flag_chain();
  const int a = f.front();
  const auto& at_new = new_slots[static_cast<std::size_t>(a)];
  int slot;
  if (p.in_degree(a) == 1) {
    // f was the only chain starting at a; take the unique new one.
    slot = at_new[0].in == -1 ? 0 : 1;
  } else {
    // a is untouched by the switch; take the other chain starting there.
    const int f_out = f.size() > 1 ? dart_index(p, f[0], f[1]) : -1;
    const auto& at_old = old_slots[static_cast<std::size_t>(a)];
    const int f_slot = at_old[0].out == f_out ? 0 : 1;
    slot = 1 - f_slot;
  }
  return canonical(Pcdd(p.size(), p.darts(), traced.chains, find_chain(traced.starts, a, slot)));
}

Pcdd pcdd_barstar(const Pcdd& p) {
  require_valid(p);
  if (p.is_empty()) return p;
  const auto old_slots = passages(p);
  const auto new_slots = switched(p);
  const auto traced = trace(p, new_slots);
  const auto& f = p.flag_chain();
  const int w = f.back();
  const auto& at_new = new_slots[static_cast<std::size_t>(w)];
  int slot;
  if (p.out_degree(w) == 1) {
    slot = at_new[0].out == -1 ? 0 : 1;
  } else {
    const int f_in = f.size() > 1 ? dart_index(p, f[f.size() - 2], f.back()) : -1;
    const auto& at_old = old_slots[static_cast<std::size_t>(w)];
    const int f_slot = at_old[0].in == f_in ? 0 : 1;
    slot = 1 - f_slot;
  }
  return canonical(Pcdd(p.size(), p.darts(), traced.chains, find_chain(traced.ends, w, slot)));
}

Pcdd pcdd_bar(const Pcdd& p) { return medial(nct_delta(medial_inv(p), true)); }

}  // namespace catmirror
