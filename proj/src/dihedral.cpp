#include "catmirror/dihedral.hpp"

#include <stdexcept>

namespace catmirror {

DihedralElement DihedralElement::rotation(int two_n, int k) { return make(two_n, k, 0); }

DihedralElement DihedralElement::make(int two_n, int k, int f) {
  if (two_n < 2 || two_n % 2 != 0) throw std::invalid_argument("polygon size must be even and at least 2");
  if (f != 0 && f != 1) throw std::invalid_argument("reflection flag must be 0 or 1");
  return {two_n, ((k % two_n) + two_n) % two_n, f};
}

int DihedralElement::apply(int v) const noexcept {
  if (f) v = 3 - v;
  return wrap_label(v - k, two_n);
}

DihedralElement dihedral_compose(const DihedralElement& g, const DihedralElement& h) {
  if (g.two_n != h.two_n) throw std::invalid_argument("dihedral elements of different groups");
  // d^k1 r^f1 d^k2 r^f2 = d^(k1 +- k2) r^(f1+f2), using r d = d^-1 r.
  return DihedralElement::make(g.two_n, g.k + (g.f ? -h.k : h.k), g.f ^ h.f);
}

DihedralElement dihedral_inverse(const DihedralElement& g) {
  if (g.f) return g;
  return DihedralElement::make(g.two_n, -g.k, 0);
}

QuadDissection dihedral_apply(const DihedralElement& g, const QuadDissection& q) {
  if (g.two_n != q.polygon_size()) throw std::invalid_argument("dihedral element does not match polygon size");
  std::vector<Edge> out;
  out.reserve(q.diagonals().size());
  for (const auto& d : q.diagonals()) out.push_back(make_edge(g.apply(d.a), g.apply(d.b)));
  return QuadDissection(q.half_size(), std::move(out));
}

}  // namespace catmirror
