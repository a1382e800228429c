#include <gtest/gtest.h>

#include "catmirror/bijections.hpp"
#include "catmirror/dihedral.hpp"
#include "catmirror/generators.hpp"
#include "catmirror/io.hpp"
#include "catmirror/symmetry.hpp"
#include "oracles.hpp"

using namespace catmirror;

namespace {

const NctTree kFig2(5, {{1, 2}, {1, 3}, {3, 4}, {3, 5}});

TernaryTree T(const char* s) { return parse_ternary(s); }

}  // namespace

TEST(TreeMaps, ReflectS) {
  const NctTree fig1(8, {{1, 4}, {1, 3}, {1, 8}, {2, 3}, {4, 7}, {4, 6}, {5, 6}});
  EXPECT_EQ(nct_reflect_s(fig1), NctTree(8, {{1, 6}, {1, 7}, {1, 2}, {7, 8}, {3, 6}, {4, 6}, {4, 5}}));
  EXPECT_EQ(nct_reflect_s(NctTree(3, {{1, 2}, {1, 3}})), NctTree(3, {{1, 2}, {1, 3}}));
  EXPECT_EQ(nct_reflect_s(NctTree(2, {{1, 2}})), NctTree(2, {{1, 2}}));
}

TEST(TreeMaps, Rotate) {
  EXPECT_EQ(nct_rotate(NctTree(3, {{1, 2}, {1, 3}}), 1), NctTree(3, {{1, 3}, {2, 3}}));
  EXPECT_EQ(nct_rotate(kFig2, 0), kFig2);
  EXPECT_EQ(nct_rotate(kFig2, 5), kFig2);
  EXPECT_EQ(nct_rotate(kFig2, -2), nct_rotate(kFig2, 3));
}

TEST(TreeMaps, Rev) {
  EXPECT_EQ(nct_rev(NctTree(3, {{1, 2}, {1, 3}})), NctTree(3, {{2, 3}, {1, 3}}));
  EXPECT_EQ(nct_rev(NctTree(2, {{1, 2}})), NctTree(2, {{1, 2}}));
  EXPECT_EQ(nct_rev(NctTree(4, {{1, 2}, {2, 3}, {2, 4}})), NctTree(4, {{3, 4}, {2, 3}, {1, 3}}));
}

TEST(Delta, WorkedInstances) {
  EXPECT_EQ(nct_delta(kFig2), NctTree(5, {{1, 2}, {2, 5}, {3, 4}, {4, 5}}));
  EXPECT_EQ(nct_delta(NctTree(2, {{1, 2}})), NctTree(2, {{1, 2}}));
  EXPECT_EQ(nct_delta(NctTree(3, {{1, 2}, {1, 3}})), NctTree(3, {{1, 2}, {2, 3}}));
  EXPECT_EQ(nct_delta(NctTree()), NctTree());
}

TEST(Delta, IsTheUniqueCrossingDual) {
  for (int n = 2; n <= 6; ++n) {
    const auto family = oracle::brute_ncts(n);
    for (const auto& t : family) {
      const auto duals = oracle::crossing_duals(t, family);
      ASSERT_EQ(duals.size(), 1u) << format(t);
      ASSERT_EQ(nct_delta(t), duals.front()) << format(t);
    }
  }
}

TEST(Delta, Properties) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& t : gen_ncts(n)) {
      const auto d = nct_delta(t);
      ASSERT_TRUE(validate(d).ok());
      ASSERT_EQ(d, nct_delta_by_rotation(t));
      ASSERT_EQ(nct_delta(t, true), nct_delta_by_rotation(t, true));
      ASSERT_EQ(nct_delta(d, true), t);
      ASSERT_EQ(nct_delta(d), nct_rotate(t, 1)) << format(t);
      // delta is the tree shadow of the one-step polygon rotation.
      ASSERT_EQ(d, phi(dihedral_apply(DihedralElement::delta(2 * n), phi_inv(t))));
    }
  }
}

TEST(Star, WorkedInstances) {
  EXPECT_EQ(nct_star(kFig2), NctTree(5, {{1, 5}, {2, 5}, {2, 3}, {3, 4}}));
  EXPECT_EQ(nct_star(NctTree(3, {{1, 2}, {2, 3}})), NctTree(3, {{1, 2}, {2, 3}}));
  EXPECT_EQ(nct_star(NctTree(2, {{1, 2}})), NctTree(2, {{1, 2}}));
}

TEST(Star, Properties) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& t : gen_ncts(n)) {
      const auto st = nct_star(t), bs = nct_barstar(t);
      ASSERT_EQ(nct_star(st), t);
      ASSERT_EQ(nct_barstar(bs), t);
      ASSERT_EQ(st, nct_reflect_s(nct_delta(t)));
      ASSERT_EQ(bs, nct_reflect_s(nct_delta(t, true)));
      ASSERT_EQ(st, phi(dihedral_apply(DihedralElement::r(2 * n), phi_inv(t))));
      // Self-duality is a reflection symmetry: t* = t iff t is fixed by r.
      ASSERT_EQ(st == t, phi_inv(t) == dihedral_apply(DihedralElement::r(2 * n), phi_inv(t)));
    }
  }
}

TEST(TernaryStar, WorkedInstances) {
  EXPECT_EQ(ternary_star(T("((* * *) * *)")), T("(* * (* * *))"));
  EXPECT_EQ(ternary_star(T("(* (* * *) *)")), T("(* (* * *) *)"));
  const QuadDissection fig3(5, {{1, 4}, {5, 8}, {5, 10}});
  EXPECT_EQ(ternary_star(psi(fig3)), psi(dihedral_apply(DihedralElement::r(10), fig3)));
}

TEST(TernaryStar, MatchesIndependentMirror) {
  for (int m = 0; m <= 7; ++m)
    for (const auto& t : oracle::brute_ternary(m)) {
      const auto st = ternary_star(t);
      ASSERT_EQ(st, oracle::mirror(t));
      ASSERT_EQ(st.internal_count(), m);
      ASSERT_EQ(ternary_star(st), t);
    }
}

TEST(PcddStar, DegenerateAndWorked) {
  EXPECT_EQ(pcdd_star(Pcdd::point()), Pcdd::point());
  EXPECT_EQ(pcdd_star(Pcdd::empty()), Pcdd::empty());
  EXPECT_EQ(pcdd_barstar(Pcdd::point()), Pcdd::point());
  EXPECT_EQ(pcdd_barstar(Pcdd::empty()), Pcdd::empty());
  EXPECT_EQ(pcdd_star(medial(kFig2)), medial(nct_star(kFig2)));
}

TEST(PcddStar, ConjugatesThroughMedial) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& t : gen_ncts(n)) {
      const auto p = medial(t);
      const auto st = pcdd_star(p), bs = pcdd_barstar(p);
      ASSERT_TRUE(validate(st).ok());
      ASSERT_TRUE(validate(bs).ok());
      ASSERT_EQ(st, medial(nct_star(t))) << format(t);
      ASSERT_EQ(bs, medial(nct_barstar(t))) << format(t);
      ASSERT_EQ(pcdd_star(st), p);
      ASSERT_EQ(pcdd_barstar(bs), p);
    }
  }
}

TEST(PcddStar, SameDartsReconnected) {
  // Without canonical renumbering the underlying ditree is untouched; check
  // that the dart multiset is preserved up to the relabeling by comparing
  // degree sequences.
  for (int m = 1; m <= 6; ++m) {
    for (const auto& p : gen_pcdds(m)) {
      const auto st = pcdd_star(p);
      ASSERT_EQ(st.size(), p.size());
      ASSERT_EQ(st.darts().size(), p.darts().size());
      ASSERT_EQ(st.chains().size(), p.chains().size());
      std::vector<std::pair<int, int>> a, b;
      for (int v = 0; v < m; ++v) {
        a.emplace_back(p.in_degree(v), p.out_degree(v));
        b.emplace_back(st.in_degree(v), st.out_degree(v));
      }
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      ASSERT_EQ(a, b);
    }
  }
}

TEST(PcddStar, FusionDualityLaw) {
  std::vector<std::vector<Pcdd>> by_size;
  for (int m = 0; m <= 5; ++m) by_size.push_back(gen_pcdds(m));
  std::size_t checked = 0;
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; a + b <= 5; ++b)
      for (int c = 0; a + b + c <= 5; ++c)
        for (const auto& x : by_size[static_cast<std::size_t>(a)])
          for (const auto& y : by_size[static_cast<std::size_t>(b)])
            for (const auto& z : by_size[static_cast<std::size_t>(c)]) {
              ASSERT_EQ(pcdd_star(fuse_pcdd(x, y, z)), fuse_pcdd(pcdd_star(z), pcdd_barstar(y), pcdd_star(x)))
                  << format(x) << " | " << format(y) << " | " << format(z);
              ++checked;
            }
  EXPECT_GT(checked, 400u);
}

TEST(PcddBar, FixedDegenerateCases) {
  EXPECT_EQ(pcdd_bar(Pcdd::point()), Pcdd::point());
  EXPECT_EQ(pcdd_bar(Pcdd::empty()), Pcdd::empty());
}

TEST(PcddBar, TwoVertexInstance) {
  // The middle piece of the star {1-2,2-3,2-4}: one dart, flag moves from
  // the long chain to the trivial chain at the dart's source.
  const auto mid = unfuse_nct(NctTree(4, {{1, 2}, {2, 3}, {2, 4}})).middle;
  const auto p = medial(mid);
  ASSERT_EQ(p.size(), 2);
  ASSERT_EQ(p.darts().size(), 1u);
  ASSERT_EQ(p.flag_chain().size(), 2u);
  const auto b = pcdd_bar(p);
  EXPECT_EQ(b.darts(), p.darts());
  ASSERT_EQ(b.flag_chain().size(), 1u);
  EXPECT_EQ(b.flag_chain().front(), p.darts().front().from);
  EXPECT_EQ(b, medial(NctTree(3, {{1, 3}, {2, 3}})));
}

TEST(PcddBar, FiniteOrder) {
  for (int m = 0; m <= 6; ++m) {
    for (const auto& p : gen_pcdds(m)) {
      auto x = pcdd_bar(p);
      ASSERT_TRUE(validate(x).ok());
      for (int i = 1; i < 2 * (m + 1); ++i) x = pcdd_bar(x);
      ASSERT_EQ(x, p) << format(p);
    }
  }
}
