#include <gtest/gtest.h>

#include "catmirror/dihedral.hpp"
#include "catmirror/enumeration.hpp"
#include "catmirror/generators.hpp"
#include "catmirror/kernels.hpp"

using namespace catmirror;

TEST(Kernels, FixedPointCountsParallelEqualsSerial) {
  for (int n = 1; n <= 8; ++n) {
    const auto family = gen_dissections(n);
    const auto group = group_elements(GroupSpec::D2n, n);
    const auto par = kernels::fixed_point_counts(family, group);
    ASSERT_EQ(par, kernels::fixed_point_counts_serial(family, group));
    for (std::size_t i = 0; i < group.size(); ++i)
      ASSERT_EQ(CountValue(static_cast<unsigned long>(par[i])), fixed_points_formula(classify(group[i]), n));
  }
}

TEST(Kernels, ImagePermutationParallelEqualsSerial) {
  const auto family = gen_dissections(7);
  const auto rot = [](const QuadDissection& q) { return dihedral_apply(DihedralElement::delta(14), q); };
  const auto perm = kernels::image_permutation<QuadDissection>(family, rot);
  EXPECT_EQ(perm, kernels::image_permutation_serial<QuadDissection>(family, rot));
  std::vector<bool> hit(perm.size());
  for (auto i : perm) hit[static_cast<std::size_t>(i)] = true;
  EXPECT_EQ(std::count(hit.begin(), hit.end(), true), static_cast<long>(perm.size()));
}

TEST(Kernels, CountIfParallelEqualsSerial) {
  const auto family = gen_dissections(8);
  const auto pred = [](const QuadDissection& q) { return dihedral_apply(DihedralElement::r(16), q) == q; };
  const auto par = kernels::count_if<QuadDissection>(family, pred);
  EXPECT_EQ(par, kernels::count_if_serial<QuadDissection>(family, pred));
  EXPECT_EQ(par, 30u);  // self-dual count at n = 8
}

TEST(Kernels, OrbitLabels) {
  // Two generators on 6 points: (0 1 2) and (3 4); 5 fixed.
  const std::vector<std::vector<std::int32_t>> gens{{1, 2, 0, 3, 4, 5}, {0, 1, 2, 4, 3, 5}};
  EXPECT_EQ(kernels::orbit_labels(6, gens), (std::vector<std::int32_t>{0, 0, 0, 3, 3, 5}));
  EXPECT_EQ(kernels::count_orbits(6, gens), 3u);
  EXPECT_EQ(kernels::count_orbits(4, {}), 4u);
}

TEST(Kernels, ExceptionsPropagateOutOfParallelLoops) {
  const auto family = gen_dissections(6);
  // Maps into a different family, so lookups fail inside the loop.
  const auto bad = [](const QuadDissection&) { return QuadDissection(3, {{1, 4}}); };
  EXPECT_THROW(kernels::image_permutation<QuadDissection>(family, bad), std::out_of_range);
  const auto throwing = [](const QuadDissection& q) -> bool {
    if (q.diagonals().front().a == 2) throw std::runtime_error("boom");
    return false;
  };
  EXPECT_THROW(kernels::count_if<QuadDissection>(family, throwing), std::runtime_error);
  const std::vector<DihedralElement> wrong{DihedralElement::delta(8)};
  EXPECT_THROW(kernels::fixed_point_counts(family, wrong), std::invalid_argument);
}
