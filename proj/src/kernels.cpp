#include "catmirror/kernels.hpp"

#include <numeric>

namespace catmirror::kernels {

std::vector<std::uint64_t> fixed_point_counts(std::span<const QuadDissection> family,
                                              std::span<const DihedralElement> group) {
  std::vector<std::uint64_t> counts(group.size(), 0);
  const auto size = static_cast<std::int64_t>(family.size());
  detail::ErrorSlot errors;
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(group.size(), 0);
#pragma omp for schedule(dynamic, 256) nowait
    for (std::int64_t i = 0; i < size; ++i) {
      errors.run([&] {
        const auto& q = family[static_cast<std::size_t>(i)];
        for (std::size_t j = 0; j < group.size(); ++j) {
          if (dihedral_apply(group[j], q) == q) ++local[j];
        }
      });
    }
#pragma omp critical(catmirror_merge)
    for (std::size_t j = 0; j < group.size(); ++j) counts[j] += local[j];
  }
  errors.rethrow();
  return counts;
}

std::vector<std::uint64_t> fixed_point_counts_serial(std::span<const QuadDissection> family,
                                                     std::span<const DihedralElement> group) {
  std::vector<std::uint64_t> counts(group.size(), 0);
  for (const auto& q : family)
    for (std::size_t j = 0; j < group.size(); ++j)
      if (dihedral_apply(group[j], q) == q) ++counts[j];
  return counts;
}

std::vector<std::int32_t> orbit_labels(std::size_t size, std::span<const std::vector<std::int32_t>> generators) {
  std::vector<std::int32_t> parent(size);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::int32_t x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& perm : generators) {
    for (std::size_t i = 0; i < size; ++i) {
      auto a = find(static_cast<std::int32_t>(i));
      auto b = find(perm[i]);
      if (a == b) continue;
      // Keep the smaller index as root so labels are orbit minima.
      if (a < b) parent[static_cast<std::size_t>(b)] = a;
      else parent[static_cast<std::size_t>(a)] = b;
    }
  }
  std::vector<std::int32_t> labels(size);
  for (std::size_t i = 0; i < size; ++i) labels[i] = find(static_cast<std::int32_t>(i));
  return labels;
}

std::size_t count_orbits(std::size_t size, std::span<const std::vector<std::int32_t>> generators) {
  const auto labels = orbit_labels(size, generators);
  std::size_t roots = 0;
  for (std::size_t i = 0; i < size; ++i)
    if (labels[i] == static_cast<std::int32_t>(i)) ++roots;
  return roots;
}

}  // namespace catmirror::kernels
