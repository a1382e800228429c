#pragma once

// Data-parallel kernels behind the exhaustive checks. Each kernel has an
// OpenMP version and a serial reference with identical results; tests compare
// the two and bench/ times them.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <span>
#include <stdexcept>
#include <vector>

#include "catmirror/dihedral.hpp"
#include "catmirror/dissection.hpp"

namespace catmirror::kernels {

namespace detail {

// Exceptions must not escape an OpenMP region; keep the first and rethrow.
class ErrorSlot {
 public:
  template <typename F>
  void run(F&& f) noexcept {
    try {
      f();
    } catch (...) {
#pragma omp critical(catmirror_error_slot)
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::exception_ptr error_;
};

}  // namespace detail

/// Index of `x` in a sorted family; throws std::out_of_range if absent.
template <typename T>
std::int32_t index_of(std::span<const T> sorted_family, const T& x) {
  auto it = std::lower_bound(sorted_family.begin(), sorted_family.end(), x);
  if (it == sorted_family.end() || !(*it == x)) throw std::out_of_range("image not in family");
  return static_cast<std::int32_t>(it - sorted_family.begin());
}

/// perm[i] = index of map(family[i]) in the (sorted) family.
template <typename T, typename Map>
std::vector<std::int32_t> image_permutation(std::span<const T> family, Map&& map) {
  const auto size = static_cast<std::int64_t>(family.size());
  std::vector<std::int32_t> perm(family.size());
  detail::ErrorSlot errors;
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < size; ++i) {
    errors.run([&] { perm[static_cast<std::size_t>(i)] = index_of(family, map(family[static_cast<std::size_t>(i)])); });
  }
  errors.rethrow();
  return perm;
}

template <typename T, typename Map>
std::vector<std::int32_t> image_permutation_serial(std::span<const T> family, Map&& map) {
  std::vector<std::int32_t> perm(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) perm[i] = index_of(family, map(family[i]));
  return perm;
}

/// Number of elements satisfying `pred`.
template <typename T, typename Pred>
std::size_t count_if(std::span<const T> items, Pred&& pred) {
  const auto size = static_cast<std::int64_t>(items.size());
  std::size_t hits = 0;
  detail::ErrorSlot errors;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : hits)
  for (std::int64_t i = 0; i < size; ++i) {
    errors.run([&] {
      if (pred(items[static_cast<std::size_t>(i)])) ++hits;
    });
  }
  errors.rethrow();
  return hits;
}

template <typename T, typename Pred>
std::size_t count_if_serial(std::span<const T> items, Pred&& pred) {
  std::size_t hits = 0;
  for (const auto& x : items)
    if (pred(x)) ++hits;
  return hits;
}

/// counts[j] = number of dissections fixed by group[j].
std::vector<std::uint64_t> fixed_point_counts(std::span<const QuadDissection> family,
                                              std::span<const DihedralElement> group);
std::vector<std::uint64_t> fixed_point_counts_serial(std::span<const QuadDissection> family,
                                                     std::span<const DihedralElement> group);

/// Orbit label (smallest member index) of every point under the group
/// generated by the given permutations.
std::vector<std::int32_t> orbit_labels(std::size_t size, std::span<const std::vector<std::int32_t>> generators);

/// Number of distinct orbits.
std::size_t count_orbits(std::size_t size, std::span<const std::vector<std::int32_t>> generators);

}  // namespace catmirror::kernels
