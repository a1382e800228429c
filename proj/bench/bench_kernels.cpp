#include <benchmark/benchmark.h>

#include <map>

#include "catmirror/dihedral.hpp"
#include "catmirror/enumeration.hpp"
#include "catmirror/generators.hpp"
#include "catmirror/kernels.hpp"

using namespace catmirror;

namespace {

const std::vector<QuadDissection>& family(int n) {
  static std::map<int, std::vector<QuadDissection>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, gen_dissections(n)).first;
  return it->second;
}

void BM_FixedPointsSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto& qs = family(n);
  const auto group = group_elements(GroupSpec::D2n, n);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::fixed_point_counts_serial(qs, group));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * qs.size() * group.size()));
}

void BM_FixedPointsParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto& qs = family(n);
  const auto group = group_elements(GroupSpec::D2n, n);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::fixed_point_counts(qs, group));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * qs.size() * group.size()));
}

auto rotate_map(int n) {
  return [g = DihedralElement::delta(2 * n)](const QuadDissection& q) { return dihedral_apply(g, q); };
}

void BM_ImagePermutationSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto& qs = family(n);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::image_permutation_serial<QuadDissection>(qs, rotate_map(n)));
}

void BM_ImagePermutationParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto& qs = family(n);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::image_permutation<QuadDissection>(qs, rotate_map(n)));
}

auto self_dual_pred(int n) {
  return [g = DihedralElement::r(2 * n)](const QuadDissection& q) { return dihedral_apply(g, q) == q; };
}

void BM_CountIfSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto& qs = family(n);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::count_if_serial<QuadDissection>(qs, self_dual_pred(n)));
}

void BM_CountIfParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto& qs = family(n);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::count_if<QuadDissection>(qs, self_dual_pred(n)));
}

}  // namespace

BENCHMARK(BM_FixedPointsSerial)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FixedPointsParallel)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ImagePermutationSerial)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ImagePermutationParallel)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountIfSerial)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountIfParallel)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
