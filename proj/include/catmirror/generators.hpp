#pragma once

#include <functional>
#include <vector>

#include "catmirror/count.hpp"
#include "catmirror/dissection.hpp"
#include "catmirror/nct.hpp"
#include "catmirror/pcdd.hpp"
#include "catmirror/ternary.hpp"

namespace catmirror {

// Streaming enumeration. Visitors are called once per object, in fusion order;
// smaller sizes are materialized internally, the requested size never is.

void for_each_nct(int n, const std::function<void(const NctTree&)>& visit);
void for_each_dissection(int n, const std::function<void(const QuadDissection&)>& visit);

// Materialized, sorted sequences.

std::vector<NctTree> gen_ncts(int n);
std::vector<QuadDissection> gen_dissections(int n);
std::vector<TernaryTree> gen_ternary(int m);
std::vector<Pcdd> gen_pcdds(int m);
/// Self-dual ternary trees built as Node(t0, t1, t0*) with t1 self-dual.
std::vector<TernaryTree> gen_self_dual_ternary(int m);

}  // namespace catmirror
