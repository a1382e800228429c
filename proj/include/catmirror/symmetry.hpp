#pragma once

#include "catmirror/nct.hpp"
#include "catmirror/pcdd.hpp"
#include "catmirror/ternary.hpp"

namespace catmirror {

// Non-crossing trees. All maps are bijections of the set of n-vertex trees.

/// Reflection through vertex 1: i -> n+2-i (mod n).
NctTree nct_reflect_s(const NctTree& t);
/// Rotation by j steps in the delta^2 direction: i -> i-j (mod n).
NctTree nct_rotate(const NctTree& t, int j);
/// Full label reversal i -> n+1-i.
NctTree nct_rev(const NctTree& t);
/// delta(t) (or delta^-1(t)): the even-diagonal tree of phi^-1(t).
NctTree nct_delta(const NctTree& t, bool inverse = false);
/// delta(t) through rotation conjugation, phi(delta . phi^-1(t)); cross-check route.
NctTree nct_delta_by_rotation(const NctTree& t, bool inverse = false);
/// Mind-body dual t* = s(delta(t)).
NctTree nct_star(const NctTree& t);
/// t^bar* = s(delta^-1(t)).
NctTree nct_barstar(const NctTree& t);

/// Recursive left/right swap.
TernaryTree ternary_star(const TernaryTree& t);

// PCDDs. Results are canonical.

/// Opposite pairing at every internal vertex, flag rule anchored at alpha(f).
Pcdd pcdd_star(const Pcdd& p);
/// Opposite pairing at every internal vertex, flag rule anchored at omega(f).
Pcdd pcdd_barstar(const Pcdd& p);
/// The bar used by tau: medial(delta^-1(medial^-1(p))).
Pcdd pcdd_bar(const Pcdd& p);

}  // namespace catmirror
