#pragma once

#include <utility>
#include <variant>

#include "catmirror/dissection.hpp"
#include "catmirror/nct.hpp"
#include "catmirror/pcdd.hpp"
#include "catmirror/ternary.hpp"

namespace catmirror {

// Q_2n <-> N_n

/// Odd diagonals of the cells, relabeled 2i-1 -> i.
NctTree phi(const QuadDissection& q);
/// Direct recursive construction on the fusion split of t.
QuadDissection phi_inv(const NctTree& t);
/// Even diagonals of the cells, relabeled 2i -> i (equals delta(phi(q))).
NctTree even_tree(const QuadDissection& q);

/// Reassembles a dissection from a tree on the odd vertices and its delta-dual
/// on the even vertices: each odd chord crosses exactly one even chord and the
/// two span a cell. Throws std::invalid_argument if the pair is not dual.
QuadDissection superpose(const NctTree& odd, const NctTree& even);

// Q_2n <-> T_{n-1}

TernaryTree psi(const QuadDissection& q);
/// Arc-span construction; the result has n = internal_count + 1.
QuadDissection psi_inv(const TernaryTree& t);

// Fusion of non-crossing trees (the tree-level shadow of PCDD fusion).

struct NctTriple {
  NctTree left;
  NctTree middle;
  NctTree right;

  friend bool operator==(const NctTriple&, const NctTriple&) = default;
};

/// Splits t (n >= 2) at the edge {1,k}, k the smallest neighbor of 1.
/// left: component of 1 (1 -> 1, v -> v-m+1); middle: [k..m] with k -> 1;
/// right: [2..k] rotated so that k -> 1. m is the largest label in k's component.
NctTriple unfuse_nct(const NctTree& t);
NctTree fuse_nct(const NctTriple& parts);
NctTree fuse_nct(const NctTree& left, const NctTree& middle, const NctTree& right);

// N_n <-> T_{n-1}

/// sigma(t) = Node(sigma(L), sigma(delta^-1(M)), sigma(R)) over unfuse_nct.
TernaryTree sigma(const NctTree& t);
NctTree sigma_inv(const TernaryTree& t);

// N_n <-> P_{n-1}

/// Medial ditree; vertices are the sorted edges of t, chains the vertex stars.
Pcdd medial(const NctTree& t);
/// Inverse of medial for any valid PCDD, regardless of its vertex numbering.
NctTree medial_inv(const Pcdd& p);
/// medial(medial_inv(p)): the canonical representative of p's isomorphism class.
Pcdd canonical(const Pcdd& p);

struct PcddTriple {
  Pcdd left;
  Pcdd middle;
  Pcdd right;

  friend bool operator==(const PcddTriple&, const PcddTriple&) = default;
};

Pcdd fuse_pcdd(const Pcdd& left, const Pcdd& middle, const Pcdd& right);
/// Unique decomposition of a non-empty PCDD; throws std::invalid_argument on lambda.
PcddTriple unfuse_pcdd(const Pcdd& p);

/// tau(lambda) = leaf, tau(fuse(l,m,r)) = Node(tau(l), tau(bar(m)), tau(r)).
TernaryTree tau(const Pcdd& p);

// Self-dual ternary trees.

using TernaryPair = std::pair<TernaryTree, TernaryTree>;
/// A tree (even internal count) or an ordered pair (odd internal count).
using BetaImage = std::variant<TernaryTree, TernaryPair>;

/// Throws std::invalid_argument unless ternary_star(t) == t.
BetaImage beta_encode(const TernaryTree& t);
TernaryTree beta_decode(const BetaImage& image);

}  // namespace catmirror
