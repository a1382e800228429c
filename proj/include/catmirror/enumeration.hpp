#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catmirror/count.hpp"
#include "catmirror/dihedral.hpp"
#include "catmirror/dissection.hpp"

namespace catmirror {

/// Groups acting on Q_2n: all rotations, the full dihedral group, and the
/// tree-level subgroups <delta^2> and <delta^2, s>.
enum class GroupSpec { C2n, D2n, Cn, Dn };

std::string_view to_string(GroupSpec g);
std::optional<GroupSpec> parse_group(std::string_view name);
std::vector<DihedralElement> group_elements(GroupSpec g, int n);

enum class SymmetryClass { identity, reflection, rotation_pi, rotation_half_pi, other_rotation };

std::string_view to_string(SymmetryClass c);
std::optional<SymmetryClass> parse_symmetry_class(std::string_view name);
SymmetryClass classify(const DihedralElement& g);

struct FixedPoints {
  CountValue count;
  std::vector<QuadDissection> witnesses;
};

/// Dissections of the 2n-gon (2n = g.two_n) fixed by g, by exhaustive filtering.
FixedPoints fixed_points(const DihedralElement& g, bool with_witnesses = true);

/// Closed-form fixed-point count of an element class of D_2n, using the
/// oracle-aligned self-dual count for s_n. Throws std::invalid_argument for an
/// inconsistent class (e.g. a quarter turn when n is odd).
CountValue fixed_points_formula(SymmetryClass c, int n);

/// Brute-force bound; CATMIRROR_BRUTE_MAX overrides the default of 10.
int brute_force_bound();

/// |{t in N_n : t* = t}| by exhaustive filtering.
CountValue count_self_dual_brute(int n);
/// The displayed self-dual formula evaluated verbatim.
Rational self_dual_printed(int n);
/// s(n) := s_printed(n-1), s(1) := 1; agrees with brute force.
CountValue self_dual_aligned(int n);
/// Brute force up to brute_force_bound(), aligned closed form beyond.
CountValue count_self_dual(int n);

struct OrbitCount {
  CountValue burnside;
  std::size_t explicit_orbits = 0;
  /// Smallest member of each orbit, sorted; filled on request.
  std::vector<QuadDissection> transversal;
};

/// Burnside average over G of fixed-point counts, checked against explicit
/// orbit enumeration (std::logic_error on disagreement).
OrbitCount burnside_orbits(GroupSpec g, int n, bool with_transversal = false);

/// Number of G-orbits on Q_2n fixed by `twist` (Robinson's counting lemma).
/// Throws std::invalid_argument unless twist normalizes G.
CountValue counting_lemma(GroupSpec g, const DihedralElement& twist, int n);

enum class Statistic { q_rot, q_dihedral, nct_rot, nct_dihedral, s_oriented, s_unoriented, antiselfdual };
enum class Variant { as_printed, oracle_aligned };

std::string_view to_string(Statistic s);
std::optional<Statistic> parse_statistic(std::string_view name);
inline constexpr Statistic kAllStatistics[] = {Statistic::q_rot,        Statistic::q_dihedral,   Statistic::nct_rot,
                                               Statistic::nct_dihedral, Statistic::s_oriented,   Statistic::s_unoriented,
                                               Statistic::antiselfdual};

/// Printed formulas are evaluated verbatim and may be non-integral; aligned
/// formulas are Burnside / counting-lemma sums of fixed_points_formula with
/// the true group orders.
Rational closed_form(Statistic s, int n, Variant v);

/// Ground truth by explicit orbit enumeration (on Q_2n for q_*, on N_n otherwise).
CountValue brute_statistic(Statistic s, int n);

struct VerifyRow {
  std::string statistic;
  int n = 0;
  std::optional<CountValue> oracle;
  Rational printed;
  Rational aligned;

  bool printed_matches() const { return oracle && printed == Rational(*oracle); }
  bool aligned_matches() const { return oracle && aligned == Rational(*oracle); }
};

struct InvariantCheck {
  std::string name;
  int n = 0;
  std::size_t checked = 0;
  std::size_t failures = 0;
};

struct VerifyReport {
  int n_max = 0;
  int brute_bound = 0;
  std::vector<VerifyRow> rows;
  std::vector<InvariantCheck> invariants;

  bool printed_mismatch() const;
  bool aligned_mismatch() const;
  bool invariants_ok() const;
};

/// Formula audit and structural invariant sweep for 1 <= n <= n_max.
VerifyReport verify_report(int n_max);
std::string to_text(const VerifyReport& report);
std::string to_json(const VerifyReport& report);

/// "25/2" style exact text; integers print without a denominator.
std::string format_rational(const Rational& q);

}  // namespace catmirror
