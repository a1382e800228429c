#include "catmirror/enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "catmirror/bijections.hpp"
#include "catmirror/generators.hpp"
#include "catmirror/kernels.hpp"
#include "catmirror/symmetry.hpp"

namespace catmirror {

namespace {

// Families are immutable once generated; share them between callers.
template <typename T>
class FamilyCache {
 public:
  using Generator = std::vector<T> (*)(int);
  explicit FamilyCache(Generator gen) : gen_(gen) {}

  std::shared_ptr<const std::vector<T>> get(int n) {
    {
      std::lock_guard lock(mu_);
      if (auto it = cache_.find(n); it != cache_.end()) return it->second;
    }
    auto built = std::make_shared<const std::vector<T>>(gen_(n));
    std::lock_guard lock(mu_);
    return cache_.emplace(n, std::move(built)).first->second;
  }

 private:
  Generator gen_;
  std::mutex mu_;
  std::map<int, std::shared_ptr<const std::vector<T>>> cache_;
};

std::shared_ptr<const std::vector<QuadDissection>> dissections(int n) {
  static FamilyCache<QuadDissection> cache(&gen_dissections);
  return cache.get(n);
}

std::shared_ptr<const std::vector<NctTree>> trees(int n) {
  static FamilyCache<NctTree> cache(&gen_ncts);
  return cache.get(n);
}

CountValue to_count(std::uint64_t v) {
  CountValue out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return out;
}

CountValue exact_div(const CountValue& num, long den, const char* what) {
  CountValue d = den;
  if (!mpz_divisible_p(num.get_mpz_t(), d.get_mpz_t())) throw std::logic_error(std::string(what) + ": inexact division");
  CountValue out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), d.get_mpz_t());
  return out;
}

CountValue integral(const Rational& q, const char* what) {
  if (q.get_den() != 1) throw std::logic_error(std::string(what) + ": non-integral value");
  return q.get_num();
}

std::vector<std::vector<std::int32_t>> dissection_generators(GroupSpec g, int n,
                                                             std::span<const QuadDissection> family) {
  const int two_n = 2 * n;
  std::vector<DihedralElement> gens;
  switch (g) {
    case GroupSpec::C2n: gens = {DihedralElement::delta(two_n)}; break;
    case GroupSpec::D2n: gens = {DihedralElement::delta(two_n), DihedralElement::r(two_n)}; break;
    case GroupSpec::Cn: gens = {DihedralElement::rotation(two_n, 2)}; break;
    case GroupSpec::Dn: gens = {DihedralElement::rotation(two_n, 2), DihedralElement::s(two_n)}; break;
  }
  std::vector<std::vector<std::int32_t>> perms;
  for (const auto& e : gens) {
    perms.push_back(kernels::image_permutation(family, [&e](const QuadDissection& q) { return dihedral_apply(e, q); }));
  }
  return perms;
}

template <typename Map>
std::vector<std::int32_t> tree_permutation(std::span<const NctTree> family, Map&& map) {
  return kernels::image_permutation(family, std::forward<Map>(map));
}

// Orbits of a tree-level group that are mapped to themselves by `twist`.
template <typename Twist>
CountValue twisted_orbits(std::span<const NctTree> family, const std::vector<std::vector<std::int32_t>>& gens,
                          Twist&& twist) {
  const auto labels = kernels::orbit_labels(family.size(), gens);
  const auto twisted = tree_permutation(family, std::forward<Twist>(twist));
  std::uint64_t fixed = 0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (labels[i] == static_cast<std::int32_t>(i) && labels[static_cast<std::size_t>(twisted[i])] == labels[i]) ++fixed;
  }
  return to_count(fixed);
}

Rational formula_sum(GroupSpec g, int n, const DihedralElement* twist) {
  const auto elements = group_elements(g, n);
  CountValue total = 0;
  for (const auto& e : elements) {
    const auto h = twist ? dihedral_compose(e, *twist) : e;
    total += fixed_points_formula(classify(h), n);
  }
  Rational out(total, CountValue(static_cast<long>(elements.size())));
  out.canonicalize();
  return out;
}

}  // namespace

// ---------------------------------------------------------------- groups

std::string_view to_string(GroupSpec g) {
  switch (g) {
    case GroupSpec::C2n: return "C2n";
    case GroupSpec::D2n: return "D2n";
    case GroupSpec::Cn: return "Cn";
    case GroupSpec::Dn: return "Dn";
  }
  return "?";
}

std::optional<GroupSpec> parse_group(std::string_view name) {
  for (auto g : {GroupSpec::C2n, GroupSpec::D2n, GroupSpec::Cn, GroupSpec::Dn})
    if (name == to_string(g)) return g;
  return std::nullopt;
}

std::vector<DihedralElement> group_elements(GroupSpec g, int n) {
  if (n < 1) throw std::invalid_argument("group size parameter must be at least 1");
  const int two_n = 2 * n;
  std::vector<DihedralElement> out;
  for (int k = 0; k < two_n; ++k) {
    switch (g) {
      case GroupSpec::C2n: out.push_back(DihedralElement::make(two_n, k, 0)); break;
      case GroupSpec::D2n:
        out.push_back(DihedralElement::make(two_n, k, 0));
        out.push_back(DihedralElement::make(two_n, k, 1));
        break;
      case GroupSpec::Cn:
        if (k % 2 == 0) out.push_back(DihedralElement::make(two_n, k, 0));
        break;
      case GroupSpec::Dn: out.push_back(DihedralElement::make(two_n, k, k % 2)); break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string_view to_string(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::identity: return "identity";
    case SymmetryClass::reflection: return "reflection";
    case SymmetryClass::rotation_pi: return "rotation-pi";
    case SymmetryClass::rotation_half_pi: return "rotation-half-pi";
    case SymmetryClass::other_rotation: return "other-rotation";
  }
  return "?";
}

std::optional<SymmetryClass> parse_symmetry_class(std::string_view name) {
  for (auto c : {SymmetryClass::identity, SymmetryClass::reflection, SymmetryClass::rotation_pi,
                 SymmetryClass::rotation_half_pi, SymmetryClass::other_rotation})
    if (name == to_string(c)) return c;
  return std::nullopt;
}

SymmetryClass classify(const DihedralElement& g) {
  const int n = g.two_n / 2;
  if (g.f) return SymmetryClass::reflection;
  if (g.k == 0) return SymmetryClass::identity;
  if (g.k == n) return SymmetryClass::rotation_pi;
  if (n % 2 == 0 && (g.k == n / 2 || g.k == 3 * n / 2)) return SymmetryClass::rotation_half_pi;
  return SymmetryClass::other_rotation;
}

// ---------------------------------------------------------------- fixed points

FixedPoints fixed_points(const DihedralElement& g, bool with_witnesses) {
  const auto family = dissections(g.two_n / 2);
  const std::span<const QuadDissection> items(*family);
  FixedPoints out;
  auto fixed = [&g](const QuadDissection& q) { return dihedral_apply(g, q) == q; };
  out.count = to_count(kernels::count_if(items, fixed));
  if (with_witnesses) {
    for (const auto& q : items)
      if (fixed(q)) out.witnesses.push_back(q);
  }
  return out;
}

CountValue fixed_points_formula(SymmetryClass c, int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  switch (c) {
    case SymmetryClass::identity: return nu(n);
    case SymmetryClass::reflection: return count_self_dual(n);
    case SymmetryClass::rotation_pi: return n % 2 ? n * count_self_dual(n) : (n / 2) * count_self_dual(n);
    case SymmetryClass::rotation_half_pi:
      if (n % 2) throw std::invalid_argument("no quarter turn of a 2n-gon with n odd");
      return n % 4 == 2 ? (n / 2) * count_self_dual(n / 2) : CountValue(0);
    case SymmetryClass::other_rotation: return 0;
  }
  return 0;
}

// ---------------------------------------------------------------- self-dual trees

int brute_force_bound() {
  if (const char* env = std::getenv("CATMIRROR_BRUTE_MAX")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 14) return static_cast<int>(v);
  }
  return 10;
}

CountValue count_self_dual_brute(int n) {
  static std::mutex mu;
  static std::map<int, CountValue> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  const auto family = trees(n);
  const auto hits = kernels::count_if(std::span<const NctTree>(*family), [](const NctTree& t) { return nct_star(t) == t; });
  std::lock_guard lock(mu);
  return memo.emplace(n, to_count(hits)).first->second;
}

Rational self_dual_printed(int n) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  const auto un = static_cast<unsigned long>(n);
  Rational out = n % 2 == 0 ? Rational(binomial(3 * un / 2, un / 2), CountValue(n + 1))
                            : Rational(2 * binomial((3 * un - 1) / 2, (un - 1) / 2), CountValue(n + 1));
  out.canonicalize();
  return out;
}

CountValue self_dual_aligned(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (n == 1) return 1;
  return integral(self_dual_printed(n - 1), "self-dual formula");
}

CountValue count_self_dual(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  return n <= brute_force_bound() ? count_self_dual_brute(n) : self_dual_aligned(n);
}

// ---------------------------------------------------------------- orbits

OrbitCount burnside_orbits(GroupSpec g, int n, bool with_transversal) {
  const auto family = dissections(n);
  const std::span<const QuadDissection> items(*family);
  const auto elements = group_elements(g, n);
  const auto counts = kernels::fixed_point_counts(items, elements);
  CountValue total = 0;
  for (auto c : counts) total += to_count(c);
  OrbitCount out;
  out.burnside = exact_div(total, static_cast<long>(elements.size()), "Burnside average");

  const auto gens = dissection_generators(g, n, items);
  const auto labels = kernels::orbit_labels(items.size(), gens);
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (labels[i] != static_cast<std::int32_t>(i)) continue;
    ++out.explicit_orbits;
    if (with_transversal) out.transversal.push_back(items[i]);
  }
  if (out.burnside != to_count(out.explicit_orbits)) {
    throw std::logic_error("Burnside count disagrees with explicit orbit enumeration");
  }
  return out;
}

CountValue counting_lemma(GroupSpec g, const DihedralElement& twist, int n) {
  if (twist.two_n != 2 * n) throw std::invalid_argument("twist acts on a different polygon");
  const auto elements = group_elements(g, n);
  const std::set<DihedralElement> members(elements.begin(), elements.end());
  const auto twist_inv = dihedral_inverse(twist);
  for (const auto& e : elements) {
    if (!members.count(dihedral_compose(twist, dihedral_compose(e, twist_inv)))) {
      throw std::invalid_argument("twist does not normalize the group");
    }
  }
  std::vector<DihedralElement> twisted;
  for (const auto& e : elements) twisted.push_back(dihedral_compose(e, twist));
  const auto family = dissections(n);
  const auto counts = kernels::fixed_point_counts(std::span<const QuadDissection>(*family), twisted);
  CountValue total = 0;
  for (auto c : counts) total += to_count(c);
  return exact_div(total, static_cast<long>(elements.size()), "counting lemma");
}

// ---------------------------------------------------------------- statistics

std::string_view to_string(Statistic s) {
  switch (s) {
    case Statistic::q_rot: return "q_rot";
    case Statistic::q_dihedral: return "q_dihedral";
    case Statistic::nct_rot: return "nct_rot";
    case Statistic::nct_dihedral: return "nct_dihedral";
    case Statistic::s_oriented: return "s_oriented";
    case Statistic::s_unoriented: return "s_unoriented";
    case Statistic::antiselfdual: return "antiselfdual";
  }
  return "?";
}

std::optional<Statistic> parse_statistic(std::string_view name) {
  for (auto s : kAllStatistics)
    if (name == to_string(s)) return s;
  return std::nullopt;
}

Rational closed_form(Statistic stat, int n, Variant v) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  const int two_n = 2 * n;
  if (v == Variant::oracle_aligned) {
    const auto r = DihedralElement::r(two_n);
    const auto d = DihedralElement::delta(two_n);
    switch (stat) {
      case Statistic::q_rot: return formula_sum(GroupSpec::C2n, n, nullptr);
      case Statistic::q_dihedral: return formula_sum(GroupSpec::D2n, n, nullptr);
      case Statistic::nct_rot: return formula_sum(GroupSpec::Cn, n, nullptr);
      case Statistic::nct_dihedral: return formula_sum(GroupSpec::Dn, n, nullptr);
      case Statistic::s_oriented: return formula_sum(GroupSpec::Cn, n, &r);
      case Statistic::s_unoriented: return formula_sum(GroupSpec::Dn, n, &r);
      case Statistic::antiselfdual: return formula_sum(GroupSpec::Cn, n, &d);
    }
  }

  // The displayed formulas, evaluated verbatim.
  const Rational nu_n(nu(n));
  const Rational s(count_self_dual(n));
  const Rational half_s = n % 2 == 0 ? Rational(count_self_dual(n / 2)) : Rational(0);
  const Rational N(n);
  switch (stat) {
    case Statistic::q_rot:
      if (n % 2) return (nu_n + N * s) / (2 * N);
      if (n % 4 == 0) return (nu_n + N / 2 * s) / (4 * N);
      return (nu_n + N / 2 * s + N * half_s) / (4 * N);
    case Statistic::q_dihedral:
      if (n % 2) return (nu_n + 3 * N * s) / (4 * N);
      if (n % 4 == 0) return (nu_n + 5 * N / 2 * s) / (4 * N);
      return (nu_n + 5 * N / 2 * s + N * half_s) / (4 * N);
    case Statistic::nct_rot:
      if (n % 2) return nu_n / (2 * N);
      return (nu_n + N * s / 2) / (2 * N);
    case Statistic::nct_dihedral:
      if (n % 2) return (nu_n + N * s) / (2 * N);
      return (nu_n + 3 * N / 2 * s) / (2 * N);
    case Statistic::s_oriented: return s;
    case Statistic::s_unoriented:
      if (n % 2) return s;
      if (n % 4 == 0) return s / 2;
      return (s + half_s) / 2;
    case Statistic::antiselfdual:
      if (n % 2) return s;
      if (n % 4 == 0) return Rational(0);
      return half_s;
  }
  return Rational(0);
}

CountValue brute_statistic(Statistic stat, int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (stat == Statistic::q_rot || stat == Statistic::q_dihedral) {
    const auto family = dissections(n);
    const std::span<const QuadDissection> items(*family);
    const auto gens = dissection_generators(stat == Statistic::q_rot ? GroupSpec::C2n : GroupSpec::D2n, n, items);
    return to_count(kernels::count_orbits(items.size(), gens));
  }
  const auto family = trees(n);
  const std::span<const NctTree> items(*family);
  std::vector<std::vector<std::int32_t>> rot{tree_permutation(items, [](const NctTree& t) { return nct_rotate(t, 1); })};
  auto dih = rot;
  dih.push_back(tree_permutation(items, [](const NctTree& t) { return nct_reflect_s(t); }));
  switch (stat) {
    case Statistic::nct_rot: return to_count(kernels::count_orbits(items.size(), rot));
    case Statistic::nct_dihedral: return to_count(kernels::count_orbits(items.size(), dih));
    case Statistic::s_oriented: return twisted_orbits(items, rot, [](const NctTree& t) { return nct_star(t); });
    case Statistic::s_unoriented: return twisted_orbits(items, dih, [](const NctTree& t) { return nct_star(t); });
    case Statistic::antiselfdual: return twisted_orbits(items, rot, [](const NctTree& t) { return nct_delta(t); });
    default: break;
  }
  throw std::logic_error("unhandled statistic");
}

// ---------------------------------------------------------------- verification

bool VerifyReport::printed_mismatch() const {
  return std::any_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.oracle && !r.printed_matches(); });
}

bool VerifyReport::aligned_mismatch() const {
  return std::any_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.oracle && !r.aligned_matches(); });
}

bool VerifyReport::invariants_ok() const {
  return std::all_of(invariants.begin(), invariants.end(), [](const InvariantCheck& c) { return c.failures == 0; });
}

namespace {

template <typename T, typename Pred>
InvariantCheck sweep(std::string name, int n, const std::vector<T>& items, Pred&& pred) {
  const auto hits = kernels::count_if(std::span<const T>(items), std::forward<Pred>(pred));
  return {std::move(name), n, items.size(), items.size() - hits};
}

// Checks that must never throw count a throw as a failure.
template <typename Pred>
auto guarded(Pred pred) {
  return [pred](const auto& x) {
    try {
      return static_cast<bool>(pred(x));
    } catch (const std::exception&) {
      return false;
    }
  };
}

void structural_invariants(int n, std::vector<InvariantCheck>& out) {
  const auto ncts = *trees(n);
  const auto qs = *dissections(n);
  const auto ternary = gen_ternary(n - 1);
  const auto pcdds = gen_pcdds(n - 1);
  const CountValue expected = nu(n);

  InvariantCheck card{"cardinalities = nu(n)", n, 4, 0};
  for (std::size_t size : {ncts.size(), qs.size(), ternary.size(), pcdds.size()})
    if (to_count(size) != expected) ++card.failures;
  out.push_back(card);

  out.push_back(sweep("phi(phi_inv(t)) = t", n, ncts, guarded([](const NctTree& t) { return phi(phi_inv(t)) == t; })));
  out.push_back(sweep("phi_inv(phi(q)) = q", n, qs, guarded([](const QuadDissection& q) { return phi_inv(phi(q)) == q; })));
  out.push_back(sweep("psi(psi_inv(T)) = T", n, ternary, guarded([](const TernaryTree& t) { return psi(psi_inv(t)) == t; })));
  out.push_back(sweep("psi_inv(psi(q)) = q", n, qs, guarded([](const QuadDissection& q) { return psi_inv(psi(q)) == q; })));
  out.push_back(sweep("sigma_inv(sigma(t)) = t", n, ncts, guarded([](const NctTree& t) { return sigma_inv(sigma(t)) == t; })));
  out.push_back(sweep("medial_inv(medial(t)) = t", n, ncts, guarded([](const NctTree& t) { return medial_inv(medial(t)) == t; })));
  out.push_back(sweep("fuse_nct(unfuse_nct(t)) = t", n, ncts, guarded([](const NctTree& t) { return fuse_nct(unfuse_nct(t)) == t; })));
  out.push_back(sweep("fuse_pcdd(unfuse_pcdd(p)) = p", n, pcdds, guarded([](const Pcdd& p) {
                        const auto parts = unfuse_pcdd(p);
                        return fuse_pcdd(parts.left, parts.middle, parts.right) == p;
                      })));

  out.push_back(sweep("psi(q) = sigma(phi(q))", n, qs, guarded([](const QuadDissection& q) { return psi(q) == sigma(phi(q)); })));
  out.push_back(sweep("tau(medial(phi(q))) = psi(q)", n, qs,
                      guarded([](const QuadDissection& q) { return tau(medial(phi(q))) == psi(q); })));

  out.push_back(sweep("phi(r.q) = phi(q)*", n, qs, guarded([n](const QuadDissection& q) {
                        return phi(dihedral_apply(DihedralElement::r(2 * n), q)) == nct_star(phi(q));
                      })));
  out.push_back(sweep("psi(r.q) = psi(q)*", n, qs, guarded([n](const QuadDissection& q) {
                        return psi(dihedral_apply(DihedralElement::r(2 * n), q)) == ternary_star(psi(q));
                      })));
  out.push_back(sweep("sigma(t*) = sigma(t)*", n, ncts,
                      guarded([](const NctTree& t) { return sigma(nct_star(t)) == ternary_star(sigma(t)); })));
  out.push_back(sweep("medial(t*) = medial(t)*", n, ncts,
                      guarded([](const NctTree& t) { return medial(nct_star(t)) == pcdd_star(medial(t)); })));
  out.push_back(sweep("medial(t^bar*) = medial(t)^bar* (re-paired chains)", n, ncts,
                      guarded([](const NctTree& t) { return medial(nct_barstar(t)) == pcdd_barstar(medial(t)); })));
  out.push_back(sweep("delta: even tree = rotation conjugate", n, ncts, guarded([](const NctTree& t) {
                        return nct_delta(t) == nct_delta_by_rotation(t) &&
                               nct_delta(t, true) == nct_delta_by_rotation(t, true);
                      })));

  const auto elements = group_elements(GroupSpec::D2n, n);
  out.push_back(sweep("fix(g) = fixed_points_formula(class(g))", n, elements, guarded([n](const DihedralElement& g) {
                        return fixed_points(g, false).count == fixed_points_formula(classify(g), n);
                      })));

  const std::vector<GroupSpec> groups{GroupSpec::C2n, GroupSpec::D2n, GroupSpec::Cn, GroupSpec::Dn};
  out.push_back(sweep("Burnside = explicit orbits", n, groups,
                      guarded([n](GroupSpec g) { return burnside_orbits(g, n).burnside >= 0; })));

  const auto self_dual = gen_self_dual_ternary(n - 1);
  InvariantCheck three{"self-dual: brute = |S_(n-1)| = fix(r)", n, 1, 0};
  const auto brute = count_self_dual_brute(n);
  if (brute != to_count(self_dual.size()) || brute != fixed_points(DihedralElement::r(2 * n), false).count) {
    three.failures = 1;
  }
  out.push_back(three);

  InvariantCheck beta{"beta_decode(beta_encode(T)) = T, injective", n, self_dual.size(), 0};
  std::set<std::string> images;
  for (const auto& t : self_dual) {
    try {
      const auto image = beta_encode(t);
      std::string key = image.index() == 0 ? "t" : "p";
      auto append = [&key](const TernaryTree& x) {
        key += ':';
        for (auto c : x.code()) key += static_cast<char>('0' + c);
      };
      if (const auto* tree = std::get_if<TernaryTree>(&image)) append(*tree);
      else {
        append(std::get<TernaryPair>(image).first);
        append(std::get<TernaryPair>(image).second);
      }
      if (beta_decode(image) != t || !images.insert(key).second) ++beta.failures;
    } catch (const std::exception&) {
      ++beta.failures;
    }
  }
  out.push_back(beta);
}

std::string count_text(const std::optional<CountValue>& v) { return v ? v->get_str() : "-"; }

}  // namespace

std::string format_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

VerifyReport verify_report(int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  VerifyReport report;
  report.n_max = n_max;
  report.brute_bound = brute_force_bound();
  const int brute_max = std::min(n_max, report.brute_bound);

  for (int n = 1; n <= n_max; ++n) {
    VerifyRow row;
    row.statistic = "self_dual";
    row.n = n;
    if (n <= brute_max) row.oracle = count_self_dual_brute(n);
    row.printed = self_dual_printed(n);
    row.aligned = Rational(self_dual_aligned(n));
    report.rows.push_back(row);
  }
  for (auto stat : kAllStatistics) {
    for (int n = 1; n <= n_max; ++n) {
      VerifyRow row;
      row.statistic = std::string(to_string(stat));
      row.n = n;
      if (n <= brute_max) row.oracle = brute_statistic(stat, n);
      row.printed = closed_form(stat, n, Variant::as_printed);
      row.aligned = closed_form(stat, n, Variant::oracle_aligned);
      report.rows.push_back(row);
    }
  }
  for (int n = 2; n <= brute_max; ++n) structural_invariants(n, report.invariants);
  return report;
}

std::string to_text(const VerifyReport& report) {
  std::ostringstream os;
  os << "verify n_max=" << report.n_max << " brute_bound=" << report.brute_bound << "\n\n";
  char line[256];
  std::snprintf(line, sizeof line, "%-14s %3s %14s %22s %14s %8s %8s\n", "statistic", "n", "oracle", "as_printed",
                "aligned", "printed", "aligned");
  os << line;
  for (const auto& r : report.rows) {
    std::string printed = format_rational(r.printed);
    if (r.printed.get_den() != 1) printed += " (non-integer)";
    const char* p_flag = !r.oracle ? "-" : r.printed_matches() ? "ok" : "MISMATCH";
    const char* a_flag = !r.oracle ? "-" : r.aligned_matches() ? "ok" : "MISMATCH";
    std::snprintf(line, sizeof line, "%-14s %3d %14s %22s %14s %8s %8s\n", r.statistic.c_str(), r.n,
                  count_text(r.oracle).c_str(), printed.c_str(), format_rational(r.aligned).c_str(), p_flag, a_flag);
    os << line;
  }
  os << "\ninvariants\n";
  for (const auto& c : report.invariants) {
    os << "  n=" << c.n << "  " << (c.failures == 0 ? "ok  " : "FAIL") << "  " << c.name << "  (" << c.checked
       << " checked, " << c.failures << " failures)\n";
  }
  os << "\nsummary: as_printed " << (report.printed_mismatch() ? "MISMATCH" : "ok") << ", oracle_aligned "
     << (report.aligned_mismatch() ? "MISMATCH" : "ok") << ", invariants " << (report.invariants_ok() ? "ok" : "FAIL")
     << "\n";
  return os.str();
}

std::string to_json(const VerifyReport& report) {
  nlohmann::ordered_json j;
  j["n_max"] = report.n_max;
  j["brute_bound"] = report.brute_bound;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : report.rows) {
    nlohmann::ordered_json row;
    row["statistic"] = r.statistic;
    row["n"] = r.n;
    row["oracle"] = r.oracle ? nlohmann::ordered_json(r.oracle->get_str()) : nlohmann::ordered_json(nullptr);
    row["as_printed"] = format_rational(r.printed);
    row["as_printed_integral"] = r.printed.get_den() == 1;
    row["oracle_aligned"] = format_rational(r.aligned);
    row["printed_matches"] = r.oracle ? nlohmann::ordered_json(r.printed_matches()) : nlohmann::ordered_json(nullptr);
    row["aligned_matches"] = r.oracle ? nlohmann::ordered_json(r.aligned_matches()) : nlohmann::ordered_json(nullptr);
    rows.push_back(row);
  }
  j["rows"] = rows;
  auto inv = nlohmann::ordered_json::array();
  for (const auto& c : report.invariants) {
    inv.push_back({{"name", c.name}, {"n", c.n}, {"checked", c.checked}, {"failures", c.failures}});
  }
  j["invariants"] = inv;
  j["printed_mismatch"] = report.printed_mismatch();
  j["aligned_mismatch"] = report.aligned_mismatch();
  j["invariants_ok"] = report.invariants_ok();
  return j.dump(2) + "\n";
}

}  // namespace catmirror
