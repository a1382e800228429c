// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Usage: acceptance <path-to-catmirror-cli>

#include <sys/resource.h>
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "catmirror/bijections.hpp"
#include "catmirror/count.hpp"
#include "catmirror/dihedral.hpp"
#include "catmirror/enumeration.hpp"
#include "catmirror/generators.hpp"
#include "catmirror/io.hpp"
#include "catmirror/symmetry.hpp"
#include "oracles.hpp"

using namespace catmirror;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.1fs", seconds_since(t0));
  std::cout << (o.pass ? "PASS" : "FAIL") << " AC" << id << " " << title << " [" << timing << "] " << o.detail.str()
            << std::endl;
  if (!o.pass) ++failures;
}

struct Piped {
  int status = -1;
  std::size_t lines = 0;
  std::string output;
};

Piped run(const std::string& cmd, bool keep_output) {
  Piped r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  while (std::fgets(buf, sizeof buf, pipe)) {
    const std::string chunk(buf);
    if (!chunk.empty() && chunk.back() == '\n') ++r.lines;
    if (keep_output) r.output += chunk;
  }
  const int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

const VerifyRow* find_row(const VerifyReport& rep, const std::string& stat, int n) {
  for (const auto& r : rep.rows)
    if (r.statistic == stat && r.n == n) return &r;
  return nullptr;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <catmirror-cli>\n";
    return 3;
  }
  const std::string cli = argv[1];
  const std::vector<long> kSelfDual{1, 1, 1, 2, 3, 7, 12, 30};

  criterion(1, "cardinalities equal nu(n) for 1<=n<=9", [&](Outcome& o) {
    const auto t0 = Clock::now();
    for (int n = 1; n <= 9; ++n) {
      const CountValue v = nu(n);
      const auto tag = " n=" + std::to_string(n);
      o.require(CountValue(gen_ncts(n).size()) == v, "ncts" + tag);
      o.require(CountValue(gen_dissections(n).size()) == v, "dissections" + tag);
      o.require(CountValue(gen_ternary(n - 1).size()) == v, "ternary" + tag);
      o.require(CountValue(gen_pcdds(n - 1).size()) == v, "pcdds" + tag);
    }
    o.require(nu(9) == 43263, "nu(9) = 43263");
    o.require(seconds_since(t0) < 60, "under 60 s");
  });

  criterion(2, "figure instances", [&](Outcome& o) {
    const QuadDissection fig3(5, {{1, 4}, {5, 8}, {5, 10}});
    const NctTree fig3_tree(5, {{1, 2}, {1, 3}, {3, 4}, {3, 5}});
    const NctTree fig1(8, {{1, 4}, {1, 3}, {1, 8}, {2, 3}, {4, 7}, {4, 6}, {5, 6}});
    o.require(phi(fig3) == fig3_tree, "phi(Fig. 3)");
    o.require(phi_inv(fig3_tree) == fig3, "phi_inv(Fig. 3)");
    o.require(format(psi(fig3)) == "((* (* * (* * *)) *) * *)", "psi(Fig. 3)");
    o.require(psi_inv(parse_ternary("((* (* * (* * *)) *) * *)")) == fig3, "psi_inv(Fig. 5)");
    o.require(nct_delta(fig3_tree) == NctTree(5, {{1, 2}, {2, 5}, {3, 4}, {4, 5}}), "delta(Fig. 2)");
    o.require(nct_star(fig3_tree) == NctTree(5, {{1, 5}, {2, 5}, {2, 3}, {3, 4}}), "star(Fig. 2)");
    o.require(nct_reflect_s(fig1) == NctTree(8, {{1, 6}, {1, 7}, {1, 2}, {7, 8}, {3, 6}, {4, 6}, {4, 5}}),
              "s(Fig. 1)");
  });

  criterion(3, "diagram commutes: psi = sigma.phi and tau.M = sigma, 2<=n<=7", [&](Outcome& o) {
    std::size_t checked = 0;
    for (int n = 2; n <= 7; ++n)
      for (const auto& q : gen_dissections(n)) {
        const auto t = phi(q);
        const auto s = sigma(t);
        o.require(psi(q) == s, "psi = sigma.phi at " + format(q));
        o.require(tau(medial(t)) == s, "tau.M = sigma at " + format(t));
        ++checked;
      }
    o.detail << checked << " dissections; ";
  });

  criterion(4, "duality preservation, 2<=n<=7", [&](Outcome& o) {
    for (int n = 2; n <= 7; ++n) {
      const auto r = DihedralElement::r(2 * n);
      for (const auto& t : gen_ncts(n)) {
        const auto st = nct_star(t);
        const auto tag = " at " + format(t);
        o.require(sigma(st) == ternary_star(sigma(t)), "sigma" + tag);
        o.require(medial(st) == pcdd_star(medial(t)), "medial star" + tag);
        o.require(medial(nct_barstar(t)) == pcdd_barstar(medial(t)), "medial barstar" + tag);
        o.require(phi(dihedral_apply(r, phi_inv(t))) == st, "phi(r q)" + tag);
        o.require(st == nct_reflect_s(nct_delta(t)), "t* = s(delta t)" + tag);
        o.require(nct_barstar(t) == nct_reflect_s(nct_delta(t, true)), "t^bar* = s(delta^-1 t)" + tag);
      }
    }
  });

  criterion(5, "fixed-point theorem over D_2n, 2<=n<=8", [&](Outcome& o) {
    auto s = [&](int n) { return kSelfDual[static_cast<std::size_t>(n - 1)]; };
    for (int n = 2; n <= 8; ++n) {
      const auto family = gen_dissections(n);
      for (const auto& g : group_elements(GroupSpec::D2n, n)) {
        long brute = 0;
        for (const auto& q : family)
          if (dihedral_apply(g, q) == q) ++brute;
        long expected = 0;
        switch (classify(g)) {
          case SymmetryClass::identity: expected = static_cast<long>(family.size()); break;
          case SymmetryClass::reflection: expected = s(n); break;
          case SymmetryClass::rotation_pi: expected = n % 2 ? n * s(n) : (n / 2) * s(n); break;
          case SymmetryClass::rotation_half_pi: expected = n % 4 == 2 ? (n / 2) * s(n / 2) : 0; break;
          case SymmetryClass::other_rotation: expected = 0; break;
        }
        const auto tag = " n=" + std::to_string(n) + " k=" + std::to_string(g.k) + " f=" + std::to_string(g.f);
        o.require(brute == expected, "brute" + tag);
        o.require(fixed_points_formula(classify(g), n) == expected, "formula" + tag);
      }
    }
  });

  criterion(6, "Burnside equals explicit orbits; derived orbit counts", [&](Outcome& o) {
    for (int n = 1; n <= 7; ++n)
      for (const auto g : {GroupSpec::C2n, GroupSpec::D2n, GroupSpec::Cn, GroupSpec::Dn}) {
        const auto c = burnside_orbits(g, n);
        o.require(c.burnside == CountValue(static_cast<unsigned long>(c.explicit_orbits)),
                  std::string(to_string(g)) + " n=" + std::to_string(n));
      }
    const struct {
      GroupSpec g;
      int n;
      long value;
      const char* name;
    } derived[] = {{GroupSpec::C2n, 3, 1, "q'6"},   {GroupSpec::C2n, 4, 2, "q'8"}, {GroupSpec::C2n, 5, 7, "q'10"},
                   {GroupSpec::C2n, 6, 25, "q'12"}, {GroupSpec::D2n, 5, 5, "q~10"}, {GroupSpec::Cn, 4, 4, "nu'4"},
                   {GroupSpec::Dn, 4, 3, "nu~4"}};
    for (const auto& d : derived) o.require(burnside_orbits(d.g, d.n).burnside == d.value, d.name);
  });

  criterion(7, "formula audit (verify --max 7)", [&](Outcome& o) {
    const auto rep = verify_report(7);
    o.require(rep.invariants_ok(), "structural invariants");
    for (const auto* stat : {"q_dihedral", "s_oriented", "s_unoriented", "antiselfdual"})
      for (int n = 1; n <= 7; ++n) {
        const auto* r = find_row(rep, stat, n);
        o.require(r && r->printed_matches(), std::string("(a) ") + stat + " n=" + std::to_string(n));
      }
    for (int n = 2; n <= 7; ++n) {
      const auto* r = find_row(rep, "self_dual", n);
      o.require(r && r->printed == Rational(count_self_dual_brute(n + 1)), "(b) s_printed(n) = oracle(n+1), n=" +
                                                                              std::to_string(n));
    }
    const auto* s3 = find_row(rep, "self_dual", 3);
    o.require(s3 && !s3->printed_matches(), "(b) s_printed(3) != oracle(3)");
    bool nct_rot_disagrees = false, non_integer = false;
    for (int n = 1; n <= 7; ++n) {
      const auto* r = find_row(rep, "nct_rot", n);
      o.require(r && r->aligned_matches(), "(c) nct_rot aligned n=" + std::to_string(n));
      if (r && !r->printed_matches()) nct_rot_disagrees = true;
      if (r && r->printed.get_den() != 1) non_integer = true;
      const auto* q = find_row(rep, "q_rot", n);
      o.require(q && q->aligned_matches(), "(c) q_rot aligned n=" + std::to_string(n));
      if (n % 2 == 0) {
        o.require(q && !q->printed_matches(), "(c) q_rot printed disagrees at even n=" + std::to_string(n));
        if (q && q->printed.get_den() != 1) non_integer = true;
      }
    }
    o.require(nct_rot_disagrees, "(c) nct_rot printed disagrees somewhere");
    o.require(non_integer, "(c) non-integer printed values flagged");
    o.require(!rep.aligned_mismatch(), "all aligned values match");
    const auto cmd = run("'" + cli + "' verify --max 7 >/dev/null 2>&1; echo $?", true);
    o.require(cmd.output == "2\n", "CLI exit code 2 (got " + cmd.output + ")");
  });

  criterion(8, "beta bijection, m<=8; |S_m| sequence", [&](Outcome& o) {
    for (int m = 0; m <= 8; ++m) {
      std::set<BetaImage> images;
      const auto sd = gen_self_dual_ternary(m);
      std::size_t filtered = 0;
      for (const auto& t : oracle::brute_ternary(m))
        if (oracle::mirror(t) == t) ++filtered;
      o.require(sd.size() == filtered, "S_m by filtering, m=" + std::to_string(m));
      if (m <= 7) o.require(sd.size() == static_cast<std::size_t>(kSelfDual[static_cast<std::size_t>(m)]),
                            "|S_m| m=" + std::to_string(m));
      for (const auto& t : sd) {
        const auto img = beta_encode(t);
        if (m % 2 == 0) {
          o.require(std::get<TernaryTree>(img).internal_count() == m / 2, "even size");
        } else {
          const auto& [a, b] = std::get<TernaryPair>(img);
          o.require(a.internal_count() + b.internal_count() == (m - 1) / 2, "odd size");
        }
        o.require(beta_decode(img) == t, "decode inverts");
        images.insert(img);
      }
      o.require(images.size() == sd.size(), "injective m=" + std::to_string(m));
      std::size_t target = 0;
      if (m % 2 == 0) {
        target = gen_ternary(m / 2).size();
      } else {
        for (int a = 0; a <= (m - 1) / 2; ++a) target += gen_ternary(a).size() * gen_ternary((m - 1) / 2 - a).size();
      }
      o.require(images.size() == target, "onto m=" + std::to_string(m));
    }
  });

  criterion(9, "round trips, n<=7; serialization byte-exact", [&](Outcome& o) {
    for (int n = 1; n <= 7; ++n) {
      for (const auto& q : gen_dissections(n)) {
        o.require(phi_inv(phi(q)) == q, "phi_inv.phi");
        o.require(psi_inv(psi(q)) == q, "psi_inv.psi");
        const auto text = format(q);
        o.require(format(parse_any(text)) == text, "qd text " + text);
      }
      for (const auto& t : gen_ncts(n)) {
        o.require(phi(phi_inv(t)) == t, "phi.phi_inv");
        o.require(medial_inv(medial(t)) == t, "M^-1.M");
        o.require(sigma_inv(sigma(t)) == t, "sigma^-1.sigma");
        if (n >= 2) o.require(fuse_nct(unfuse_nct(t)) == t, "fuse.unfuse (trees)");
        const auto text = format(t);
        o.require(format(parse_any(text)) == text, "nct text " + text);
      }
      for (const auto& t : gen_ternary(n - 1)) {
        o.require(psi(psi_inv(t)) == t, "psi.psi_inv");
        const auto text = format(t);
        o.require(format(parse_any(text)) == text, "ternary text " + text);
      }
      for (const auto& p : gen_pcdds(n - 1)) {
        if (!p.is_empty()) {
          const auto parts = unfuse_pcdd(p);
          o.require(fuse_pcdd(parts.left, parts.middle, parts.right) == p, "fuse.unfuse (PCDD)");
        }
        const auto text = format(p);
        o.require(format(parse_any(text)) == text, "pcdd text " + text);
        o.require(to_json(parse_any(text)) == to_json(Object(p)), "pcdd json");
      }
    }
  });

  criterion(10, "performance: verify --max 8 < 120 s; gen qd 10 streams 246675 lines", [&](Outcome& o) {
    const auto t0 = Clock::now();
    const auto rep = verify_report(8);
    const double verify_s = seconds_since(t0);
    o.require(rep.invariants_ok(), "verify(8) invariants");
    o.require(verify_s < 120, "verify(8) under 120 s");
    const auto t1 = Clock::now();
    const auto streamed = run("'" + cli + "' gen qd 10 --stream", false);
    const double gen_s = seconds_since(t1);
    rusage usage{};
    getrusage(RUSAGE_CHILDREN, &usage);
    const long peak_mb = usage.ru_maxrss / 1024;
    o.require(streamed.status == 0, "gen exit status");
    o.require(streamed.lines == 246675, "line count " + std::to_string(streamed.lines));
    o.require(peak_mb < 1024, "child peak RSS " + std::to_string(peak_mb) + " MB");
    char buf[128];
    std::snprintf(buf, sizeof buf, "verify(8) %.1fs, gen %.1fs, peak child RSS %ld MB; ", verify_s, gen_s, peak_mb);
    o.detail << buf;
  });

  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " criteria FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
