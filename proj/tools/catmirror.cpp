// catmirror: command-line front end for the Fuss-Catalan families, their
// bijections, symmetries and orbit counts. One object per line on stdin/stdout.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "catmirror/bijections.hpp"
#include "catmirror/dihedral.hpp"
#include "catmirror/enumeration.hpp"
#include "catmirror/generators.hpp"
#include "catmirror/io.hpp"
#include "catmirror/render.hpp"
#include "catmirror/symmetry.hpp"

namespace {

using namespace catmirror;

enum Exit { kOk = 0, kInvalid = 1, kMismatch = 2, kUsage = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string file;
  std::vector<std::string> inline_text;
  bool json = false;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("-i,--input", in.file, "Read objects from a file (one per line)");
  cmd->add_option("-e,--expr", in.inline_text, "Inline object in canonical text");
  cmd->add_flag("--json", in.json, "Write JSON instead of canonical text");
}

// Calls `each` for every non-blank, non-comment input line.
void for_each_input(const InputOptions& in, const std::function<void(const std::string&)>& each) {
  auto feed = [&](std::istream& is) {
    std::string line;
    while (std::getline(is, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      each(line);
    }
  };
  if (!in.inline_text.empty()) {
    for (const auto& text : in.inline_text) each(text);
  } else if (!in.file.empty()) {
    std::ifstream f(in.file);
    if (!f) throw UsageError("cannot open " + in.file);
    feed(f);
  } else {
    feed(std::cin);
  }
}

void emit(const Object& obj, bool json) {
  if (json) std::cout << to_json(obj).dump() << '\n';
  else std::cout << format(obj) << '\n';
}

template <typename T>
const T& expect_kind(const Object& obj, std::string_view what) {
  if (const auto* x = std::get_if<T>(&obj)) return *x;
  ValidationReport report;
  report.add("expected " + std::string(what) + " input, got " + std::string(to_string(kind_of(obj))));
  throw ValidationError(std::move(report));
}

// ---------------------------------------------------------------- gen

int run_gen(const std::string& family, int size, bool stream, bool json) {
  auto out = [json](const Object& obj) { emit(obj, json); };
  if (family == "nct") {
    if (stream) for_each_nct(size, [&](const NctTree& t) { out(t); });
    else for (const auto& t : gen_ncts(size)) out(t);
  } else if (family == "qd") {
    if (stream) for_each_dissection(size, [&](const QuadDissection& q) { out(q); });
    else for (const auto& q : gen_dissections(size)) out(q);
  } else if (family == "ternary") {
    for (const auto& t : gen_ternary(size)) out(t);
  } else if (family == "pcdd") {
    for (const auto& p : gen_pcdds(size)) out(p);
  } else if (family == "self-dual-ternary") {
    for (const auto& t : gen_self_dual_ternary(size)) out(t);
  } else {
    throw UsageError("unknown family '" + family + "' (nct, qd, ternary, pcdd, self-dual-ternary)");
  }
  return kOk;
}

// ---------------------------------------------------------------- convert

Object convert_one(const std::string& map, const Object& obj) {
  if (map == "phi") return phi(expect_kind<QuadDissection>(obj, "qd"));
  if (map == "phi-inv") return phi_inv(expect_kind<NctTree>(obj, "nct"));
  if (map == "psi") return psi(expect_kind<QuadDissection>(obj, "qd"));
  if (map == "psi-inv") return psi_inv(expect_kind<TernaryTree>(obj, "ternary"));
  if (map == "sigma") return sigma(expect_kind<NctTree>(obj, "nct"));
  if (map == "sigma-inv") return sigma_inv(expect_kind<TernaryTree>(obj, "ternary"));
  if (map == "medial") return medial(expect_kind<NctTree>(obj, "nct"));
  if (map == "medial-inv") return medial_inv(expect_kind<Pcdd>(obj, "pcdd"));
  if (map == "tau") return tau(expect_kind<Pcdd>(obj, "pcdd"));
  throw UsageError("unknown map '" + map + "'");
}

const std::vector<std::string> kMaps{"phi",   "phi-inv",   "psi",    "psi-inv",    "sigma",
                                     "sigma-inv", "medial", "medial-inv", "tau"};

// ---------------------------------------------------------------- act

struct Op {
  std::string name;
  int j = 0;
  int k = 0;
  int f = 0;
};

Op parse_op(const std::string& text) {
  Op op;
  const auto colon = text.find(':');
  op.name = text.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
  try {
    if (op.name == "rotate") {
      if (args.empty()) throw UsageError("rotate needs an amount, e.g. rotate:1");
      op.j = std::stoi(args);
    } else if (op.name == "dihedral") {
      const auto comma = args.find(',');
      if (comma == std::string::npos) throw UsageError("dihedral needs k,f, e.g. dihedral:1,1");
      op.k = std::stoi(args.substr(0, comma));
      op.f = std::stoi(args.substr(comma + 1));
    } else if (colon != std::string::npos) {
      throw UsageError("operation '" + op.name + "' takes no argument");
    }
  } catch (const std::logic_error&) {
    throw UsageError("bad operation argument in '" + text + "'");
  }
  static const std::vector<std::string> known{"delta",     "delta-inv", "star",   "barstar", "reflect-s",
                                              "rev",       "rotate",    "dihedral", "bar"};
  if (std::find(known.begin(), known.end(), op.name) == known.end()) throw UsageError("unknown operation '" + text + "'");
  return op;
}

NctTree act_tree(const Op& op, const NctTree& t) {
  if (op.name == "delta") return nct_delta(t);
  if (op.name == "delta-inv") return nct_delta(t, true);
  if (op.name == "star") return nct_star(t);
  if (op.name == "barstar") return nct_barstar(t);
  if (op.name == "reflect-s") return nct_reflect_s(t);
  if (op.name == "rev") return nct_rev(t);
  if (op.name == "rotate") return nct_rotate(t, op.j);
  if (op.name == "dihedral") {
    return phi(dihedral_apply(DihedralElement::make(2 * t.size(), op.k, op.f), phi_inv(t)));
  }
  throw UsageError("operation '" + op.name + "' does not apply to nct");
}

Object act_one(const Op& op, const Object& obj) {
  switch (kind_of(obj)) {
    case Kind::nct: return act_tree(op, std::get<NctTree>(obj));
    case Kind::qd: {
      const auto& q = std::get<QuadDissection>(obj);
      if (op.name == "dihedral") return dihedral_apply(DihedralElement::make(q.polygon_size(), op.k, op.f), q);
      // Tree operations act on dissections through phi.
      return phi_inv(act_tree(op, phi(q)));
    }
    case Kind::ternary:
      if (op.name == "star") return ternary_star(std::get<TernaryTree>(obj));
      throw UsageError("only 'star' applies to ternary trees");
    case Kind::pcdd: {
      const auto& p = std::get<Pcdd>(obj);
      if (op.name == "star") return pcdd_star(p);
      if (op.name == "barstar") return pcdd_barstar(p);
      if (op.name == "bar") return pcdd_bar(p);
      throw UsageError("only 'star', 'barstar' and 'bar' apply to PCDDs");
    }
  }
  throw UsageError("unsupported input");
}

// ---------------------------------------------------------------- count

std::string show(const Rational& q) {
  return q.get_den() == 1 ? format_rational(q) : format_rational(q) + " (non-integer)";
}

int run_count(std::string stat, int n, const std::string& variant) {
  if (n < 1) throw UsageError("n must be at least 1");
  std::replace(stat.begin(), stat.end(), '-', '_');
  if (stat == "nu") {
    if (variant == "brute") std::cout << gen_ncts(n).size() << '\n';
    else std::cout << nu(n).get_str() << '\n';
    return kOk;
  }
  if (stat == "self_dual") {
    if (variant == "brute") std::cout << count_self_dual_brute(n).get_str() << '\n';
    else if (variant == "printed") std::cout << show(self_dual_printed(n)) << '\n';
    else std::cout << self_dual_aligned(n).get_str() << '\n';
    return kOk;
  }
  const auto s = parse_statistic(stat);
  if (!s) throw UsageError("unknown statistic '" + stat + "'");
  if (variant == "brute") std::cout << brute_statistic(*s, n).get_str() << '\n';
  else std::cout << show(closed_form(*s, n, variant == "printed" ? Variant::as_printed : Variant::oracle_aligned)) << '\n';
  return kOk;
}

// ---------------------------------------------------------------- render

int run_render(const InputOptions& in, bool overlay, const std::string& out_file, std::string fmt) {
  std::optional<Object> obj;
  for_each_input(in, [&](const std::string& line) {
    if (!obj) obj = parse_any(line);
  });
  if (!obj) throw UsageError("render needs one input object");
  const Kind kind = kind_of(*obj);
  if (fmt.empty()) fmt = (kind == Kind::nct || kind == Kind::qd) ? "svg" : "dot";
  std::string text;
  if (overlay) {
    const auto& q = expect_kind<QuadDissection>(*obj, "qd");
    if (fmt != "svg") throw UsageError("overlays are SVG only");
    text = render_overlay_svg(q, phi(q), even_tree(q));
  } else if (fmt == "svg") {
    if (kind == Kind::nct) text = render_svg(std::get<NctTree>(*obj));
    else if (kind == Kind::qd) text = render_svg(std::get<QuadDissection>(*obj));
    else throw UsageError("SVG rendering covers nct and qd; use --format dot");
  } else if (fmt == "dot") {
    if (kind == Kind::ternary) text = render_dot(std::get<TernaryTree>(*obj));
    else if (kind == Kind::pcdd) text = render_dot(std::get<Pcdd>(*obj));
    else throw UsageError("DOT rendering covers ternary and pcdd; use --format svg");
  } else {
    throw UsageError("unknown format '" + fmt + "'");
  }
  if (out_file.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_file);
    if (!f) throw UsageError("cannot write " + out_file);
    f << text;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-crossing trees, quadrangular dissections, ternary trees and PCDDs"};
  app.require_subcommand(1);

  std::string family;
  int size = 0;
  bool stream = false;
  bool gen_json = false;
  auto* gen = app.add_subcommand("gen", "Generate every object of a family");
  gen->add_option("family", family, "nct | qd | ternary | pcdd | self-dual-ternary")->required();
  gen->add_option("size", size, "n for nct/qd, internal count m for ternary/pcdd")->required();
  gen->add_flag("--stream", stream, "Emit in generation order without sorting (nct, qd)");
  gen->add_flag("--json", gen_json, "Write JSON lines");

  std::string map;
  InputOptions convert_in;
  auto* convert = app.add_subcommand("convert", "Apply a bijection to each input object");
  convert->add_option("map", map, "phi | phi-inv | psi | psi-inv | sigma | sigma-inv | medial | medial-inv | tau")
      ->required()
      ->check(CLI::IsMember(kMaps));
  add_input_options(convert, convert_in);

  std::string op_text;
  InputOptions act_in;
  auto* act = app.add_subcommand("act", "Apply a symmetry to each input object");
  act->add_option("op", op_text,
                  "delta | delta-inv | star | barstar | reflect-s | rev | rotate:<j> | dihedral:<k>,<f> | bar (pcdd)")
      ->required();
  add_input_options(act, act_in);

  std::string stat, variant = "aligned";
  int count_n = 0;
  auto* count = app.add_subcommand("count", "Exact counts");
  count->add_option("stat", stat,
                    "nu | self-dual | q_rot | q_dihedral | nct_rot | nct_dihedral | s_oriented | s_unoriented | "
                    "antiselfdual")
      ->required();
  count->add_option("n", count_n, "Size")->required();
  count->add_option("--variant", variant, "printed | aligned | brute")
      ->check(CLI::IsMember({"printed", "aligned", "brute"}));

  int fk = 0, ff = 0, fn = 0;
  bool witnesses = false;
  auto* fixed = app.add_subcommand("fixed", "Dissections of the 2n-gon fixed by delta^k r^f");
  fixed->add_option("k", fk, "Rotation exponent")->required();
  fixed->add_option("f", ff, "Reflection flag (0 or 1)")->required()->check(CLI::Range(0, 1));
  fixed->add_option("n", fn, "Half polygon size")->required()->check(CLI::PositiveNumber);
  fixed->add_flag("--witnesses", witnesses, "List the fixed dissections");

  std::string group;
  int orbit_n = 0;
  bool transversal = false;
  auto* orbits = app.add_subcommand("orbits", "Orbit count of Q_2n under a group");
  orbits->add_option("group", group, "C2n | D2n | Cn | Dn")->required()->check(CLI::IsMember({"C2n", "D2n", "Cn", "Dn"}));
  orbits->add_option("n", orbit_n, "Half polygon size")->required()->check(CLI::PositiveNumber);
  orbits->add_flag("--transversal", transversal, "List the smallest member of each orbit");

  int verify_max = 0;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "Compare every closed form with brute force");
  verify->add_option("--max", verify_max, "Largest n")->required()->check(CLI::PositiveNumber);
  verify->add_flag("--json", verify_json, "Write the report as JSON");

  InputOptions render_in;
  bool overlay = false;
  std::string out_file, render_format;
  auto* render = app.add_subcommand("render", "SVG for nct/qd, DOT for ternary/pcdd");
  render->add_option("-i,--input", render_in.file, "Read the object from a file");
  render->add_option("-e,--expr", render_in.inline_text, "Inline object");
  render->add_flag("--overlay", overlay, "Dissection with its odd (green) and even (red) trees");
  render->add_option("--out", out_file, "Output file (default stdout)");
  render->add_option("--format", render_format, "svg | dot")->check(CLI::IsMember({"svg", "dot"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) return run_gen(family, size, stream, gen_json);
    if (*convert) {
      for_each_input(convert_in, [&](const std::string& line) { emit(convert_one(map, parse_any(line)), convert_in.json); });
      return kOk;
    }
    if (*act) {
      const Op op = parse_op(op_text);
      for_each_input(act_in, [&](const std::string& line) { emit(act_one(op, parse_any(line)), act_in.json); });
      return kOk;
    }
    if (*count) return run_count(stat, count_n, variant);
    if (*fixed) {
      const auto g = DihedralElement::make(2 * fn, fk, ff);
      const auto result = fixed_points(g, witnesses);
      std::cout << result.count.get_str() << '\n';
      for (const auto& q : result.witnesses) std::cout << format(q) << '\n';
      return kOk;
    }
    if (*orbits) {
      const auto result = burnside_orbits(*parse_group(group), orbit_n, transversal);
      std::cout << result.burnside.get_str() << '\n';
      for (const auto& q : result.transversal) std::cout << format(q) << '\n';
      return kOk;
    }
    if (*verify) {
      const auto report = verify_report(verify_max);
      std::cout << (verify_json ? to_json(report) : to_text(report));
      const bool mismatch = report.printed_mismatch() || report.aligned_mismatch() || !report.invariants_ok();
      return mismatch ? kMismatch : kOk;
    }
    if (*render) return run_render(render_in, overlay, out_file, render_format);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kInvalid;
  } catch (const ParseError& e) {
    std::cerr << e.what() << '\n';
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalid;
  }
  return kUsage;
}
