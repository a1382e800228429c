#include "catmirror/io.hpp"

#include <cctype>
#include <stdexcept>

#include "catmirror/bijections.hpp"

namespace catmirror {

std::string_view to_string(Kind k) {
  switch (k) {
    case Kind::nct: return "nct";
    case Kind::qd: return "qd";
    case Kind::ternary: return "ternary";
    case Kind::pcdd: return "pcdd";
  }
  return "?";
}

Kind kind_of(const Object& obj) { return static_cast<Kind>(obj.index()); }

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error("parse error at " + std::to_string(position) + ": " + what), position_(position) {}

// ---------------------------------------------------------------- format

namespace {

std::string format_pairs(const std::vector<Edge>& edges) {
  std::string out;
  for (const auto& e : edges) {
    if (!out.empty()) out += ',';
    out += std::to_string(e.a) + '-' + std::to_string(e.b);
  }
  return out;
}

}  // namespace

std::string format(const NctTree& t) {
  std::string out = "nct " + std::to_string(t.size()) + ":";
  if (!t.edges().empty()) out += ' ' + format_pairs(t.edges());
  return out;
}

std::string format(const QuadDissection& q) {
  std::string out = "qd " + std::to_string(q.half_size()) + ":";
  if (!q.diagonals().empty()) out += ' ' + format_pairs(q.diagonals());
  return out;
}

std::string format(const TernaryTree& t) {
  std::string out;
  std::vector<int> pending;  // children still to print at each open node
  for (auto c : t.code()) {
    if (!pending.empty() && pending.back() < 3) out += ' ';
    if (c) {
      out += '(';
      pending.push_back(3);
      continue;
    }
    out += '*';
    while (!pending.empty() && --pending.back() == 0) {
      out += ')';
      pending.pop_back();
    }
  }
  return out;
}

std::string format(const Pcdd& p) {
  std::string out = "pcdd " + std::to_string(p.size()) + ":";
  if (p.is_empty()) return out;
  out += " darts=";
  bool first = true;
  for (const auto& d : p.darts()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(d.from) + '>' + std::to_string(d.to);
  }
  out += " chains=";
  for (std::size_t c = 0; c < p.chains().size(); ++c) {
    if (c) out += ';';
    out += '[';
    for (std::size_t i = 0; i < p.chains()[c].size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(p.chains()[c][i]);
    }
    out += ']';
  }
  out += " flag=" + std::to_string(p.flag());
  return out;
}

std::string format(const Object& obj) {
  return std::visit([](const auto& x) { return format(x); }, obj);
}

// ---------------------------------------------------------------- parse

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  void expect_word(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) fail("expected '" + std::string(word) + "'");
    pos_ += word.size();
  }
  int integer() {
    skip_ws();
    const std::size_t start = pos_;
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > 1'000'000) fail("number too large");
    }
    if (pos_ == start) fail("expected a number");
    return static_cast<int>(v);
  }
  void finish() {
    if (!at_end()) fail("unexpected trailing text");
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<Edge> pair_list(Cursor& cur, char sep) {
  std::vector<Edge> out;
  if (cur.at_end()) return out;
  do {
    const int a = cur.integer();
    cur.expect(sep);
    const int b = cur.integer();
    out.push_back(make_edge(a, b));
  } while (cur.accept(','));
  return out;
}

void expect_header(Cursor& cur, std::string_view word, int& size) {
  cur.expect_word(word);
  size = cur.integer();
  cur.expect(':');
}

void parse_ternary_node(Cursor& cur, std::vector<std::uint8_t>& code, int depth) {
  if (depth > 100000) cur.fail("nesting too deep");
  if (cur.accept('*')) {
    code.push_back(0);
    return;
  }
  cur.expect('(');
  code.push_back(1);
  for (int i = 0; i < 3; ++i) parse_ternary_node(cur, code, depth + 1);
  cur.expect(')');
}

}  // namespace

NctTree parse_nct(std::string_view text) {
  Cursor cur(text);
  int n = 0;
  expect_header(cur, "nct", n);
  auto edges = pair_list(cur, '-');
  cur.finish();
  NctTree t(n, std::move(edges));
  require_valid(t);
  return t;
}

QuadDissection parse_qd(std::string_view text) {
  Cursor cur(text);
  int n = 0;
  expect_header(cur, "qd", n);
  auto diagonals = pair_list(cur, '-');
  cur.finish();
  QuadDissection q(n, std::move(diagonals));
  require_valid(q);
  return q;
}

TernaryTree parse_ternary(std::string_view text) {
  Cursor cur(text);
  std::vector<std::uint8_t> code;
  parse_ternary_node(cur, code, 0);
  cur.finish();
  auto t = TernaryTree::from_code(std::move(code));
  require_valid(t);
  return t;
}

Pcdd parse_pcdd(std::string_view text) {
  Cursor cur(text);
  int m = 0;
  expect_header(cur, "pcdd", m);
  if (cur.at_end()) {
    Pcdd p(m, {}, {Chain{}}, 0);
    require_valid(p);
    return p;
  }
  cur.expect_word("darts");
  cur.expect('=');
  std::vector<Dart> darts;
  if (cur.peek() != 'c') {
    do {
      const int u = cur.integer();
      cur.expect('>');
      darts.push_back({u, cur.integer()});
    } while (cur.accept(','));
  }
  cur.expect_word("chains");
  cur.expect('=');
  std::vector<Chain> chains;
  do {
    cur.expect('[');
    Chain chain;
    while (!cur.accept(']')) chain.push_back(cur.integer());
    chains.push_back(std::move(chain));
  } while (cur.accept(';'));
  cur.expect_word("flag");
  cur.expect('=');
  const int flag = cur.integer();
  cur.finish();
  Pcdd p(m, std::move(darts), std::move(chains), flag);
  require_valid(p);
  try {
    return canonical(p);
  } catch (const std::invalid_argument& e) {
    ValidationReport report;
    report.add(std::string("chain structure is not tree-coherent: ") + e.what());
    throw ValidationError(std::move(report));
  }
}

Object parse(Kind kind, std::string_view text) {
  switch (kind) {
    case Kind::nct: return parse_nct(text);
    case Kind::qd: return parse_qd(text);
    case Kind::ternary: return parse_ternary(text);
    case Kind::pcdd: return parse_pcdd(text);
  }
  throw std::invalid_argument("unknown kind");
}

Object parse_any(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  const auto rest = text.substr(i);
  if (rest.starts_with("nct")) return parse_nct(text);
  if (rest.starts_with("qd")) return parse_qd(text);
  if (rest.starts_with("pcdd")) return parse_pcdd(text);
  if (rest.starts_with("(") || rest.starts_with("*")) return parse_ternary(text);
  throw ParseError("cannot tell the object kind", i);
}

// ---------------------------------------------------------------- JSON

namespace {

nlohmann::ordered_json pairs_json(const std::vector<Edge>& edges) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& e : edges) out.push_back({e.a, e.b});
  return out;
}

std::vector<Edge> pairs_from(const nlohmann::ordered_json& j) {
  std::vector<Edge> out;
  for (const auto& e : j) out.push_back(make_edge(e.at(0).get<int>(), e.at(1).get<int>()));
  return out;
}

}  // namespace

nlohmann::ordered_json to_json(const Object& obj) {
  nlohmann::ordered_json j;
  j["kind"] = std::string(to_string(kind_of(obj)));
  if (const auto* t = std::get_if<NctTree>(&obj)) {
    j["n"] = t->size();
    j["edges"] = pairs_json(t->edges());
  } else if (const auto* q = std::get_if<QuadDissection>(&obj)) {
    j["n"] = q->half_size();
    j["diagonals"] = pairs_json(q->diagonals());
  } else if (const auto* tt = std::get_if<TernaryTree>(&obj)) {
    j["internal"] = tt->internal_count();
    j["tree"] = format(*tt);
  } else {
    const auto& p = std::get<Pcdd>(obj);
    j["m"] = p.size();
    auto darts = nlohmann::ordered_json::array();
    for (const auto& d : p.darts()) darts.push_back({d.from, d.to});
    j["darts"] = darts;
    j["chains"] = p.chains();
    j["flag"] = p.flag();
  }
  return j;
}

Object from_json(const nlohmann::ordered_json& j) {
  try {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "nct") {
      NctTree t(j.at("n").get<int>(), pairs_from(j.at("edges")));
      require_valid(t);
      return t;
    }
    if (kind == "qd") {
      QuadDissection q(j.at("n").get<int>(), pairs_from(j.at("diagonals")));
      require_valid(q);
      return q;
    }
    if (kind == "ternary") return parse_ternary(j.at("tree").get<std::string>());
    if (kind == "pcdd") {
      std::vector<Dart> darts;
      for (const auto& d : j.at("darts")) darts.push_back({d.at(0).get<int>(), d.at(1).get<int>()});
      Pcdd p(j.at("m").get<int>(), std::move(darts), j.at("chains").get<std::vector<Chain>>(), j.at("flag").get<int>());
      require_valid(p);
      return p.is_empty() ? p : canonical(p);
    }
    throw ParseError("unknown kind '" + kind + "'", 0);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace catmirror
