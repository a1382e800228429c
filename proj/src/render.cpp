#include "catmirror/render.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "catmirror/io.hpp"

namespace catmirror {

namespace {

constexpr const char* kBlue = "#1f4fbf";
constexpr const char* kGreen = "#1a9641";
constexpr const char* kRed = "#d7191c";

struct Canvas {
  int size;
  int points;  // vertices on the circle
  std::string body;

  // Vertex 1 at -90 degrees (bottom), labels increasing counterclockwise.
  std::pair<double, double> at(int v, double scale = 1.0) const {
    const double pi = std::acos(-1.0);
    const double theta = -pi / 2 + 2 * pi * (v - 1) / points;
    const double r = 0.4 * size * scale;
    return {size / 2.0 + r * std::cos(theta), size / 2.0 - r * std::sin(theta)};
  }

  void line(int u, int v, const char* cls, const char* color, double width) {
    const auto [x1, y1] = at(u);
    const auto [x2, y2] = at(v);
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "  <line class=\"%s\" x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"%s\" "
                  "stroke-width=\"%.1f\"/>\n",
                  cls, x1, y1, x2, y2, color, width);
    body += buf;
  }

  void vertices(bool labels, int first = 1, int step = 1) {
    char buf[256];
    for (int v = first; v <= points; v += step) {
      const auto [x, y] = at(v);
      std::snprintf(buf, sizeof buf, "  <circle class=\"vertex\" cx=\"%.2f\" cy=\"%.2f\" r=\"3.5\" fill=\"black\"/>\n", x,
                    y);
      body += buf;
      if (labels) {
        const auto [lx, ly] = at(v, 1.12);
        std::snprintf(buf, sizeof buf,
                      "  <text class=\"label\" x=\"%.2f\" y=\"%.2f\" font-size=\"12\" text-anchor=\"middle\" "
                      "dominant-baseline=\"middle\">%d</text>\n",
                      lx, ly, v);
        body += buf;
      }
    }
  }

  std::string finish(const std::string& title) const {
    const std::string s = std::to_string(size);
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + s + "\" height=\"" + s + "\" viewBox=\"0 0 " + s + " " +
           s + "\">\n  <title>" + title + "</title>\n  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n" + body +
           "</svg>\n";
  }
};

void polygon(Canvas& c, const QuadDissection& q) {
  const int len = q.polygon_size();
  for (int v = 1; v <= len; ++v) c.line(v, v % len + 1, "polygon", kBlue, 1.5);
  for (const auto& d : q.diagonals()) c.line(d.a, d.b, "polygon", kBlue, 1.5);
}

}  // namespace

std::string render_svg(const NctTree& t, const SvgOptions& opt) {
  require_valid(t);
  Canvas c{opt.size_px, t.size(), {}};
  for (const auto& e : t.edges()) c.line(e.a, e.b, "tree", kGreen, 2.0);
  c.vertices(opt.labels);
  return c.finish(format(t));
}

std::string render_svg(const QuadDissection& q, const SvgOptions& opt) {
  require_valid(q);
  Canvas c{opt.size_px, q.polygon_size(), {}};
  polygon(c, q);
  c.vertices(opt.labels);
  return c.finish(format(q));
}

std::string render_overlay_svg(const QuadDissection& q, const NctTree& odd, const NctTree& even,
                               const SvgOptions& opt) {
  require_valid(q);
  require_valid(odd);
  require_valid(even);
  if (odd.size() != q.half_size() || even.size() != q.half_size()) {
    throw std::invalid_argument("overlay trees must have n = " + std::to_string(q.half_size()) + " vertices");
  }
  Canvas c{opt.size_px, q.polygon_size(), {}};
  polygon(c, q);
  for (const auto& e : odd.edges()) c.line(2 * e.a - 1, 2 * e.b - 1, "odd-tree", kGreen, 2.5);
  for (const auto& e : even.edges()) c.line(2 * e.a, 2 * e.b, "even-tree", kRed, 2.5);
  c.vertices(opt.labels);
  return c.finish(format(q) + " | " + format(odd) + " | " + format(even));
}

std::string render_dot(const TernaryTree& t) {
  require_valid(t);
  std::string out = "digraph ternary {\n  // " + format(t) + "\n  node [label=\"\"];\n";
  int next = 0;
  auto walk = [&](auto&& self, const TernaryTree& node) -> int {
    const int id = next++;
    out += "  n" + std::to_string(id) + (node.is_leaf() ? " [shape=point];\n" : " [shape=circle];\n");
    if (!node.is_leaf()) {
      const auto ch = node.children();
      const char* names[3] = {"L", "M", "R"};
      for (int i = 0; i < 3; ++i) {
        const int child = self(self, ch[static_cast<std::size_t>(i)]);
        out += "  n" + std::to_string(id) + " -> n" + std::to_string(child) + " [label=\"" + names[i] + "\"];\n";
      }
    }
    return id;
  };
  walk(walk, t);
  return out + "}\n";
}

std::string render_dot(const Pcdd& p) {
  require_valid(p);
  static const char* palette[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d", "#666666"};
  std::string out = "digraph pcdd {\n  // " + format(p) + "\n";
  if (p.is_empty()) return out + "  // empty PCDD\n}\n";
  const auto& flag = p.flag_chain();
  for (std::size_t c = 0; c < p.chains().size(); ++c) {
    out += "  // chain " + std::to_string(c) + ":";
    for (int v : p.chains()[c]) out += " " + std::to_string(v);
    if (static_cast<int>(c) == p.flag()) out += " (flag)";
    out += "\n";
  }
  for (int v = 0; v < p.size(); ++v) {
    out += "  v" + std::to_string(v) + " [label=\"" + std::to_string(v) + "\"";
    if (v == flag.front()) out += ", shape=doublecircle";
    if (flag.size() == 1 && v == flag.front()) out += ", xlabel=\"flag\"";
    out += "];\n";
  }
  for (std::size_t c = 0; c < p.chains().size(); ++c) {
    const auto& chain = p.chains()[c];
    const bool is_flag = static_cast<int>(c) == p.flag();
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      out += "  v" + std::to_string(chain[i]) + " -> v" + std::to_string(chain[i + 1]) + " [color=\"" +
             palette[c % 8] + "\"" + (is_flag ? ", penwidth=3, label=\"flag\"" : "") + "];\n";
    }
  }
  return out + "}\n";
}

}  // namespace catmirror
