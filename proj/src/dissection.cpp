#include "catmirror/dissection.hpp"

#include <algorithm>
#include <string>

#include "catmirror/chords.hpp"

namespace catmirror {

QuadDissection::QuadDissection(int n, std::vector<Edge> diagonals) : n_(n), diagonals_(std::move(diagonals)) {
  for (auto& d : diagonals_) d = make_edge(d.a, d.b);
  std::sort(diagonals_.begin(), diagonals_.end());
}

std::vector<std::vector<int>> split_faces(int polygon_size, const std::vector<Edge>& diagonals) {
  std::vector<std::vector<int>> faces;
  if (polygon_size < 1) return faces;
  faces.emplace_back();
  for (int v = 1; v <= polygon_size; ++v) faces.back().push_back(v);
  // Non-crossing diagonals always lie inside a single current face.
  for (const auto& d : diagonals) {
    for (std::size_t f = 0; f < faces.size(); ++f) {
      auto& face = faces[f];
      auto ia = std::find(face.begin(), face.end(), d.a);
      auto ib = std::find(face.begin(), face.end(), d.b);
      if (ia == face.end() || ib == face.end()) continue;
      std::vector<int> inner(ia, ib + 1);
      std::vector<int> outer(ib, face.end());
      outer.insert(outer.end(), face.begin(), ia + 1);
      face = std::move(inner);
      std::sort(outer.begin(), outer.end());
      faces.push_back(std::move(outer));
      break;
    }
  }
  for (auto& face : faces) std::sort(face.begin(), face.end());
  std::sort(faces.begin(), faces.end());
  return faces;
}

ValidationReport validate(const QuadDissection& q) {
  ValidationReport report;
  const int n = q.half_size();
  if (n < 1) {
    report.add("half size must be at least 1");
    return report;
  }
  const int len = q.polygon_size();
  const auto& ds = q.diagonals();
  const std::size_t expected = n <= 2 ? 0 : static_cast<std::size_t>(n - 2);
  if (ds.size() != expected) {
    report.add("expected " + std::to_string(expected) + " diagonals, found " + std::to_string(ds.size()));
  }
  bool labels_ok = true;
  for (const auto& d : ds) {
    const std::string name = std::to_string(d.a) + "-" + std::to_string(d.b);
    if (d.a < 1 || d.b > len || d.a == d.b) {
      report.add("diagonal " + name + " out of range");
      labels_ok = false;
      continue;
    }
    if (d.b - d.a == 1 || (d.a == 1 && d.b == len)) {
      report.add("diagonal " + name + " is a polygon side");
      labels_ok = false;
    }
    if ((d.a + d.b) % 2 == 0) report.add("same-parity diagonal " + name);
  }
  if (std::adjacent_find(ds.begin(), ds.end()) != ds.end()) {
    report.add("duplicate diagonal");
    labels_ok = false;
  }
  if (!labels_ok) return report;

  bool crossing = false;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    for (std::size_t j = i + 1; j < ds.size(); ++j) {
      const auto& e = ds[i];
      const auto& f = ds[j];
      if (e.a == f.a || e.a == f.b || e.b == f.a || e.b == f.b) continue;
      if (chords_cross_unchecked(e.a, e.b, f.a, f.b)) {
        crossing = true;
        report.add("crossing diagonals " + std::to_string(e.a) + "-" + std::to_string(e.b) + " and " +
                   std::to_string(f.a) + "-" + std::to_string(f.b));
      }
    }
  }
  if (crossing || n == 1) return report;
  for (const auto& face : split_faces(len, ds)) {
    if (face.size() != 4) {
      report.add("cell with " + std::to_string(face.size()) + " corners (not quadrangular)");
    }
  }
  return report;
}

std::vector<Cell> cells(const QuadDissection& q) {
  require_valid(q);
  std::vector<Cell> out;
  if (q.half_size() == 1) return out;
  for (const auto& face : split_faces(q.polygon_size(), q.diagonals())) {
    out.push_back({face[0], face[1], face[2], face[3]});
  }
  return out;
}

}  // namespace catmirror
