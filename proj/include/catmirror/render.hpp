#pragma once

#include <string>

#include "catmirror/dissection.hpp"
#include "catmirror/nct.hpp"
#include "catmirror/pcdd.hpp"
#include "catmirror/ternary.hpp"

namespace catmirror {

struct SvgOptions {
  int size_px = 400;
  bool labels = true;
};

std::string render_svg(const NctTree& t, const SvgOptions& opt = {});
std::string render_svg(const QuadDissection& q, const SvgOptions& opt = {});
/// Dissection in blue with a tree on the odd vertices (green) and one on the
/// even vertices (red); both trees must have q.half_size() vertices.
std::string render_overlay_svg(const QuadDissection& q, const NctTree& odd, const NctTree& even,
                               const SvgOptions& opt = {});

std::string render_dot(const TernaryTree& t);
std::string render_dot(const Pcdd& p);

}  // namespace catmirror
