#include "catmirror/chords.hpp"

#include <stdexcept>
#include <string>

namespace catmirror {

bool chords_cross(int a, int b, int c, int d, int cycle_len) {
  for (int v : {a, b, c, d}) {
    if (v < 1 || v > cycle_len) throw std::invalid_argument("label " + std::to_string(v) + " out of range");
  }
  if (a == b || c == d) throw std::invalid_argument("degenerate chord");
  if (a == c || a == d || b == c || b == d) throw std::invalid_argument("chords share an endpoint");
  return chords_cross_unchecked(a, b, c, d);
}

}  // namespace catmirror
