#pragma once

namespace catmirror {

/// True iff the chords {a,b} and {c,d} of a labeled `cycle_len`-cycle interleave,
/// i.e. exactly one of c, d lies strictly between a and b in cyclic order.
/// Labels are 1-based. Shared endpoints or out-of-range labels throw std::invalid_argument.
bool chords_cross(int a, int b, int c, int d, int cycle_len);

/// Same predicate without argument checking; endpoints must be distinct and in range.
inline bool chords_cross_unchecked(int a, int b, int c, int d) noexcept {
  if (a > b) {
    int t = a;
    a = b;
    b = t;
  }
  const bool c_in = a < c && c < b;
  const bool d_in = a < d && d < b;
  return c_in != d_in;
}

}  // namespace catmirror
