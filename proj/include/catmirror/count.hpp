#pragma once

#include <gmpxx.h>

namespace catmirror {

/// Exact non-negative counts; no floating point anywhere in counting.
using CountValue = mpz_class;
/// Exact rationals, used where a printed closed form may not be integral.
using Rational = mpq_class;

CountValue binomial(unsigned long n, unsigned long k);

/// Generalized Catalan number C(3(n-1), n-1) / (2n-1); n >= 1.
CountValue nu(int n);

}  // namespace catmirror
