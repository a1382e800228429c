#include "catmirror/count.hpp"

#include <stdexcept>

namespace catmirror {

CountValue binomial(unsigned long n, unsigned long k) {
  CountValue out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

CountValue nu(int n) {
  if (n < 1) throw std::invalid_argument("nu(n) needs n >= 1");
  const auto m = static_cast<unsigned long>(n - 1);
  CountValue num = binomial(3 * m, m);
  CountValue den = 2 * n - 1;
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) throw std::logic_error("nu: inexact division");
  CountValue out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

}  // namespace catmirror
