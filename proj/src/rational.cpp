#include "capelli/rational.hpp"

#include <ostream>

namespace capelli {

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

Rat rat_factorial(int n) {
  if (n < 0) throw std::invalid_argument("rat_factorial: negative argument");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rat(mpq_class(f));
}

Rat rat_binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return Rat(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rat(mpq_class(b));
}

Rat rat_odd_double_factorial(int l) {
  if (l < 0) throw std::invalid_argument("rat_odd_double_factorial: negative argument");
  mpz_class p(1);
  for (int m = 2 * l - 1; m >= 1; m -= 2) p *= m;
  return Rat(mpq_class(p));
}

Rat rat_pow2(int k) {
  if (k < 0) throw std::invalid_argument("rat_pow2: negative argument");
  mpz_class p(1);
  p <<= k;
  return Rat(mpq_class(p));
}

}  // namespace capelli
