#ifndef CAYLEY_RATIONALS_HPP
#define CAYLEY_RATIONALS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cayley {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Int int_pow(long base, unsigned long e) { return int_pow(Int(base), e); }

inline Rat rat_pow(const Rat& base, unsigned long e) {
  Rat r = 1;
  Rat b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

// Serialized as "num/den" ("3" when the denominator is 1).
inline std::string rat_str(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline double rat_d(const Rat& q) { return q.get_d(); }

// Exact conversion; every double is a rational.
inline Rat rat_of_double(double x) {
  Rat r;
  mpq_set_d(r.get_mpq_t(), x);
  return r;
}

inline unsigned long euler_phi(unsigned long q) {
  unsigned long result = q, m = q;
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

inline unsigned long gcd_ul(unsigned long a, unsigned long b) {
  while (b) {
    unsigned long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

} // namespace cayley

#endif
