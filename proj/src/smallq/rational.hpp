#pragma once

#include <gmpxx.h>

#include <string>

namespace smallq {

// Exact rationals are GMP's mpq_class: canonical form (reduced, positive
// denominator) is maintained by the library itself.
using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& n) { return n.get_str(); }

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline long lcm(long a, long b) {
  if (a == 0 || b == 0) return 0;
  Integer l = lcm(Integer(a), Integer(b));
  return l.get_si();
}

}  // namespace smallq
