#pragma once

#include "smallq/cyclotomic.hpp"

namespace smallq {

// Generic quantum combinatorics in the parameter v^d (d = relative root
// length), as Laurent polynomials: [n] = (v^{dn} - v^{-dn})/(v^d - v^{-d}).
LaurentPoly quantum_integer_generic(long n, long d = 1);
LaurentPoly quantum_factorial_generic(long n, long d = 1);
// Gaussian binomial [m choose t] in v^d, via the Pascal-type recurrence
// [m t] = v^{d(m-t)} [m-1 t-1] + v^{-dt} [m-1 t]; always a Laurent polynomial.
LaurentPoly gauss_binom_generic(long m, long t, long d = 1);

// Specializations at a cyclotomic unit q.  Quantum integers at q = +-1 take
// the limit value n*q^{n-1} (the divided-power convention).
Cyclotomic quantum_integer(long n, const Cyclotomic& q);
Cyclotomic quantum_factorial(long n, const Cyclotomic& q);
// Computed over the generic field and then specialized, so the value is
// defined even when intermediate factorials vanish at q.
Cyclotomic gauss_binom(long m, long t, const Cyclotomic& q);

}  // namespace smallq
