#include "smallq/qcombinatorics.hpp"

#include "smallq/errors.hpp"

namespace smallq {

LaurentPoly quantum_integer_generic(long n, long d) {
  // [n] = v^{d(n-1)} + v^{d(n-3)} + ... + v^{-d(n-1)}; odd in n.
  bool neg = n < 0;
  if (neg) n = -n;
  LaurentPoly p;
  for (long k = 0; k < n; ++k) p.set_coeff(d * (n - 1 - 2 * k), 1);
  return neg ? -p : p;
}

LaurentPoly quantum_factorial_generic(long n, long d) {
  if (n < 0) throw InternalError("quantum_factorial_generic: negative n");
  LaurentPoly p{Rational(1)};
  for (long s = 2; s <= n; ++s) p = p * quantum_integer_generic(s, d);
  return p;
}

LaurentPoly gauss_binom_generic(long m, long t, long d) {
  if (m < 0 || t < 0 || t > m)
    throw InternalError("gauss_binom_generic: arguments out of range");
  // Row-by-row Pascal recurrence.
  std::vector<LaurentPoly> row{LaurentPoly(Rational(1))};
  for (long i = 1; i <= m; ++i) {
    std::vector<LaurentPoly> next(std::min(i, t) + 1);
    for (long j = 0; j < (long)next.size(); ++j) {
      LaurentPoly val;
      if (j < (long)row.size()) val += row[j].shifted(-d * j);          // v^{-dt}[m-1 t]
      if (j > 0 && j - 1 < (long)row.size())
        val += row[j - 1].shifted(d * (i - j));                         // v^{d(m-t)}[m-1 t-1]
      next[j] = val;
    }
    row = std::move(next);
  }
  return row[t];
}

Cyclotomic quantum_integer(long n, const Cyclotomic& q) {
  Rational r;
  if (q.is_rational(&r) && (r == 1 || r == -1)) {
    // Limit value n * q^{n-1}.
    return Cyclotomic(q.order(), Rational(n)) * q.pow(n - 1);
  }
  return specialize(quantum_integer_generic(n), q);
}

Cyclotomic quantum_factorial(long n, const Cyclotomic& q) {
  Cyclotomic acc(q.order(), 1);
  for (long s = 2; s <= n; ++s) acc *= quantum_integer(s, q);
  return acc;
}

Cyclotomic gauss_binom(long m, long t, const Cyclotomic& q) {
  return specialize(gauss_binom_generic(m, t), q);
}

}  // namespace smallq
