#pragma once

#include <vector>

#include "smallq/ratfun.hpp"

namespace smallq {

long euler_phi(long n);

// Coefficients of the N-th cyclotomic polynomial, degree phi(N), index = power.
const std::vector<Rational>& cyclotomic_polynomial(long n);

// Element of Q(zeta_N), reduced modulo the N-th cyclotomic polynomial, so the
// coordinate vector has length phi(N) and equality is coordinate equality.
class Cyclotomic {
public:
  Cyclotomic() : order_(1), c_(1, Rational(0)) {}  // zero in Q(zeta_1) = Q
  Cyclotomic(int c) : order_(1), c_(1, Rational(c)) {}  // rational constant in Q
  Cyclotomic(long order, const Rational& c);       // rational constant
  static Cyclotomic zeta(long order, long exponent = 1);

  // Rewrites both arguments over a common ambient order (their lcm).
  static void unify(Cyclotomic& a, Cyclotomic& b);

  long order() const { return order_; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;
  bool is_rational(Rational* out = nullptr) const;

  Cyclotomic operator-() const;
  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator/(const Cyclotomic& o) const { return *this * o.inv(); }
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }
  bool operator<(const Cyclotomic& o) const;  // arbitrary total order (for maps)

  Cyclotomic inv() const;
  Cyclotomic pow(long n) const;  // any sign

  // Image under Q(zeta_N) -> Q(zeta_M), zeta_N -> zeta_M^{M/N}; requires N | M.
  Cyclotomic embed(long to_order) const;

  std::string str() const;

private:
  // Reduce a raw coefficient vector (any length) mod the cyclotomic polynomial.
  static Cyclotomic from_raw(long order, std::vector<Rational> raw);

  long order_;
  std::vector<Rational> c_;
};

// Exact evaluation at v = q.
Cyclotomic specialize(const LaurentPoly& p, const Cyclotomic& q);
// Throws DenominatorVanishes when the denominator evaluates to zero.
Cyclotomic specialize(const RationalFunction& f, const Cyclotomic& q);

// Root of unity zeta_N^e tracked at the exponent level.
struct RootOfUnity {
  long order;     // N
  long exponent;  // modulo N

  RootOfUnity(long n, long e) : order(n), exponent(((e % n) + n) % n) {}
  Cyclotomic to_cyclotomic(long ambient_order) const;
  RootOfUnity pow(long k) const { return RootOfUnity(order, exponent * k); }
  bool operator==(const RootOfUnity& o) const;
};

// Multiplicative order N / gcd(N, e).
long unit_order(const RootOfUnity& u);

}  // namespace smallq
