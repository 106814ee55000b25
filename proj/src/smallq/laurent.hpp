#pragma once

#include <map>
#include <string>
#include <vector>

#include "smallq/rational.hpp"

namespace smallq {

// Laurent polynomial in the generic parameter v with rational coefficients.
// Invariant: no stored zero coefficients (so equality is map equality).
class LaurentPoly {
public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& c);     // constant
  static LaurentPoly monomial(const Rational& c, long exp);
  static LaurentPoly v(long exp = 1) { return monomial(1, exp); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return coeffs_.size() == 1; }
  bool is_constant() const;

  // Exponent range; both require a nonzero polynomial.
  long min_exp() const;
  long max_exp() const;

  Rational coeff(long exp) const;
  const std::map<long, Rational>& coeffs() const { return coeffs_; }
  Rational leading_coeff() const;  // coefficient at max_exp

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const Rational& c) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly shifted(long by) const;     // multiply by v^by
  LaurentPoly bar() const;                // v -> v^{-1}
  LaurentPoly pow(long n) const;          // n >= 0

  // Exact division; throws InternalError if the remainder is nonzero.
  LaurentPoly divide_exact(const LaurentPoly& d) const;

  std::string str(const std::string& var = "v") const;

  void set_coeff(long exp, const Rational& c);  // maintains the no-zero invariant

private:
  std::map<long, Rational> coeffs_;
};

inline LaurentPoly operator*(const Rational& c, const LaurentPoly& p) { return p * c; }

// Polynomial gcd of a, b viewed as ordinary polynomials after factoring out
// the content monomial; result is monic with min_exp 0 (gcd(0,0) = 0).
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Division with remainder of ordinary polynomials (min_exp >= 0 required):
// a = q*b + r with deg r < deg b.
void poly_divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q,
                 LaurentPoly& r);

}  // namespace smallq
