#pragma once

#include "smallq/laurent.hpp"

namespace smallq {

// Rational function in v, stored in canonical form: denominator is an
// ordinary polynomial (min_exp 0) that is monic, and gcd(num, den) = 1.
// With that normalization equality is component-wise equality.
class RationalFunction {
public:
  RationalFunction() : num_(), den_(Rational(1)) {}
  RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}
  RationalFunction(const LaurentPoly& p) : num_(p), den_(Rational(1)) {}
  RationalFunction(LaurentPoly num, LaurentPoly den);

  static RationalFunction v(long exp = 1) {
    return RationalFunction(LaurentPoly::v(exp));
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  RationalFunction inv() const;
  RationalFunction bar() const;  // v -> v^{-1}
  RationalFunction pow(long n) const;  // any sign

  std::string str() const;

private:
  LaurentPoly num_;
  LaurentPoly den_;
};

// The Laurent polynomial equal to f, if one exists; throws NotLaurent.
LaurentPoly clear_denominators(const RationalFunction& f);

}  // namespace smallq
