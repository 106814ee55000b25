#include "smallq/ratfun.hpp"

#include "smallq/errors.hpp"

namespace smallq {

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den) {
  if (den.is_zero()) throw InternalError("RationalFunction: zero denominator");
  if (num.is_zero()) {
    num_ = LaurentPoly();
    den_ = LaurentPoly(Rational(1));
    return;
  }
  // Push the denominator's monomial content into the numerator, then cancel
  // the polynomial gcd and make the denominator monic.
  long sd = den.min_exp();
  den = den.shifted(-sd);
  num = num.shifted(-sd);
  LaurentPoly g = laurent_gcd(num, den);
  if (!g.is_one()) {
    num = num.divide_exact(g);
    den = den.divide_exact(g);
  }
  Rational lead = den.leading_coeff();
  if (lead != 1) {
    Rational inv_lead = Rational(1) / lead;
    num = num * inv_lead;
    den = den * inv_lead;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  if (is_zero() || o.is_zero()) return RationalFunction();
  // Cross-cancel before multiplying to keep degrees down.
  RationalFunction a(num_, o.den_);
  RationalFunction b(o.num_, den_);
  RationalFunction r;
  r.num_ = a.num_ * b.num_;
  r.den_ = a.den_ * b.den_;
  return r;
}

RationalFunction RationalFunction::inv() const {
  if (is_zero()) throw InternalError("inverse of zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  return *this * o.inv();
}

RationalFunction RationalFunction::bar() const {
  if (is_zero()) return *this;
  return RationalFunction(num_.bar(), den_.bar());
}

RationalFunction RationalFunction::pow(long n) const {
  RationalFunction base = n < 0 ? inv() : *this;
  unsigned long k = n < 0 ? -(unsigned long)n : (unsigned long)n;
  RationalFunction r(Rational(1));
  for (; k > 0; k >>= 1) {
    if (k & 1) r = r * base;
    base = base * base;
  }
  return r;
}

std::string RationalFunction::str() const {
  if (is_laurent()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

LaurentPoly clear_denominators(const RationalFunction& f) {
  if (!f.is_laurent())
    throw NotLaurent("rational function has denominator " + f.den().str());
  return f.num();
}

}  // namespace smallq
