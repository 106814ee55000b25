#include "smallq/laurent.hpp"

#include <sstream>

#include "smallq/errors.hpp"

namespace smallq {

LaurentPoly::LaurentPoly(const Rational& c) {
  if (!smallq::is_zero(c)) coeffs_[0] = c;
}

LaurentPoly LaurentPoly::monomial(const Rational& c, long exp) {
  LaurentPoly p;
  if (!smallq::is_zero(c)) p.coeffs_[exp] = c;
  return p;
}

bool LaurentPoly::is_one() const {
  return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
         coeffs_.begin()->second == 1;
}

bool LaurentPoly::is_constant() const {
  return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

long LaurentPoly::min_exp() const {
  if (is_zero()) throw InternalError("min_exp of zero polynomial");
  return coeffs_.begin()->first;
}

long LaurentPoly::max_exp() const {
  if (is_zero()) throw InternalError("max_exp of zero polynomial");
  return coeffs_.rbegin()->first;
}

Rational LaurentPoly::coeff(long exp) const {
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::leading_coeff() const { return coeffs_.rbegin()->second; }

void LaurentPoly::set_coeff(long exp, const Rational& c) {
  if (smallq::is_zero(c))
    coeffs_.erase(exp);
  else
    coeffs_[exp] = c;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (auto& [e, c] : o.coeffs_) {
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
      coeffs_[e] = c;
    } else {
      it->second += c;
      if (smallq::is_zero(it->second)) coeffs_.erase(it);
    }
  }
  return *this;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  return *this + (-o);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (auto& [e1, c1] : coeffs_)
    for (auto& [e2, c2] : o.coeffs_) {
      long e = e1 + e2;
      auto it = r.coeffs_.find(e);
      if (it == r.coeffs_.end()) {
        Rational c = c1 * c2;
        if (!smallq::is_zero(c)) r.coeffs_[e] = c;
      } else {
        it->second += c1 * c2;
        if (smallq::is_zero(it->second)) r.coeffs_.erase(it);
      }
    }
  return r;
}

LaurentPoly LaurentPoly::operator*(const Rational& c) const {
  LaurentPoly r;
  if (smallq::is_zero(c)) return r;
  for (auto& [e, a] : coeffs_) r.coeffs_[e] = a * c;
  return r;
}

LaurentPoly LaurentPoly::shifted(long by) const {
  LaurentPoly r;
  for (auto& [e, c] : coeffs_) r.coeffs_[e + by] = c;
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  for (auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
  return r;
}

LaurentPoly LaurentPoly::pow(long n) const {
  if (n < 0) throw InternalError("negative power of LaurentPoly");
  LaurentPoly r{Rational(1)};
  LaurentPoly base = *this;
  for (; n > 0; n >>= 1) {
    if (n & 1) r = r * base;
    base = base * base;
  }
  return r;
}

void poly_divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q,
                 LaurentPoly& r) {
  if (b.is_zero()) throw InternalError("poly_divmod by zero");
  if (!a.is_zero() && a.min_exp() < 0) throw InternalError("poly_divmod: negative exponent");
  if (b.min_exp() < 0) throw InternalError("poly_divmod: negative exponent");
  q = LaurentPoly();
  r = a;
  long db = b.max_exp();
  Rational lb = b.leading_coeff();
  while (!r.is_zero() && r.max_exp() >= db) {
    long e = r.max_exp() - db;
    Rational c = r.leading_coeff() / lb;
    LaurentPoly t = LaurentPoly::monomial(c, e);
    q += t;
    r = r - t * b;
  }
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& d) const {
  if (d.is_zero()) throw InternalError("divide_exact by zero");
  if (is_zero()) return LaurentPoly();
  // Normalize both to ordinary polynomials, remembering the monomial shift.
  long sa = min_exp(), sd = d.min_exp();
  LaurentPoly q, r;
  poly_divmod(shifted(-sa), d.shifted(-sd), q, r);
  if (!r.is_zero()) throw InternalError("divide_exact: nonzero remainder");
  return q.shifted(sa - sd);
}

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return LaurentPoly();
  LaurentPoly x = a.is_zero() ? LaurentPoly() : a.shifted(-a.min_exp());
  LaurentPoly y = b.is_zero() ? LaurentPoly() : b.shifted(-b.min_exp());
  while (!y.is_zero()) {
    LaurentPoly q, r;
    poly_divmod(x, y, q, r);
    x = y;
    y = r.is_zero() ? r : r.shifted(-r.min_exp());
  }
  // Monic normalization.
  return x * (Rational(1) / x.leading_coeff());
}

std::string LaurentPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    Rational c = it->second;
    long e = it->first;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    Rational ac = abs(c);
    if (e == 0) {
      os << ac.get_str();
    } else {
      if (ac != 1) os << ac.get_str() << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace smallq
