#include "smallq/cyclotomic.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <mutex>
#include <sstream>

#include "smallq/errors.hpp"

namespace smallq {

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// Dense ordinary-polynomial division with exact rational arithmetic,
// used only for building cyclotomic polynomials.
std::vector<Rational> poly_div_exact(const std::vector<Rational>& a,
                                     const std::vector<Rational>& b) {
  std::vector<Rational> r = a;
  if (b.empty() || smallq::is_zero(b.back()))
    throw InternalError("poly_div_exact: bad divisor");
  long db = (long)b.size() - 1;
  long dq = (long)r.size() - 1 - db;
  if (dq < 0) throw InternalError("poly_div_exact: degree mismatch");
  std::vector<Rational> q(dq + 1, Rational(0));
  for (long i = dq; i >= 0; --i) {
    Rational c = r[i + db] / b[db];
    q[i] = c;
    if (!smallq::is_zero(c))
      for (long j = 0; j <= db; ++j) r[i + j] -= c * b[j];
  }
  for (auto& c : r)
    if (!smallq::is_zero(c)) throw InternalError("poly_div_exact: remainder");
  return q;
}

std::map<long, std::vector<Rational>>& cyclo_cache() {
  static std::map<long, std::vector<Rational>> cache;
  return cache;
}
std::mutex cyclo_mutex;

}  // namespace

const std::vector<Rational>& cyclotomic_polynomial(long n) {
  std::lock_guard<std::mutex> lock(cyclo_mutex);
  auto& cache = cyclo_cache();
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed recursively.
  std::function<const std::vector<Rational>&(long)> get =
      [&](long m) -> const std::vector<Rational>& {
    auto jt = cache.find(m);
    if (jt != cache.end()) return jt->second;
    std::vector<Rational> num(m + 1, Rational(0));
    num[0] = -1;
    num[m] = 1;
    for (long d = 1; d < m; ++d)
      if (m % d == 0) num = poly_div_exact(num, get(d));
    return cache.emplace(m, std::move(num)).first->second;
  };
  return get(n);
}

Cyclotomic::Cyclotomic(long order, const Rational& c)
    : order_(order), c_(euler_phi(order), Rational(0)) {
  c_[0] = c;
}

Cyclotomic Cyclotomic::from_raw(long order, std::vector<Rational> raw) {
  const auto& phi_poly = cyclotomic_polynomial(order);
  long deg = (long)phi_poly.size() - 1;  // = euler_phi(order)
  // Reduce from the top using x^deg = -(phi_poly[0..deg-1]).
  for (long i = (long)raw.size() - 1; i >= deg; --i) {
    Rational c = raw[i];
    if (smallq::is_zero(c)) continue;
    raw[i] = 0;
    for (long j = 0; j < deg; ++j) raw[i - deg + j] -= c * phi_poly[j];
  }
  Cyclotomic out;
  out.order_ = order;
  raw.resize(deg, Rational(0));
  out.c_ = std::move(raw);
  return out;
}

Cyclotomic Cyclotomic::zeta(long order, long exponent) {
  exponent = ((exponent % order) + order) % order;
  std::vector<Rational> raw(exponent + 1, Rational(0));
  raw[exponent] = 1;
  return from_raw(order, std::move(raw));
}

bool Cyclotomic::is_zero() const {
  for (auto& c : c_)
    if (!smallq::is_zero(c)) return false;
  return true;
}

bool Cyclotomic::is_rational(Rational* out) const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (!smallq::is_zero(c_[i])) return false;
  if (out) *out = c_[0];
  return true;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

void Cyclotomic::unify(Cyclotomic& a, Cyclotomic& b) {
  if (a.order_ == b.order_) return;
  long n = lcm(a.order_, b.order_);
  if (n != a.order_) a = a.embed(n);
  if (n != b.order_) b = b.embed(n);
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  if (order_ != o.order_) {
    Cyclotomic a = *this, b = o;
    unify(a, b);
    return a + b;
  }
  Cyclotomic r = *this;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  return *this + (-o);
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (order_ != o.order_) {
    Cyclotomic a = *this, b = o;
    unify(a, b);
    return a * b;
  }
  size_t n = c_.size();
  std::vector<Rational> raw(2 * n - 1, Rational(0));
  for (size_t i = 0; i < n; ++i) {
    if (smallq::is_zero(c_[i])) continue;
    for (size_t j = 0; j < n; ++j) {
      if (smallq::is_zero(o.c_[j])) continue;
      raw[i + j] += c_[i] * o.c_[j];
    }
  }
  return from_raw(order_, std::move(raw));
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (order_ != o.order_) {
    Cyclotomic a = *this, b = o;
    unify(a, b);
    return a == b;
  }
  return c_ == o.c_;
}

bool Cyclotomic::operator<(const Cyclotomic& o) const {
  if (order_ != o.order_) {
    Cyclotomic a = *this, b = o;
    unify(a, b);
    return a < b;
  }
  for (size_t i = 0; i < c_.size(); ++i) {
    int s = cmp(c_[i], o.c_[i]);
    if (s != 0) return s < 0;
  }
  return false;
}

Cyclotomic Cyclotomic::inv() const {
  if (is_zero()) throw InternalError("inverse of zero cyclotomic");
  // Extended Euclid for gcd(this, Phi_N) = 1 in Q[x].
  const auto& phi_poly = cyclotomic_polynomial(order_);
  LaurentPoly a, m;
  for (size_t i = 0; i < c_.size(); ++i) a.set_coeff((long)i, c_[i]);
  for (size_t i = 0; i < phi_poly.size(); ++i) m.set_coeff((long)i, phi_poly[i]);
  // Invariants: r0 = s0*a mod m, r1 = s1*a mod m.
  LaurentPoly r0 = m, r1 = a;
  LaurentPoly s0, s1{Rational(1)};
  while (!r1.is_zero()) {
    LaurentPoly q, r;
    poly_divmod(r0, r1, q, r);
    LaurentPoly s2 = s0 - q * s1;
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s2;
  }
  // r0 is a nonzero constant (Phi_N is irreducible over Q).
  if (!r0.is_constant()) throw InternalError("cyclotomic inverse: gcd not constant");
  LaurentPoly s = s0 * (Rational(1) / r0.coeff(0));
  std::vector<Rational> raw;
  if (!s.is_zero()) {
    raw.assign(s.max_exp() + 1, Rational(0));
    for (auto& [e, c] : s.coeffs()) raw[e] = c;
  }
  return from_raw(order_, std::move(raw));
}

Cyclotomic Cyclotomic::pow(long n) const {
  Cyclotomic base = n < 0 ? inv() : *this;
  unsigned long k = n < 0 ? -(unsigned long)n : (unsigned long)n;
  Cyclotomic r(order_, 1);
  for (; k > 0; k >>= 1) {
    if (k & 1) r = r * base;
    base = base * base;
  }
  return r;
}

Cyclotomic Cyclotomic::embed(long to_order) const {
  if (to_order == order_) return *this;
  if (to_order % order_ != 0)
    throw InternalError("Cyclotomic::embed: target order not a multiple");
  Cyclotomic z = Cyclotomic::zeta(to_order, to_order / order_);
  Cyclotomic acc(to_order, 0), p(to_order, 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (!smallq::is_zero(c_[i])) acc += p * Cyclotomic(to_order, c_[i]);
    if (i + 1 < c_.size()) p = p * z;
  }
  return acc;
}

std::string Cyclotomic::str() const {
  Rational r;
  if (is_rational(&r)) return r.get_str();
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (smallq::is_zero(c_[i])) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i].get_str();
    if (i > 0) os << "*z" << order_ << "^" << i;
  }
  os << ")";
  return os.str();
}

Cyclotomic specialize(const LaurentPoly& p, const Cyclotomic& q) {
  Cyclotomic acc(q.order(), 0);
  for (auto& [e, c] : p.coeffs()) acc += q.pow(e) * Cyclotomic(q.order(), c);
  return acc;
}

Cyclotomic specialize(const RationalFunction& f, const Cyclotomic& q) {
  Cyclotomic den = specialize(f.den(), q);
  if (den.is_zero())
    throw DenominatorVanishes("denominator " + f.den().str() +
                              " vanishes at " + q.str());
  return specialize(f.num(), q) / den;
}

Cyclotomic RootOfUnity::to_cyclotomic(long ambient_order) const {
  if (ambient_order % order != 0)
    throw InternalError("RootOfUnity: ambient order not a multiple");
  return Cyclotomic::zeta(ambient_order, (ambient_order / order) * exponent);
}

bool RootOfUnity::operator==(const RootOfUnity& o) const {
  // Compare as actual roots of unity, via the common ambient order.
  long n = lcm((long)order, (long)o.order);
  return (n / order) * exponent % n == (n / o.order) * o.exponent % n;
}

long unit_order(const RootOfUnity& u) {
  long g = std::gcd(u.order, u.exponent);
  return u.order / g;
}

}  // namespace smallq
