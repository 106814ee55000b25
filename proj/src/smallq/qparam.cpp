#include "smallq/qparam.hpp"

#include <numeric>

#include "smallq/errors.hpp"

namespace smallq {

QuantumParameter QuantumParameter::from_order(const CartanDatum& datum, long n) {
  std::vector<long> orders(datum.components().size(), n);
  return from_orders(datum, orders);
}

QuantumParameter QuantumParameter::from_orders(const CartanDatum& datum,
                                               const std::vector<long>& orders) {
  if (orders.size() != datum.components().size())
    throw InputError("one order per component expected");
  long ambient = 1;
  for (long n : orders) {
    if (n < 1) throw InputError("orders must be positive");
    ambient = lcm(ambient, n);
  }
  QuantumParameter p;
  p.ambient_order_ = ambient;
  for (long n : orders) p.exponents_.push_back(ambient / n);
  return p;
}

QuantumParameter QuantumParameter::from_exponents(const CartanDatum& datum,
                                                  long ambient,
                                                  const std::vector<long>& e) {
  if (e.size() != datum.components().size())
    throw InputError("one exponent per component expected");
  if (ambient < 1) throw InputError("ambient order must be positive");
  QuantumParameter p;
  p.ambient_order_ = ambient;
  for (long x : e) p.exponents_.push_back(((x % ambient) + ambient) % ambient);
  return p;
}

RootOfUnity QuantumParameter::q_i(int component) const {
  return RootOfUnity(ambient_order_, exponents_[component]);
}

RootOfUnity QuantumParameter::q_root(const CartanDatum& datum,
                                     const Root& gamma) const {
  int comp = -1;
  for (int i = 0; i < datum.rank(); ++i)
    if (gamma.q_coords[i] != 0) {
      comp = datum.component_of(i);
      break;
    }
  if (comp < 0) throw InternalError("q_root of zero root");
  return q_i(comp).pow(gamma.d);
}

Cyclotomic QuantumParameter::q_root_value(const CartanDatum& datum,
                                          const Root& gamma) const {
  return q_root(datum, gamma).to_cyclotomic(ambient_order_);
}

long QuantumParameter::l_value(const CartanDatum& datum, const Root& gamma) const {
  return unit_order(q_root(datum, gamma).pow(2));
}

long QuantumParameter::l_simple(const CartanDatum& datum, int i) const {
  return unit_order(q_i(datum.component_of(i)).pow(2 * datum.d(i)));
}

long QuantumParameter::l_i(const CartanDatum& datum, int component) const {
  // l at a short root of the component (d = 1 there).
  (void)datum;
  return unit_order(q_i(component).pow(2));
}

long QuantumParameter::l_prime_i(const CartanDatum& datum, int component) const {
  long m = 0;
  for (int i = 0; i < datum.rank(); ++i) {
    if (datum.component_of(i) != component) continue;
    long l = l_simple(datum, i);
    m = (m == 0) ? l : std::min(m, l);
  }
  return m;
}

std::vector<long> root_coords(const CartanDatum& datum, const Weight& nu) {
  // Solve A c = nu over Q and require integrality.
  int n = datum.rank();
  Matrix<Rational> a = to_rational(datum.cartan_matrix());
  Matrix<Rational> rhs(n, std::vector<Rational>(1));
  for (int i = 0; i < n; ++i) rhs[i][0] = Rational(nu[i]);
  Matrix<Rational> c = solve_linear(a, rhs);
  std::vector<long> out(n);
  for (int i = 0; i < n; ++i) {
    if (c[i][0].get_den() != 1)
      throw OutsideRootLattice("weight " + weight_str(nu) +
                               " is not in the root lattice");
    out[i] = (long)c[i][0].get_num().get_si();
  }
  return out;
}

RootOfUnity QuantumParameter::bicharacter_unit(const CartanDatum& datum,
                                               const Weight& nu,
                                               const Weight& lam) const {
  std::vector<long> c = root_coords(datum, nu);
  // q(nu, lam) = prod_j q_{i(j)}^{c_j (alpha_j, lam)} with (alpha_j, lam) =
  // d_j * lam_j in P-coordinates.
  long e = 0;
  for (int j = 0; j < datum.rank(); ++j) {
    if (c[j] == 0) continue;
    long pair = datum.d(j) * lam[j];
    long contrib = exponents_[datum.component_of(j)] * c[j] % ambient_order_ * pair;
    e = (e + contrib) % ambient_order_;
  }
  return RootOfUnity(ambient_order_, e);
}

Cyclotomic QuantumParameter::bicharacter_eval(const CartanDatum& datum,
                                              const Weight& nu,
                                              const Weight& lam) const {
  return bicharacter_unit(datum, nu, lam).to_cyclotomic(ambient_order_);
}

Cyclotomic QuantumParameter::gram_eval(const Weight& lam, const Weight& mu) const {
  if (!gram_)
    throw MissingGramExtension("bicharacter on P x P requires a Gram extension");
  const auto& g = *gram_;
  Rational acc(0);
  for (size_t i = 0; i < lam.size(); ++i)
    for (size_t j = 0; j < mu.size(); ++j)
      acc += Rational(lam[i]) * g[i][j] * Rational(mu[j]);
  Rational scaled = acc * Rational(ambient_order_);
  if (scaled.get_den() != 1)
    throw MissingGramExtension("Gram extension is not integral at order N");
  Integer e = scaled.get_num() % ambient_order_;
  return RootOfUnity(ambient_order_, e.get_si()).to_cyclotomic(ambient_order_);
}

}  // namespace smallq
