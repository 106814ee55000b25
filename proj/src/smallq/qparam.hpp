#pragma once

#include <optional>

#include "smallq/cyclotomic.hpp"
#include "smallq/lattice.hpp"
#include "smallq/linalg.hpp"
#include "smallq/rootdata.hpp"

namespace smallq {

// Torsion quantum parameter: one scalar parameter q_i = zeta_N^{e_i} per
// component of the Cartan datum.  Everything the lattice layer computes
// depends only on the restriction of the bicharacter q to Q x X, which these
// scalars determine; an optional Gram extension covers the full P x P form.
class QuantumParameter {
public:
  // All components at a primitive n-th root (ambient order n, exponent 1).
  static QuantumParameter from_order(const CartanDatum& datum, long n);
  // Per-component orders n_i; ambient order lcm, q_i = zeta_N^{N/n_i}.
  static QuantumParameter from_orders(const CartanDatum& datum,
                                      const std::vector<long>& orders);
  // Explicit exponents at a given ambient order.
  static QuantumParameter from_exponents(const CartanDatum& datum, long ambient,
                                         const std::vector<long>& exponents);

  long ambient_order() const { return ambient_order_; }
  const std::vector<long>& exponents() const { return exponents_; }

  RootOfUnity q_i(int component) const;
  // q_gamma = q_i^{d_gamma} for gamma in component i.
  RootOfUnity q_root(const CartanDatum& datum, const Root& gamma) const;
  Cyclotomic q_root_value(const CartanDatum& datum, const Root& gamma) const;

  // l_gamma = ord(q_i^{2 d_gamma}) = ord(q(gamma,gamma)).
  long l_value(const CartanDatum& datum, const Root& gamma) const;
  long l_simple(const CartanDatum& datum, int simple_index) const;
  // l_i = l at a short root of the component; l'_i = min over simple roots.
  long l_i(const CartanDatum& datum, int component) const;
  long l_prime_i(const CartanDatum& datum, int component) const;

  // q(nu, lam) for nu in the root lattice (P-coordinates), lam in X.
  // Exponent-level value; OutsideRootLattice when nu is not in Q.
  RootOfUnity bicharacter_unit(const CartanDatum& datum, const Weight& nu,
                               const Weight& lam) const;
  Cyclotomic bicharacter_eval(const CartanDatum& datum, const Weight& nu,
                              const Weight& lam) const;

  // Optional full P x P extension: q(lam,mu) = zeta_N^{N * lam^T G mu}.
  void set_gram_extension(const Matrix<Rational>& g) { gram_ = g; }
  bool has_gram_extension() const { return gram_.has_value(); }
  Cyclotomic gram_eval(const Weight& lam, const Weight& mu) const;

private:
  long ambient_order_ = 1;
  std::vector<long> exponents_;
  std::optional<Matrix<Rational>> gram_;
};

// nu (P-coordinates) rewritten in simple-root coordinates; throws
// OutsideRootLattice unless nu is in Q.
std::vector<long> root_coords(const CartanDatum& datum, const Weight& nu);

}  // namespace smallq
