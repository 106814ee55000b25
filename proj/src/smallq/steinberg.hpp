#pragma once

#include "smallq/qparam.hpp"

namespace smallq {

// Restricted weights: 0 <= (alpha, lam)/d_alpha < l_alpha at every simple
// root, i.e. 0 <= lam_j < l_j in fundamental-weight coordinates.
bool is_restricted(const CartanDatum& datum, const QuantumParameter& p,
                   const Weight& lam);
std::vector<Weight> enumerate_restricted(const CartanDatum& datum,
                                         const QuantumParameter& p);

// rho_l = (1/2) sum_{gamma > 0} (l_gamma - 1) gamma; always a restricted
// element of P.  The checked variant additionally requires membership in the
// character lattice x.
Weight rho_l(const CartanDatum& datum, const QuantumParameter& p);
Weight rho_l_in(const CartanDatum& datum, const QuantumParameter& p,
                const Lattice& x);

struct SteinbergSplit {
  Weight lambda0;  // restricted part, in P_l
  Weight lambda1;  // Frobenius part, in P*
};

// Unique decomposition lam = lam_0 + lam_1 with lam_0 in P_l, lam_1 in P*
// (simply-connected lattice); coefficient reduction mod l_alpha.
SteinbergSplit steinberg_decompose(const CartanDatum& datum,
                                   const QuantumParameter& p, const Weight& lam);

// Exhaustive box-search oracle for the decomposition (test use).
std::vector<SteinbergSplit> steinberg_decompose_by_search(
    const CartanDatum& datum, const QuantumParameter& p, const Weight& lam);

// Label of the dual simple: -w_0(lam).
Weight dual_label(const CartanDatum& datum, const Weight& lam);

}  // namespace smallq
