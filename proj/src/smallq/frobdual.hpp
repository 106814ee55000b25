#pragma once

#include <optional>

#include "smallq/qparam.hpp"

namespace smallq {

// The lattice shadow of Lusztig's quantum Frobenius: X*, lQ, the dual root
// datum, and epsilon-parameters.
struct DualComponent {
  char letter;                  // dual type letter
  int rank;
  std::string relation;         // "same" | "langlands_dual"
  int epsilon;                  // dual scalar parameter, +1 or -1
  Rational scale_factor;        // 1/(l_i l'_i) normalizing (-,-)_l
};

struct DualDatum {
  Lattice x_star;               // {lam in X : (alpha,lam) in l_i Z}
  Lattice lq;                   // Z{l_alpha alpha}
  Lattice p_star;               // Z{l_alpha omega_alpha}
  IntMat dual_simple_roots;     // row j = alpha_j^* = l_alpha_j alpha_j (P-coords)
  IntMat dual_cartan;           // <alpha^*, beta^*>_l
  std::vector<long> dual_d;     // relative lengths of the dual simple roots
  std::vector<int> epsilon_per_simple;  // q_alpha^{l_alpha^2} = +-1
  std::vector<DualComponent> dual_components;
  Integer index_x_xstar;        // [X : X*]
};

Lattice compute_x_star(const CartanDatum& datum, const QuantumParameter& p,
                       const Lattice& x);
Lattice compute_lq(const CartanDatum& datum, const QuantumParameter& p);

// Asserts lQ <= X* and W-stability of both lattices; throws InternalError on
// violation (the paper's Lemma guarantees both).
void check_stability(const CartanDatum& datum, const Lattice& x_star,
                     const Lattice& lq);

// Full dual datum; x is the character lattice (Q <= x <= P required).
DualDatum compute_dual_datum(const CartanDatum& datum, const QuantumParameter& p,
                             const Lattice& x);

// Generator-level Frobenius map on divided-power symbols:
// E_alpha^{(n)} 1_lam -> e_alpha^{(n/l_alpha)} 1_lam when l_alpha | n and
// lam in X*, otherwise zero (empty optional).
struct FrobImage {
  char kind;     // 'E' or 'F'
  long power;    // n / l_alpha
  Weight weight;
};
std::optional<FrobImage> frobenius_generator_image(
    const CartanDatum& datum, const QuantumParameter& p, const Lattice& x,
    char kind, int alpha_index, long n, const Weight& lam);

bool is_quasi_classical_weight(const CartanDatum& datum,
                               const QuantumParameter& p, const Lattice& x,
                               const Weight& lam);

}  // namespace smallq
