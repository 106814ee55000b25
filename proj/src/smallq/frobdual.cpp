#include "smallq/frobdual.hpp"

#include <numeric>

#include "smallq/errors.hpp"

namespace smallq {

Lattice compute_x_star(const CartanDatum& datum, const QuantumParameter& p,
                       const Lattice& x) {
  // lam in X* iff (alpha_j, lam) = d_j lam_j is divisible by l_i for every
  // simple root; inside P that is the diagonal lattice with steps
  // t_j = l_i / gcd(l_i, d_j).
  int n = datum.rank();
  IntMat gens(n, IntVec(n, 0));
  for (int j = 0; j < n; ++j) {
    long li = p.l_i(datum, datum.component_of(j));
    gens[j][j] = li / gcd(li, datum.d(j));
  }
  return Lattice::span(gens, n).intersect(x);
}

Lattice compute_lq(const CartanDatum& datum, const QuantumParameter& p) {
  int n = datum.rank();
  IntMat gens(n, IntVec(n, 0));
  for (int j = 0; j < n; ++j) {
    Weight a = datum.simple_root(j);
    long l = p.l_simple(datum, j);
    for (int r = 0; r < n; ++r) gens[j][r] = l * a[r];
  }
  return Lattice::span(gens, datum.rank());
}

namespace {

bool weyl_stable(const CartanDatum& datum, const Lattice& lat) {
  for (auto& row : lat.basis()) {
    Weight w(row.size());
    for (size_t i = 0; i < row.size(); ++i) w[i] = row[i].get_si();
    for (int i = 0; i < datum.rank(); ++i)
      if (!lat.contains(datum.reflect(i, w))) return false;
  }
  return true;
}

}  // namespace

void check_stability(const CartanDatum& datum, const Lattice& x_star,
                     const Lattice& lq) {
  if (!x_star.contains(lq))
    throw InternalError("lQ is not contained in X*");
  if (!weyl_stable(datum, x_star))
    throw InternalError("X* is not Weyl-stable");
  if (!weyl_stable(datum, lq))
    throw InternalError("lQ is not Weyl-stable");
}

namespace {

char langlands_letter(char letter) {
  if (letter == 'B') return 'C';
  if (letter == 'C') return 'B';
  return letter;  // A, D, E, G are self-dual as types; F too (labels reverse)
}

}  // namespace

DualDatum compute_dual_datum(const CartanDatum& datum, const QuantumParameter& p,
                             const Lattice& x) {
  int n = datum.rank();
  DualDatum dual;
  dual.x_star = compute_x_star(datum, p, x);
  dual.lq = compute_lq(datum, p);
  check_stability(datum, dual.x_star, dual.lq);
  dual.index_x_xstar = dual.x_star.index_in(x);

  std::vector<long> l(n);
  for (int j = 0; j < n; ++j) l[j] = p.l_simple(datum, j);

  IntMat pstar(n, IntVec(n, 0));
  dual.dual_simple_roots.assign(n, IntVec(n, 0));
  for (int j = 0; j < n; ++j) {
    pstar[j][j] = l[j];
    Weight a = datum.simple_root(j);
    for (int r = 0; r < n; ++r) dual.dual_simple_roots[j][r] = l[j] * a[r];
  }
  dual.p_star = Lattice::span(pstar, n);

  // <alpha_i^*, alpha_j^*>_l = (2 l_j / l_i) (alpha_i, alpha_j) / (alpha_i,
  // alpha_i) = (l_j / l_i) a_{ij}; always integral for torsion parameters.
  dual.dual_cartan.assign(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational entry = Rational(l[j] * datum.a(i, j)) / Rational(l[i]);
      if (entry.get_den() != 1)
        throw InternalError("dual Cartan entry not integral");
      dual.dual_cartan[i][j] = entry.get_num();
    }

  // Relative lengths of the dual simple roots: (alpha_j^*, alpha_j^*)_l / 2 =
  // l_j^2 d_j / (l_i l'_i) with the per-component normalization.
  dual.dual_d.assign(n, 0);
  dual.epsilon_per_simple.assign(n, 0);
  for (int j = 0; j < n; ++j) {
    int comp = datum.component_of(j);
    long li = p.l_i(datum, comp), lpi = p.l_prime_i(datum, comp);
    Rational dd = Rational(l[j] * l[j] * datum.d(j)) / Rational(li * lpi);
    if (dd.get_den() != 1 || dd <= 0)
      throw InternalError("dual length not a positive integer");
    dual.dual_d[j] = (long)dd.get_num().get_si();

    // epsilon_{alpha^*} = q_alpha^{l_alpha^2}, always a sign.
    RootOfUnity eps = p.q_i(comp).pow(datum.d(j)).pow(l[j] * l[j]);
    long ord = unit_order(eps);
    if (ord > 2) throw InternalError("epsilon parameter is not a sign");
    dual.epsilon_per_simple[j] = (ord == 1) ? 1 : -1;
  }

  for (auto& comp : datum.components()) {
    int ci = (int)(&comp - datum.components().data());
    long li = p.l_i(datum, ci), lpi = p.l_prime_i(datum, ci);

    DualComponent dc;
    dc.rank = comp.rank;
    dc.scale_factor = Rational(1) / Rational(li * lpi);

    bool langlands = (comp.lacing > 1) && (li % comp.lacing == 0);
    dc.relation = langlands ? "langlands_dual" : "same";
    dc.letter = langlands ? langlands_letter(comp.letter) : comp.letter;

    // Sanity: the computed dual Cartan block must match the classified type
    // (same matrix, or its transpose for the Langlands branch).
    for (int i = 0; i < comp.rank; ++i)
      for (int j = 0; j < comp.rank; ++j) {
        long got = dual.dual_cartan[comp.offset + i][comp.offset + j].get_si();
        long want = langlands ? datum.a(comp.offset + j, comp.offset + i)
                              : datum.a(comp.offset + i, comp.offset + j);
        if (got != want)
          throw InternalError("dual Cartan block disagrees with classification");
      }

    // The component sign is epsilon at a dual-short simple root; every other
    // epsilon must equal its d*-th power.
    int sign = 0;
    for (int j = 0; j < comp.rank; ++j)
      if (dual.dual_d[comp.offset + j] == 1) {
        sign = dual.epsilon_per_simple[comp.offset + j];
        break;
      }
    if (sign == 0) throw InternalError("no dual-short simple root found");
    for (int j = 0; j < comp.rank; ++j) {
      int want = (dual.dual_d[comp.offset + j] % 2 == 0) ? 1 : sign;
      if (dual.epsilon_per_simple[comp.offset + j] != want)
        throw InconsistentComponent(
            "epsilon parameter varies inconsistently within a component");
    }
    dc.epsilon = sign;
    dual.dual_components.push_back(dc);
  }
  return dual;
}

std::optional<FrobImage> frobenius_generator_image(
    const CartanDatum& datum, const QuantumParameter& p, const Lattice& x,
    char kind, int alpha_index, long n, const Weight& lam) {
  if (kind != 'E' && kind != 'F') throw InputError("kind must be 'E' or 'F'");
  if (alpha_index < 0 || alpha_index >= datum.rank())
    throw InputError("simple-root index out of range");
  if (!x.contains(lam))
    throw NotInCharacterLattice("weight " + weight_str(lam) +
                                " is not in the character lattice");
  long l = p.l_simple(datum, alpha_index);
  if (n % l != 0) return std::nullopt;
  if (!is_quasi_classical_weight(datum, p, x, lam)) return std::nullopt;
  return FrobImage{kind, n / l, lam};
}

bool is_quasi_classical_weight(const CartanDatum& datum,
                               const QuantumParameter& p, const Lattice& x,
                               const Weight& lam) {
  if (!x.contains(lam))
    throw NotInCharacterLattice("weight " + weight_str(lam) +
                                " is not in the character lattice");
  for (int j = 0; j < datum.rank(); ++j) {
    long li = p.l_i(datum, datum.component_of(j));
    if ((datum.d(j) * lam[j]) % li != 0) return false;
  }
  return true;
}

}  // namespace smallq
