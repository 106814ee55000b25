#pragma once

#include "smallq/serrequotient.hpp"

namespace smallq {

// One normal-form term F_u * K_nu * E_w: u, w are basis words of their
// degree components, nu is a root-lattice vector in simple-root coordinates.
struct TriKey {
  LetterWord fword;
  std::vector<long> knu;
  LetterWord eword;
  bool operator<(const TriKey& o) const {
    if (fword != o.fword) return fword < o.fword;
    if (knu != o.knu) return knu < o.knu;
    return eword < o.eword;
  }
  bool operator==(const TriKey& o) const {
    return fword == o.fword && knu == o.knu && eword == o.eword;
  }
};

struct TriangularElement {
  std::map<TriKey, RationalFunction> terms;
  bool is_zero() const { return terms.empty(); }
  bool operator==(const TriangularElement& o) const { return terms == o.terms; }
};

void tri_add(TriangularElement& acc, const TriKey& k, const RationalFunction& c);
TriangularElement tri_add(const TriangularElement& a, const TriangularElement& b);
TriangularElement tri_sub(const TriangularElement& a, const TriangularElement& b);
TriangularElement tri_scale(const TriangularElement& a, const RationalFunction& c);

// The generic divided-power quantum algebra at rank <= 2, in triangular
// normal form over the rational-function field; carries the braid-group
// operators T_i = T''_{i,1} and the anti-isomorphism phi.
class TriangularEngine {
public:
  TriangularEngine(const CartanDatum& datum, const QuantumParameter& p, long H);

  const CartanDatum& datum() const { return datum_; }
  const QuantumParameter& qp() const { return p_; }
  SerreQuotientAlgebra& plus() { return alg_; }

  // generic parameter exponent of simple i: v_i = v^{d_i e_i}
  long vexp(int i) const;
  RationalFunction v_pow(long e) const;

  TriangularElement zero() const { return {}; }
  TriangularElement one() const;
  TriangularElement scalar(const RationalFunction& c) const;
  TriangularElement gen_e(int i) const;
  TriangularElement gen_f(int i) const;
  TriangularElement gen_k(const std::vector<long>& nu) const;
  TriangularElement divided_e(int i, long n);  // E_i^{(n)}
  TriangularElement divided_f(int i, long n);

  TriangularElement multiply(const TriangularElement& a,
                             const TriangularElement& b);
  TriangularElement power(const TriangularElement& a, long n);

  // Braid operator T_i (or its inverse) extended through the normal form.
  TriangularElement braid(int i, bool inverse, const TriangularElement& x);
  // Apply T_{w_1} ... T_{w_m} innermost-last: braid_word({a,b}, x) =
  // T_a(T_b(x)).
  TriangularElement braid_word(const std::vector<int>& w, bool inverse,
                               const TriangularElement& x);

  // phi: anti-isomorphism with phi(E_i) = F_i, phi(F_i) = E_i,
  // phi(K_nu) = K_{-nu}, semilinear over v -> v^{-1}.
  TriangularElement phi(const TriangularElement& x);

  // PBW root vectors in convexity order (parallel to
  // datum().positive_roots()): E_gamma by iterated braid operators,
  // F_gamma = phi(E_gamma).
  const std::vector<TriangularElement>& root_vectors_e();
  const std::vector<TriangularElement>& root_vectors_f();
  // E_gamma^{(n)} / F_gamma^{(n)} (divided = true divides by [n]_{v_gamma}!)
  TriangularElement root_power_e(size_t gamma_index, long n, bool divided);
  TriangularElement root_power_f(size_t gamma_index, long n, bool divided);

private:
  CartanDatum datum_;
  QuantumParameter p_;
  SerreQuotientAlgebra alg_;
  std::vector<TriangularElement> roots_e_, roots_f_;
  std::map<std::tuple<int, int, bool, char>, TriangularElement> braid_gen_cache_;

  // Right-multiplication primitives (inputs canonical, outputs canonical).
  TriangularElement rmul_e(const TriangularElement& a, int i);
  TriangularElement rmul_f(const TriangularElement& a, int j);
  TriangularElement rmul_k(const TriangularElement& a,
                           const std::vector<long>& nu);
  void add_raw(TriangularElement& out, const LetterWord& f,
               const std::vector<long>& nu, const LetterWord& e,
               const RationalFunction& c);
  const TriangularElement& braid_gen(int i, int j, bool inverse, char kind);
  void build_root_vectors();
};

}  // namespace smallq
