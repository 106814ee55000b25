#pragma once

#include "smallq/cyclotomic.hpp"
#include "smallq/lattice.hpp"
#include "smallq/triangular.hpp"

namespace smallq {

// Term of the specialized algebra at v = zeta_N, relative to a character
// lattice X.  E and F parts are divided-power PBW exponent vectors (convexity
// order); the torus part is the canonical representative of nu modulo the
// radical R = {nu in Q : q(nu, X) = 1}, since K_nu and K_mu act identically
// on all X-weight spaces exactly when nu - mu is in R.
struct SpecKey {
  std::vector<long> fexp;
  std::vector<long> knu;
  std::vector<long> eexp;
  bool operator<(const SpecKey& o) const {
    if (fexp != o.fexp) return fexp < o.fexp;
    if (knu != o.knu) return knu < o.knu;
    return eexp < o.eexp;
  }
  bool operator==(const SpecKey& o) const {
    return fexp == o.fexp && knu == o.knu && eexp == o.eexp;
  }
};

struct SpecElement {
  std::map<SpecKey, Cyclotomic> terms;
  bool is_zero() const { return terms.empty(); }
  bool operator==(const SpecElement& o) const { return terms == o.terms; }
};

void spec_add(SpecElement& acc, const SpecKey& k, const Cyclotomic& c);
SpecElement spec_add(const SpecElement& a, const SpecElement& b);
SpecElement spec_sub(const SpecElement& a, const SpecElement& b);
SpecElement spec_scale(const SpecElement& a, const Cyclotomic& c);

// Evaluation at the root of unity.  Generic elements are first rewritten in
// divided-power PBW coordinates on both word sides (the integral-form
// coordinate system, so honest specialized elements have no poles there) and
// torus keys in the same R-class are merged by summing generic coefficients
// before evaluating; only then is v sent to zeta_N.
class Specializer {
public:
  Specializer(TriangularEngine& eng, const Lattice& x);

  TriangularEngine& engine() { return eng_; }
  const Lattice& x_lattice() const { return x_; }
  // the value of the generic variable v (so v_i specializes to q_i^{d_i})
  const Cyclotomic& q() const { return q_; }

  // Throws DenominatorVanishes when the reduced denominator hits zero.
  Cyclotomic eval(const RationalFunction& c) const;

  // Canonical representative of nu (root coordinates) modulo the radical.
  std::vector<long> torus_class(std::vector<long> nu) const;
  bool torus_trivial(const std::vector<long>& nu) const;
  const IntMat& radical_basis() const { return radical_; }

  SpecElement specialize(const TriangularElement& x);

  // Pre-evaluation coordinates in the (divided PBW x torus class) basis;
  // specialize() is eval() applied entrywise to this map.
  std::map<SpecKey, RationalFunction> generic_coords(const TriangularElement& x);
  // Cached coordinates of a single normal-form term (used for tensor squares,
  // where the two factors must be transformed independently).
  const std::map<SpecKey, RationalFunction>& key_coords(const TriKey& k);

  struct PBWDegree {
    std::vector<std::vector<long>> monomials;  // exponents in convexity order
    std::vector<LetterWord> basis_words;
    std::map<LetterWord, size_t> word_index;
    Matrix<RationalFunction> expansion;    // row: monomial in word coordinates
    bool solver_ready = false;
    Matrix<RationalFunction> inverse_t;    // inverse of expansion^T
  };

  // side 'E' or 'F'; monomials are divided powers prod_k X_{gamma_k}^{(m_k)}
  // multiplied in convexity order.
  PBWDegree& degree(char side, const std::vector<long>& deg);
  TriangularElement pbw_monomial(char side, const std::vector<long>& m,
                                 bool divided = true);
  // Generic normal-form lift F^{(fexp)} K_nu E^{(eexp)} of a specialized key.
  TriangularElement generic_monomial(const std::vector<long>& fexp,
                                     const std::vector<long>& knu,
                                     const std::vector<long>& eexp);

  // Divided-power PBW coordinates of a homogeneous one-sided element
  // (E side: no F letters, no K; F side symmetric).
  std::vector<RationalFunction> pbw_coords(char side, const TriangularElement& x);
  // Integrality certificate: each PBW coordinate must clear to a Laurent
  // polynomial (throws NotLaurent otherwise), then evaluates at v = q.
  std::vector<Cyclotomic> pbw_specialized(char side, const TriangularElement& x);

private:
  TriangularEngine& eng_;
  Lattice x_;
  Cyclotomic q_;
  IntMat radical_;  // HNF rows, full rank, upper triangular
  std::map<std::pair<char, std::vector<long>>, PBWDegree> degrees_;
  std::map<TriKey, std::map<SpecKey, RationalFunction>> key_coords_;

  void ensure_solver(PBWDegree& d);
  void compute_radical();
};

}  // namespace smallq
