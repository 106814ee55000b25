#pragma once

#include "smallq/kostant.hpp"
#include "smallq/ratfun.hpp"
#include "smallq/wordalg.hpp"

namespace smallq {

// A linear combination of letter words with rational-function coefficients
// (no zero coefficients stored).
using WordCombo = std::map<LetterWord, RationalFunction>;

void combo_add(WordCombo& acc, const LetterWord& w, const RationalFunction& c);
void combo_add(WordCombo& acc, const WordCombo& other,
               const RationalFunction& scale = RationalFunction(Rational(1)));

// Degree-wise model of the positive part U_q^+ (equivalently U_q^-) of the
// divided-power quantum algebra as the quotient of the free graded algebra by
// the q-Serre ideal.  Per degree it certifies the PBW dimension law against
// the Kostant oracle and fixes a word basis with an exact straightening map.
class SerreQuotientAlgebra {
public:
  // rank <= 2 only; H bounds the degree heights handled symbolically.
  SerreQuotientAlgebra(const CartanDatum& datum, const QuantumParameter& p,
                       long height_bound);

  const CartanDatum& datum() const { return datum_; }
  const QuantumParameter& qp() const { return ctx_.qp(); }
  long height_bound() const { return height_; }
  WordContext& ctx() { return ctx_; }
  const KostantOracle& kostant() const { return kostant_; }

  struct DegreeComponent {
    std::vector<long> deg;
    std::vector<LetterWord> words;
    std::vector<LetterWord> basis_words;  // certified basis of the quotient
    std::vector<LetterWord> test_words;   // dual certificate set
    long dimension = 0;                   // = Kostant partition count
    bool trivial = false;                 // every word is a basis word
    bool solver_ready = false;            // solve_inv built lazily
    Matrix<RationalFunction> solve_inv;   // inverse of [pairing(b, z)]
    std::map<LetterWord, std::map<LetterWord, RationalFunction>> reductions;
  };

  // Lazy build + certification; throws WindowExceeded above the height
  // bound, InternalError if a dimension certificate fails.
  DegreeComponent& component(const std::vector<long>& deg);

  long dimension(const std::vector<long>& deg);

  // Mod-p dimension certificate only (no symbolic data); works at any
  // height.  Returns true when the degree-wise dimension provably equals the
  // Kostant count.
  bool certify_dimension(const std::vector<long>& deg);

  // Basis coordinates of a word / word combination in the quotient.
  const std::map<LetterWord, RationalFunction>& reduce_word(const LetterWord& w);
  WordCombo reduce(const WordCombo& c);
  // Product in the quotient (concatenation + reduction).
  WordCombo concat(const WordCombo& a, const WordCombo& b);

  // Integral-form q-Serre generators sum_r (-1)^r qbinom(1-a_ij, r)
  // E_i^r E_j E_i^{1-a_ij-r}, one per ordered pair i != j, as sparse combos
  // with Laurent coefficients.
  struct SerreElement {
    int i, j;
    std::vector<long> deg;
    std::vector<std::pair<LetterWord, LaurentPoly>> terms;
  };
  const std::vector<SerreElement>& serre_elements() const { return serre_; }

private:
  const CartanDatum& datum_;
  long height_;
  WordContext ctx_;
  KostantOracle kostant_;
  std::vector<SerreElement> serre_;
  std::map<std::vector<long>, DegreeComponent> components_;

  // Certifies rank(Serre ideal at deg) == target mod p; fast path counts
  // distinct leading words of the spanning rows, fallback is online
  // elimination with early stop.
  bool ideal_rank_is(const std::vector<long>& deg,
                     const std::vector<LetterWord>& words,
                     const std::map<LetterWord, size_t>& index, size_t target);
  // Online Gram-row elimination; returns indices of words whose pairing rows
  // are independent, stopping at target rank (empty result = failure).
  std::vector<size_t> gram_row_basis(const std::vector<LetterWord>& words,
                                     size_t target);
  void ensure_solver(DegreeComponent& comp);
  void verify_serre_orthogonality();
};

}  // namespace smallq
