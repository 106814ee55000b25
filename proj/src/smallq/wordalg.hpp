#pragma once

#include <cstdint>
#include <unordered_map>

#include "smallq/laurent.hpp"
#include "smallq/linalg.hpp"
#include "smallq/qparam.hpp"

namespace smallq {

// Letter words in the free graded algebra on the simple root vectors; letter
// k stands for E_k (or F_k on the minus side, which straightens identically).
using LetterWord = std::vector<int>;

std::vector<long> word_degree(const LetterWord& w, int rank);
std::vector<LetterWord> words_of_degree(const std::vector<long>& deg);

// Bilinear pairing machinery on the free algebra for a fixed (datum,
// parameter-exponent) configuration, rank <= 2.  The generic parameter of
// the simple root i is v^{e_i d_i}, so specializing v to the ambient root of
// unity recovers every q_i at once.
class WordContext {
public:
  WordContext(const CartanDatum& datum, const QuantumParameter& p);

  const CartanDatum& datum() const { return datum_; }
  const QuantumParameter& qp() const { return p_; }

  // v-exponent of the symmetric form (alpha_j, alpha_i), scaled by the
  // parameter exponent of j's component.
  long pair_exp(int j, int i) const { return pair_[j][i]; }
  // Same, first argument a degree vector.
  long form_exp(const std::vector<long>& deg, int i) const;
  // Full bilinear exponent between two degree vectors.
  long bilinear_exp(const std::vector<long>& mu, const std::vector<long>& nu) const;

  // Scaled shuffle pairing on words of equal degree (memoized):
  //   p(1, 1) = 1,
  //   p(E_i w, z) = sum over positions k with z_k = i of
  //                 v^{(wt(z_{<k}), alpha_i)} p(w, z minus position k).
  // Its radical on each degree component is the Serre ideal, which is what
  // the quotient construction uses.
  const LaurentPoly& pairing(const LetterWord& a, const LetterWord& b);
  // The same pairing evaluated at a fixed residue v = t modulo a word-size
  // prime; used for rank certificates.
  Fp64 pairing_p(const LetterWord& a, const LetterWord& b);

  Fp64 eval_point() const { return t_; }
  Fp64 eval_p(const LaurentPoly& f) const;

private:
  const CartanDatum& datum_;
  QuantumParameter p_;
  std::vector<std::vector<long>> pair_;
  Fp64 t_;
  std::unordered_map<uint64_t, LaurentPoly> memo_;
  std::unordered_map<uint64_t, Fp64> memo_p_;

  // Prefix-free bit packing of a rank-<=2 word of length <= 30.
  static uint64_t pack(const LetterWord& w);
  static uint64_t pack_pair(const LetterWord& a, const LetterWord& b) {
    return (pack(a) << 32) | pack(b);
  }
};

}  // namespace smallq
