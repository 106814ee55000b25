#include "smallq/serrequotient.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "smallq/errors.hpp"
#include "smallq/qcombinatorics.hpp"

namespace smallq {

void combo_add(WordCombo& acc, const LetterWord& w, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto it = acc.find(w);
  if (it == acc.end()) {
    acc.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

void combo_add(WordCombo& acc, const WordCombo& other,
               const RationalFunction& scale) {
  for (auto& [w, c] : other) combo_add(acc, w, c * scale);
}

namespace {

long height_of(const std::vector<long>& deg) {
  return std::accumulate(deg.begin(), deg.end(), 0L);
}

// Incremental Gaussian elimination over Fp64 with early stopping.
struct OnlineElim {
  std::vector<std::vector<Fp64>> rows;  // normalized reduced rows
  std::vector<size_t> pivot;            // pivot column per stored row

  // Returns true when the row increased the rank.
  bool add(std::vector<Fp64> row) {
    for (size_t i = 0; i < rows.size(); ++i) {
      Fp64 f = row[pivot[i]];
      if (field_is_zero(f)) continue;
      for (size_t j = 0; j < row.size(); ++j)
        row[j] = row[j] - f * rows[i][j];
    }
    size_t p = 0;
    while (p < row.size() && field_is_zero(row[p])) ++p;
    if (p == row.size()) return false;
    Fp64 inv = row[p].inv();
    for (size_t j = p; j < row.size(); ++j) row[j] = row[j] * inv;
    rows.push_back(std::move(row));
    pivot.push_back(p);
    return true;
  }
  size_t rank() const { return rows.size(); }
};

}  // namespace

SerreQuotientAlgebra::SerreQuotientAlgebra(const CartanDatum& datum,
                                           const QuantumParameter& p,
                                           long height_bound)
    : datum_(datum),
      height_(height_bound),
      ctx_(datum, p),
      kostant_(datum.positive_roots()) {
  if (datum.rank() > 2)
    throw RankTooLarge("symbolic engine is limited to rank <= 2");

  int n = datum.rank();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      long m = 1 - datum.a(i, j);
      SerreElement s;
      s.i = i;
      s.j = j;
      s.deg.assign(n, 0);
      s.deg[i] = m;
      s.deg[j] += 1;
      long di = datum.d(i) * p.exponents()[datum.component_of(i)];
      for (long r = 0; r <= m; ++r) {
        LetterWord w;
        for (long t = 0; t < r; ++t) w.push_back(i);
        w.push_back(j);
        for (long t = 0; t < m - r; ++t) w.push_back(i);
        LaurentPoly c = gauss_binom_generic(m, r, di);
        if (r % 2 == 1) c = -c;
        s.terms.emplace_back(std::move(w), std::move(c));
      }
      serre_.push_back(std::move(s));
    }
  verify_serre_orthogonality();
}

void SerreQuotientAlgebra::verify_serre_orthogonality() {
  for (auto& s : serre_) {
    for (auto& z : words_of_degree(s.deg)) {
      LaurentPoly acc;
      for (auto& [w, c] : s.terms) acc += c * ctx_.pairing(w, z);
      if (!acc.is_zero())
        throw InternalError("Serre generator does not lie in the form radical");
    }
  }
}

bool SerreQuotientAlgebra::ideal_rank_is(
    const std::vector<long>& deg, const std::vector<LetterWord>& words,
    const std::map<LetterWord, size_t>& index, size_t target) {
  int n = datum_.rank();

  // Row generator: every w1 * S * w2 of the right degree, as a sparse list of
  // (column, coefficient mod p).
  std::vector<std::vector<std::pair<size_t, Fp64>>> sparse_rows;
  for (auto& s : serre_) {
    std::vector<long> rem(n);
    bool fits = true;
    for (int t = 0; t < n; ++t) {
      rem[t] = deg[t] - s.deg[t];
      if (rem[t] < 0) fits = false;
    }
    if (!fits) continue;
    std::vector<std::pair<LetterWord, Fp64>> terms_p;
    for (auto& [wm, c] : s.terms) terms_p.emplace_back(wm, ctx_.eval_p(c));

    std::vector<long> d1(n, 0);
    std::function<void(int)> split = [&](int pos) {
      if (pos == n) {
        std::vector<long> d2(n);
        for (int t = 0; t < n; ++t) d2[t] = rem[t] - d1[t];
        for (auto& w1 : words_of_degree(d1))
          for (auto& w2 : words_of_degree(d2)) {
            std::vector<std::pair<size_t, Fp64>> row;
            for (auto& [wm, cp] : terms_p) {
              LetterWord w = w1;
              w.insert(w.end(), wm.begin(), wm.end());
              w.insert(w.end(), w2.begin(), w2.end());
              row.emplace_back(index.at(w), cp);
            }
            sparse_rows.push_back(std::move(row));
          }
        return;
      }
      for (d1[pos] = 0; d1[pos] <= rem[pos]; ++d1[pos]) split(pos + 1);
      d1[pos] = 0;
    };
    split(0);
  }
  // Fast path: rows with distinct lex-maximal columns are independent (the
  // word order is concatenation-compatible, so these really are the rows'
  // leading terms).
  std::vector<char> seen(words.size(), 0);
  size_t distinct = 0;
  for (auto& row : sparse_rows) {
    size_t lead = 0;
    bool found = false;
    for (auto& [col, c] : row) {
      if (field_is_zero(c)) continue;
      // columns are produced in lex order of words_of_degree; larger index =
      // lex-larger word
      if (!found || col > lead) lead = col;
      found = true;
    }
    if (found && !seen[lead]) {
      seen[lead] = 1;
      ++distinct;
    }
  }
  if (distinct == target) return true;
  if (distinct > target) return false;  // rank too large: dimension deficit

  // Fallback: online elimination with early stop.
  OnlineElim elim;
  for (auto& row : sparse_rows) {
    std::vector<Fp64> dense(words.size(), Fp64(0));
    for (auto& [col, c] : row) dense[col] = dense[col] + c;
    if (elim.add(std::move(dense)) && elim.rank() == target) return true;
  }
  return elim.rank() == target;
}

std::vector<size_t> SerreQuotientAlgebra::gram_row_basis(
    const std::vector<LetterWord>& words, size_t target) {
  OnlineElim elim;
  std::vector<size_t> accepted;
  for (size_t r = 0; r < words.size(); ++r) {
    std::vector<Fp64> row(words.size());
    for (size_t c = 0; c < words.size(); ++c)
      row[c] = ctx_.pairing_p(words[r], words[c]);
    if (elim.add(std::move(row))) {
      accepted.push_back(r);
      if (elim.rank() == target) return accepted;
    }
  }
  return {};
}

bool SerreQuotientAlgebra::certify_dimension(const std::vector<long>& deg) {
  std::vector<LetterWord> words = words_of_degree(deg);
  size_t k = (size_t)kostant_.count(deg).get_si();
  if (k > words.size()) return false;
  std::map<LetterWord, size_t> index;
  for (size_t t = 0; t < words.size(); ++t) index[words[t]] = t;

  if (!ideal_rank_is(deg, words, index, words.size() - k)) return false;
  if (words.size() == k) return true;
  return !gram_row_basis(words, k).empty();
}

SerreQuotientAlgebra::DegreeComponent& SerreQuotientAlgebra::component(
    const std::vector<long>& deg) {
  auto it = components_.find(deg);
  if (it != components_.end()) return it->second;
  if (height_of(deg) > height_)
    throw WindowExceeded("degree height " + std::to_string(height_of(deg)) +
                         " exceeds the window bound " + std::to_string(height_));

  DegreeComponent comp;
  comp.deg = deg;
  comp.words = words_of_degree(deg);
  comp.dimension = kostant_.count(deg).get_si();
  std::map<LetterWord, size_t> index;
  for (size_t t = 0; t < comp.words.size(); ++t) index[comp.words[t]] = t;

  // Squeeze certificate: the Serre-ideal rank bounds the dimension above,
  // the pairing rank bounds it below; both must meet the Kostant count.
  size_t k = (size_t)comp.dimension;
  if (!ideal_rank_is(deg, comp.words, index, comp.words.size() - k))
    throw InternalError("Serre-ideal rank certificate failed at degree " +
                        weight_str(deg));

  if (comp.words.size() == k) {
    comp.trivial = true;
    comp.basis_words = comp.words;
    comp.test_words = comp.words;
    return components_.emplace(deg, std::move(comp)).first->second;
  }

  std::vector<size_t> basis_rows = gram_row_basis(comp.words, k);
  if (basis_rows.empty())
    throw InternalError("pairing rank certificate failed at degree " +
                        weight_str(deg));
  for (size_t r : basis_rows) comp.basis_words.push_back(comp.words[r]);

  // Test words: columns where the chosen rows' pairing matrix has pivots.
  Matrix<Fp64> m(k, std::vector<Fp64>(comp.words.size()));
  for (size_t r = 0; r < k; ++r)
    for (size_t c = 0; c < comp.words.size(); ++c)
      m[r][c] = ctx_.pairing_p(comp.basis_words[r], comp.words[c]);
  std::vector<size_t> test_cols = rref(m);
  if (test_cols.size() != k)
    throw InternalError("test-word selection failed at degree " +
                        weight_str(deg));
  for (size_t c : test_cols) comp.test_words.push_back(comp.words[c]);
  return components_.emplace(deg, std::move(comp)).first->second;
}

void SerreQuotientAlgebra::ensure_solver(DegreeComponent& comp) {
  if (comp.solver_ready || comp.trivial) return;
  size_t k = comp.basis_words.size();
  Matrix<RationalFunction> gbz(k, std::vector<RationalFunction>(k));
  for (size_t r = 0; r < k; ++r)
    for (size_t c = 0; c < k; ++c)
      gbz[r][c] =
          RationalFunction(ctx_.pairing(comp.basis_words[r], comp.test_words[c]));
  comp.solve_inv = mat_inverse(gbz);
  comp.solver_ready = true;
}

long SerreQuotientAlgebra::dimension(const std::vector<long>& deg) {
  return component(deg).dimension;
}

const std::map<LetterWord, RationalFunction>& SerreQuotientAlgebra::reduce_word(
    const LetterWord& w) {
  std::vector<long> deg = word_degree(w, datum_.rank());
  DegreeComponent& comp = component(deg);
  auto it = comp.reductions.find(w);
  if (it != comp.reductions.end()) return it->second;

  std::map<LetterWord, RationalFunction> combo;
  if (comp.trivial ||
      std::find(comp.basis_words.begin(), comp.basis_words.end(), w) !=
          comp.basis_words.end()) {
    combo.emplace(w, RationalFunction(Rational(1)));
  } else {
    ensure_solver(comp);
    size_t k = comp.basis_words.size();
    // coords c with pairing(w, z) = sum_b c_b pairing(b, z) on the test set;
    // exact because the test functionals form a dual basis of the certified
    // quotient component.  c = solve_inv^T * rhs.
    std::vector<RationalFunction> rhs(k);
    for (size_t c = 0; c < k; ++c)
      rhs[c] = RationalFunction(ctx_.pairing(w, comp.test_words[c]));
    for (size_t b = 0; b < k; ++b) {
      RationalFunction acc;
      for (size_t c = 0; c < k; ++c) acc += comp.solve_inv[c][b] * rhs[c];
      if (!acc.is_zero()) combo.emplace(comp.basis_words[b], acc);
    }
  }
  return comp.reductions.emplace(w, std::move(combo)).first->second;
}

WordCombo SerreQuotientAlgebra::reduce(const WordCombo& c) {
  WordCombo out;
  for (auto& [w, coef] : c) {
    for (auto& [b, bc] : reduce_word(w)) combo_add(out, b, bc * coef);
  }
  return out;
}

WordCombo SerreQuotientAlgebra::concat(const WordCombo& a, const WordCombo& b) {
  WordCombo raw;
  for (auto& [wa, ca] : a)
    for (auto& [wb, cb] : b) {
      LetterWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      combo_add(raw, w, ca * cb);
    }
  return reduce(raw);
}

}  // namespace smallq
