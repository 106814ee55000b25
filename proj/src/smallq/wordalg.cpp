#include "smallq/wordalg.hpp"

#include <functional>

#include "smallq/errors.hpp"

namespace smallq {

std::vector<long> word_degree(const LetterWord& w, int rank) {
  std::vector<long> deg(rank, 0);
  for (int c : w) ++deg[c];
  return deg;
}

std::vector<LetterWord> words_of_degree(const std::vector<long>& deg) {
  std::vector<LetterWord> out;
  LetterWord cur;
  std::vector<long> left = deg;
  long total = 0;
  for (long c : deg) total += c;

  std::function<void()> rec = [&]() {
    if ((long)cur.size() == total) {
      out.push_back(cur);
      return;
    }
    for (size_t i = 0; i < left.size(); ++i) {
      if (left[i] == 0) continue;
      --left[i];
      cur.push_back((int)i);
      rec();
      cur.pop_back();
      ++left[i];
    }
  };
  rec();
  return out;
}

WordContext::WordContext(const CartanDatum& datum, const QuantumParameter& p)
    : datum_(datum), p_(p), t_(Fp64(1234577)) {
  if (datum.rank() > 2)
    throw RankTooLarge("word pairing machinery is limited to rank <= 2");
  int n = datum.rank();
  pair_.assign(n, std::vector<long>(n));
  for (int j = 0; j < n; ++j) {
    long e = p.exponents()[datum.component_of(j)];
    for (int i = 0; i < n; ++i) pair_[j][i] = e * datum.d(j) * datum.a(j, i);
  }
}

uint64_t WordContext::pack(const LetterWord& w) {
  if (w.size() > 30) throw WindowExceeded("word too long to pack");
  uint64_t bits = 1;  // leading marker makes the code prefix-free
  for (int c : w) bits = (bits << 1) | (uint64_t)c;
  return bits;
}

long WordContext::form_exp(const std::vector<long>& deg, int i) const {
  long s = 0;
  for (size_t j = 0; j < deg.size(); ++j) s += deg[j] * pair_[j][i];
  return s;
}

long WordContext::bilinear_exp(const std::vector<long>& mu,
                               const std::vector<long>& nu) const {
  long s = 0;
  for (size_t j = 0; j < mu.size(); ++j) {
    if (mu[j] == 0) continue;
    for (size_t i = 0; i < nu.size(); ++i) s += mu[j] * nu[i] * pair_[j][i];
  }
  return s;
}

const LaurentPoly& WordContext::pairing(const LetterWord& a, const LetterWord& b) {
  uint64_t key = pack_pair(a, b);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  LaurentPoly result;
  if (a.empty()) {
    if (b.empty()) result = LaurentPoly(Rational(1));
  } else if (a.size() == b.size()) {
    int i = a[0];
    LetterWord rest(a.begin() + 1, a.end());
    std::vector<long> prefix_deg(datum_.rank(), 0);
    for (size_t k = 0; k < b.size(); ++k) {
      if (b[k] == i) {
        LetterWord bz;
        bz.reserve(b.size() - 1);
        bz.insert(bz.end(), b.begin(), b.begin() + k);
        bz.insert(bz.end(), b.begin() + k + 1, b.end());
        result += pairing(rest, bz).shifted(form_exp(prefix_deg, i));
      }
      ++prefix_deg[b[k]];
    }
  }
  return memo_.emplace(key, std::move(result)).first->second;
}

Fp64 WordContext::pairing_p(const LetterWord& a, const LetterWord& b) {
  uint64_t key = pack_pair(a, b);
  auto it = memo_p_.find(key);
  if (it != memo_p_.end()) return it->second;

  Fp64 result(0);
  if (a.empty()) {
    if (b.empty()) result = Fp64(1);
  } else if (a.size() == b.size()) {
    int i = a[0];
    LetterWord rest(a.begin() + 1, a.end());
    std::vector<long> prefix_deg(datum_.rank(), 0);
    for (size_t k = 0; k < b.size(); ++k) {
      if (b[k] == i) {
        LetterWord bz;
        bz.reserve(b.size() - 1);
        bz.insert(bz.end(), b.begin(), b.begin() + k);
        bz.insert(bz.end(), b.begin() + k + 1, b.end());
        result = result + pairing_p(rest, bz) * t_.pow(form_exp(prefix_deg, i));
      }
      ++prefix_deg[b[k]];
    }
  }
  memo_p_.emplace(key, result);
  return result;
}

Fp64 WordContext::eval_p(const LaurentPoly& f) const {
  Fp64 acc(0);
  for (auto& [e, c] : f.coeffs()) {
    Fp64 num((uint64_t)mpz_fdiv_ui(c.get_num().get_mpz_t(), Fp64::P));
    Fp64 den((uint64_t)mpz_fdiv_ui(c.get_den().get_mpz_t(), Fp64::P));
    acc = acc + num / den * t_.pow(e);
  }
  return acc;
}

}  // namespace smallq
