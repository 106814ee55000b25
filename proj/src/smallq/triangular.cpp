#include "smallq/triangular.hpp"

#include <algorithm>
#include <functional>

#include "smallq/errors.hpp"
#include "smallq/qcombinatorics.hpp"

namespace smallq {

void tri_add(TriangularElement& acc, const TriKey& k, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto it = acc.terms.find(k);
  if (it == acc.terms.end()) {
    acc.terms.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) acc.terms.erase(it);
}

TriangularElement tri_add(const TriangularElement& a, const TriangularElement& b) {
  TriangularElement out = a;
  for (auto& [k, c] : b.terms) tri_add(out, k, c);
  return out;
}

TriangularElement tri_sub(const TriangularElement& a, const TriangularElement& b) {
  TriangularElement out = a;
  for (auto& [k, c] : b.terms) tri_add(out, k, -c);
  return out;
}

TriangularElement tri_scale(const TriangularElement& a, const RationalFunction& c) {
  TriangularElement out;
  if (c.is_zero()) return out;
  for (auto& [k, t] : a.terms) out.terms.emplace(k, t * c);
  return out;
}

TriangularEngine::TriangularEngine(const CartanDatum& datum,
                                   const QuantumParameter& p, long H)
    : datum_(datum), p_(p), alg_(datum_, p_, H) {}

long TriangularEngine::vexp(int i) const {
  return datum_.d(i) * p_.exponents()[datum_.component_of(i)];
}

RationalFunction TriangularEngine::v_pow(long e) const {
  return RationalFunction::v(e);
}

TriangularElement TriangularEngine::one() const {
  TriangularElement out;
  out.terms.emplace(TriKey{{}, std::vector<long>(datum_.rank(), 0), {}},
                    RationalFunction(Rational(1)));
  return out;
}

TriangularElement TriangularEngine::scalar(const RationalFunction& c) const {
  return tri_scale(one(), c);
}

TriangularElement TriangularEngine::gen_e(int i) const {
  TriangularElement out;
  out.terms.emplace(TriKey{{}, std::vector<long>(datum_.rank(), 0), {i}},
                    RationalFunction(Rational(1)));
  return out;
}

TriangularElement TriangularEngine::gen_f(int i) const {
  TriangularElement out;
  out.terms.emplace(TriKey{{i}, std::vector<long>(datum_.rank(), 0), {}},
                    RationalFunction(Rational(1)));
  return out;
}

TriangularElement TriangularEngine::gen_k(const std::vector<long>& nu) const {
  TriangularElement out;
  out.terms.emplace(TriKey{{}, nu, {}}, RationalFunction(Rational(1)));
  return out;
}

TriangularElement TriangularEngine::divided_e(int i, long n) {
  LetterWord w(n, i);
  RationalFunction c(LaurentPoly(Rational(1)),
                     quantum_factorial_generic(n, vexp(i)));
  TriangularElement out;
  tri_add(out, TriKey{{}, std::vector<long>(datum_.rank(), 0), w}, c);
  return out;
}

TriangularElement TriangularEngine::divided_f(int i, long n) {
  LetterWord w(n, i);
  RationalFunction c(LaurentPoly(Rational(1)),
                     quantum_factorial_generic(n, vexp(i)));
  TriangularElement out;
  tri_add(out, TriKey{w, std::vector<long>(datum_.rank(), 0), {}}, c);
  return out;
}

void TriangularEngine::add_raw(TriangularElement& out, const LetterWord& f,
                               const std::vector<long>& nu, const LetterWord& e,
                               const RationalFunction& c) {
  if (c.is_zero()) return;
  const auto& fred = alg_.reduce_word(f);
  const auto& ered = alg_.reduce_word(e);
  for (auto& [fb, fc] : fred)
    for (auto& [eb, ec] : ered) tri_add(out, TriKey{fb, nu, eb}, c * fc * ec);
}

TriangularElement TriangularEngine::rmul_e(const TriangularElement& a, int i) {
  TriangularElement out;
  for (auto& [k, c] : a.terms) {
    LetterWord w = k.eword;
    w.push_back(i);
    for (auto& [b, ec] : alg_.reduce_word(w))
      tri_add(out, TriKey{k.fword, k.knu, b}, c * ec);
  }
  return out;
}

TriangularElement TriangularEngine::rmul_k(const TriangularElement& a,
                                           const std::vector<long>& nu) {
  TriangularElement out;
  for (auto& [k, c] : a.terms) {
    std::vector<long> deg = word_degree(k.eword, datum_.rank());
    long h = alg_.ctx().bilinear_exp(nu, deg);
    std::vector<long> mu = k.knu;
    for (size_t t = 0; t < mu.size(); ++t) mu[t] += nu[t];
    tri_add(out, TriKey{k.fword, mu, k.eword}, c * v_pow(-h));
  }
  return out;
}

TriangularElement TriangularEngine::rmul_f(const TriangularElement& a, int j) {
  std::vector<long> alpha_j(datum_.rank(), 0);
  alpha_j[j] = 1;

  // (F_u K_mu E_w) * F_j with w possibly non-basis; recursion peels the last
  // letter t of w through E_t F_j = F_j E_t + delta_{tj}(K_t - K_t^{-1})/
  // (v_t - v_t^{-1}).
  std::function<TriangularElement(const LetterWord&, const std::vector<long>&,
                                  const LetterWord&, const RationalFunction&)>
      rec = [&](const LetterWord& u, const std::vector<long>& mu,
                const LetterWord& w,
                const RationalFunction& c) -> TriangularElement {
    TriangularElement out;
    if (w.empty()) {
      LetterWord uj = u;
      uj.push_back(j);
      long h = alg_.ctx().bilinear_exp(mu, alpha_j);
      RationalFunction cc = c * v_pow(-h);
      for (auto& [b, fc] : alg_.reduce_word(uj))
        tri_add(out, TriKey{b, mu, {}}, cc * fc);
      return out;
    }
    int t = w.back();
    LetterWord wp(w.begin(), w.end() - 1);
    out = rmul_e(rec(u, mu, wp, c), t);
    if (t == j) {
      long dv = vexp(t);
      RationalFunction cc = c / (v_pow(dv) - v_pow(-dv));
      std::vector<long> deg = word_degree(wp, datum_.rank());
      std::vector<long> alpha_t(datum_.rank(), 0);
      alpha_t[t] = 1;
      long h = alg_.ctx().bilinear_exp(alpha_t, deg);
      std::vector<long> mup = mu, mum = mu;
      ++mup[t];
      --mum[t];
      add_raw(out, u, mup, wp, cc * v_pow(-h));
      add_raw(out, u, mum, wp, -(cc * v_pow(h)));
    }
    return out;
  };

  TriangularElement out;
  for (auto& [k, c] : a.terms)
    out = tri_add(out, rec(k.fword, k.knu, k.eword, c));
  return out;
}

TriangularElement TriangularEngine::multiply(const TriangularElement& a,
                                             const TriangularElement& b) {
  TriangularElement out;
  std::vector<long> zero(datum_.rank(), 0);
  for (auto& [k, c] : b.terms) {
    TriangularElement cur = tri_scale(a, c);
    for (int f : k.fword) cur = rmul_f(cur, f);
    if (k.knu != zero) cur = rmul_k(cur, k.knu);
    for (int e : k.eword) cur = rmul_e(cur, e);
    out = tri_add(out, cur);
  }
  return out;
}

TriangularElement TriangularEngine::power(const TriangularElement& a, long n) {
  TriangularElement out = one();
  for (long t = 0; t < n; ++t) out = multiply(out, a);
  return out;
}

const TriangularElement& TriangularEngine::braid_gen(int i, int j, bool inverse,
                                                     char kind) {
  auto key = std::make_tuple(i, j, inverse, kind);
  auto it = braid_gen_cache_.find(key);
  if (it != braid_gen_cache_.end()) return it->second;

  int n = datum_.rank();
  std::vector<long> zero(n, 0), alpha(n, 0), malpha(n, 0);
  alpha[i] = 1;
  malpha[i] = -1;
  long dv = vexp(i);
  TriangularElement out;

  if (i == j) {
    if (kind == 'E') {
      if (!inverse) {
        // T_i(E_i) = -F_i K_i
        tri_add(out, TriKey{{i}, alpha, {}}, RationalFunction(Rational(-1)));
      } else {
        // T_i^{-1}(E_i) = -K_i^{-1} F_i = -v_i^2 F_i K_i^{-1}
        tri_add(out, TriKey{{i}, malpha, {}}, -v_pow(2 * dv));
      }
    } else {
      if (!inverse) {
        // T_i(F_i) = -K_i^{-1} E_i
        tri_add(out, TriKey{{}, malpha, {i}}, RationalFunction(Rational(-1)));
      } else {
        // T_i^{-1}(F_i) = -E_i K_i = -v_i^{-2} K_i E_i
        tri_add(out, TriKey{{}, alpha, {i}}, -v_pow(-2 * dv));
      }
    }
  } else {
    long s = -datum_.a(i, j);
    for (long r = 0; r <= s; ++r) {
      RationalFunction c(LaurentPoly(Rational((r % 2 == 0) ? 1 : -1)),
                         quantum_factorial_generic(r, dv) *
                             quantum_factorial_generic(s - r, dv));
      LetterWord left, right;
      if (kind == 'E') {
        c *= v_pow(-r * dv);
        // forward: E_i^{(s-r)} E_j E_i^{(r)}; inverse: E_i^{(r)} E_j E_i^{(s-r)}
        left.assign(inverse ? r : s - r, i);
        right.assign(inverse ? s - r : r, i);
        LetterWord w = left;
        w.push_back(j);
        w.insert(w.end(), right.begin(), right.end());
        add_raw(out, {}, zero, w, c);
      } else {
        c *= v_pow(r * dv);
        // forward: F_i^{(r)} F_j F_i^{(s-r)}; inverse: F_i^{(s-r)} F_j F_i^{(r)}
        left.assign(inverse ? s - r : r, i);
        right.assign(inverse ? r : s - r, i);
        LetterWord w = left;
        w.push_back(j);
        w.insert(w.end(), right.begin(), right.end());
        add_raw(out, w, zero, {}, c);
      }
    }
  }
  return braid_gen_cache_.emplace(key, std::move(out)).first->second;
}

TriangularElement TriangularEngine::braid(int i, bool inverse,
                                          const TriangularElement& x) {
  TriangularElement out;
  for (auto& [k, c] : x.terms) {
    TriangularElement cur = scalar(c);
    for (int f : k.fword) cur = multiply(cur, braid_gen(i, f, inverse, 'F'));
    std::vector<long> nu = k.knu;
    long drop = 0;
    for (int j = 0; j < datum_.rank(); ++j) drop += datum_.a(i, j) * nu[j];
    nu[i] -= drop;  // sigma_i on root coordinates
    cur = multiply(cur, gen_k(nu));
    for (int e : k.eword) cur = multiply(cur, braid_gen(i, e, inverse, 'E'));
    out = tri_add(out, cur);
  }
  return out;
}

TriangularElement TriangularEngine::braid_word(const std::vector<int>& w,
                                               bool inverse,
                                               const TriangularElement& x) {
  TriangularElement cur = x;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    cur = braid(*it, inverse, cur);
  return cur;
}

TriangularElement TriangularEngine::phi(const TriangularElement& x) {
  TriangularElement out;
  for (auto& [k, c] : x.terms) {
    LetterWord f(k.eword.rbegin(), k.eword.rend());
    LetterWord e(k.fword.rbegin(), k.fword.rend());
    std::vector<long> nu = k.knu;
    for (auto& t : nu) t = -t;
    add_raw(out, f, nu, e, c.bar());
  }
  return out;
}

void TriangularEngine::build_root_vectors() {
  if (!roots_e_.empty()) return;
  const std::vector<int>& w = datum_.longest_word();
  const auto& roots = datum_.positive_roots();
  size_t r = w.size();
  roots_e_.resize(r);
  roots_f_.resize(r);
  std::vector<long> zero(datum_.rank(), 0);
  for (size_t k = 0; k < r; ++k) {
    TriangularElement elem = gen_e(w[k]);
    for (size_t t = k + 1; t < r; ++t) elem = braid(w[t], false, elem);
    // must land in the plus part, in the degree of the k-th convexity root
    for (auto& [key, c] : elem.terms) {
      if (!key.fword.empty() || key.knu != zero)
        throw InternalError("braid root vector left the plus part");
      if (word_degree(key.eword, datum_.rank()) != roots[k].q_coords)
        throw InternalError("braid root vector has wrong degree");
    }
    if (elem.is_zero()) throw InternalError("braid root vector vanished");
    roots_e_[k] = elem;
    roots_f_[k] = phi(elem);
  }
}

const std::vector<TriangularElement>& TriangularEngine::root_vectors_e() {
  build_root_vectors();
  return roots_e_;
}

const std::vector<TriangularElement>& TriangularEngine::root_vectors_f() {
  build_root_vectors();
  return roots_f_;
}

TriangularElement TriangularEngine::root_power_e(size_t gamma_index, long n,
                                                 bool divided) {
  build_root_vectors();
  TriangularElement out = power(roots_e_[gamma_index], n);
  if (divided) {
    const Root& g = datum_.positive_roots()[gamma_index];
    int comp = 0;
    for (size_t j = 0; j < g.q_coords.size(); ++j)
      if (g.q_coords[j] != 0) comp = datum_.component_of((int)j);
    RationalFunction inv_fact(
        LaurentPoly(Rational(1)),
        quantum_factorial_generic(n, g.d * p_.exponents()[comp]));
    out = tri_scale(out, inv_fact);
  }
  return out;
}

TriangularElement TriangularEngine::root_power_f(size_t gamma_index, long n,
                                                 bool divided) {
  return phi(root_power_e(gamma_index, n, divided));
}

}  // namespace smallq
