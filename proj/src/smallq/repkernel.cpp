#include "smallq/repkernel.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "smallq/frobdual.hpp"

namespace smallq {

namespace {

using CMat = Matrix<Cyclotomic>;
using CVec = std::vector<Cyclotomic>;

Weight qdeg_to_weight(const CartanDatum& datum, const std::vector<long>& nu_q) {
  Weight w(datum.rank(), 0);
  for (int j = 0; j < datum.rank(); ++j)
    if (nu_q[j] != 0) w = weight_add(w, weight_scale(nu_q[j], datum.simple_root(j)));
  return w;
}

std::vector<long> qvec_add(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

std::vector<long> qvec_neg(const std::vector<long>& a) {
  std::vector<long> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return c;
}

bool vec_is_zero(const std::vector<long>& a) {
  for (long v : a)
    if (v != 0) return false;
  return true;
}


CVec mat_vec(const CMat& a, const CVec& v) {
  CVec out(a.size(), Cyclotomic(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) {
      if (a[i][j].is_zero() || v[j].is_zero()) continue;
      out[i] += a[i][j] * v[j];
    }
  return out;
}

CVec apply_matrix(const CMat& m, const CVec& v) { return mat_vec(m, v); }

// v - sum of rref rows matching v at their pivot columns.
CVec reduce_by_rref(const CMat& rows, const std::vector<size_t>& pivots,
                    CVec v) {
  for (size_t r = 0; r < rows.size(); ++r) {
    const Cyclotomic& f = v[pivots[r]];
    if (f.is_zero()) continue;
    Cyclotomic fc = f;
    for (size_t j = 0; j < v.size(); ++j)
      if (!rows[r][j].is_zero()) v[j] -= fc * rows[r][j];
  }
  return v;
}

// Split rows into weight-homogeneous components and return the rref'd result;
// asserts the rank did not change when `strict` is set.
CMat graded_rows(const std::vector<Weight>& weights, const CMat& rows,
                 bool strict = true) {
  size_t before = mat_rank(rows);
  std::map<Weight, CMat> comp;
  for (const auto& row : rows) {
    std::map<Weight, CVec> parts;
    for (size_t j = 0; j < row.size(); ++j) {
      if (row[j].is_zero()) continue;
      auto& p = parts[weights[j]];
      if (p.empty()) p.assign(row.size(), Cyclotomic(0));
      p[j] = row[j];
    }
    for (auto& [w, p] : parts) comp[w].push_back(std::move(p));
  }
  CMat out;
  for (auto& [w, m] : comp) {
    std::vector<size_t> piv = rref(m);
    for (size_t r = 0; r < piv.size(); ++r) out.push_back(m[r]);
  }
  if (strict && mat_rank(out) != before)
    throw InternalError("graded_rows: span is not weight-graded");
  return out;
}

// Dynamic prime field used as a rank-selection prepass; the modulus is a
// process-wide setting (the kernel is single-threaded).
uint64_t g_fp_p = 0;

struct FpD {
  uint64_t v;
  FpD() : v(0) {}
  FpD(int x) {
    long long m = (long long)g_fp_p;
    long long r = (long long)x % m;
    v = (uint64_t)(r < 0 ? r + m : r);
  }
  static FpD raw(uint64_t x) {
    FpD f;
    f.v = x;
    return f;
  }
  FpD operator+(FpD o) const { return raw((v + o.v) % g_fp_p); }
  FpD operator-(FpD o) const { return raw((v + g_fp_p - o.v) % g_fp_p); }
  FpD operator*(FpD o) const { return raw(v * o.v % g_fp_p); }
  FpD pow(uint64_t n) const {
    FpD r = raw(1), b = *this;
    for (; n; n >>= 1) {
      if (n & 1) r = r * b;
      b = b * b;
    }
    return r;
  }
  FpD inv() const {
    if (v == 0) throw InternalError("FpD: inverse of zero");
    return pow(g_fp_p - 2);
  }
  FpD operator/(FpD o) const { return *this * o.inv(); }
  bool operator==(FpD o) const { return v == o.v; }
};

bool field_is_zero(const FpD& x) { return x.v == 0; }

uint64_t find_prime_1_mod(long l) {
  uint64_t start = 1000003 / (uint64_t)l + 1;
  for (uint64_t t = start;; ++t) {
    uint64_t p = (uint64_t)l * t + 1;
    mpz_class z(std::to_string(p));
    if (mpz_probab_prime_p(z.get_mpz_t(), 30)) return p;
  }
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Image of zeta_l in F_p (requires l | p - 1).
uint64_t fp_root_of_unity(uint64_t p, long l) {
  std::vector<uint64_t> fac = prime_factors(p - 1);
  uint64_t saved = g_fp_p;
  g_fp_p = p;
  uint64_t g = 0;
  for (uint64_t cand = 2; cand < p; ++cand) {
    bool ok = true;
    for (uint64_t q : fac)
      if (FpD::raw(cand).pow((p - 1) / q).v == 1) {
        ok = false;
        break;
      }
    if (ok) {
      g = cand;
      break;
    }
  }
  uint64_t z = FpD::raw(g).pow((p - 1) / (uint64_t)l).v;
  g_fp_p = saved;
  return z;
}

struct FpMapper {
  uint64_t p = 0;
  long l = 1;
  std::vector<uint64_t> zpow;  // zeta_l^k images

  explicit FpMapper(long order_lcm) : l(order_lcm) {
    p = find_prime_1_mod(l);
    uint64_t z = fp_root_of_unity(p, l);
    g_fp_p = p;
    zpow.resize(l);
    uint64_t acc = 1;
    for (long k = 0; k < l; ++k) {
      zpow[k] = acc;
      acc = acc * z % p;
    }
  }

  FpD map_rational(const Rational& r) const {
    uint64_t num = mpz_fdiv_ui(r.get_num().get_mpz_t(), p);
    uint64_t den = mpz_fdiv_ui(r.get_den().get_mpz_t(), p);
    return FpD::raw(num) / FpD::raw(den);
  }

  FpD map_cyc(const Cyclotomic& c) const {
    long m = c.order();
    if (l % m != 0) throw InternalError("FpMapper: order does not divide lcm");
    FpD acc = FpD::raw(0);
    const auto& co = c.coords();
    for (size_t k = 0; k < co.size(); ++k) {
      if (is_zero(co[k])) continue;
      acc = acc + map_rational(co[k]) * FpD::raw(zpow[(long)k * (l / m) % l]);
    }
    return acc;
  }
};

long cyc_order_lcm(long acc, const Cyclotomic& c) { return lcm(acc, c.order()); }

// Nullspace (rows over the column count) of a tall exact matrix, with a prime
// field prepass selecting candidate independent rows and exact verification of
// the remainder.
CMat kernel_with_prepass(const CMat& rows, size_t cols) {
  if (cols == 0) return {};
  if (rows.empty()) return identity_matrix<Cyclotomic>(cols);
  long l = 1;
  for (const auto& row : rows)
    for (const auto& e : row) l = cyc_order_lcm(l, e);
  FpMapper fm(l);
  Matrix<FpD> fp_rref;
  std::vector<size_t> fp_piv;
  std::vector<size_t> sel;
  for (size_t i = 0; i < rows.size(); ++i) {
    std::vector<FpD> r(cols);
    for (size_t j = 0; j < cols; ++j) r[j] = fm.map_cyc(rows[i][j]);
    // reduce against the accumulated echelon rows
    for (size_t t = 0; t < fp_rref.size(); ++t) {
      FpD f = r[fp_piv[t]];
      if (f.v == 0) continue;
      for (size_t j = 0; j < cols; ++j) r[j] = r[j] - f * fp_rref[t][j];
    }
    size_t pc = cols;
    for (size_t j = 0; j < cols; ++j)
      if (r[j].v != 0) {
        pc = j;
        break;
      }
    if (pc == cols) continue;
    FpD inv = r[pc].inv();
    for (size_t j = 0; j < cols; ++j) r[j] = r[j] * inv;
    fp_rref.push_back(std::move(r));
    fp_piv.push_back(pc);
    sel.push_back(i);
  }
  for (int round = 0;; ++round) {
    if (round > 64) throw InternalError("kernel_with_prepass: no convergence");
    CMat a;
    for (size_t i : sel) a.push_back(rows[i]);
    CMat z = nullspace(a);
    bool violated = false;
    for (size_t i = 0; i < rows.size() && !violated; ++i) {
      for (const auto& zr : z) {
        Cyclotomic dot(0);
        for (size_t j = 0; j < cols; ++j) {
          if (rows[i][j].is_zero() || zr[j].is_zero()) continue;
          dot += rows[i][j] * zr[j];
        }
        if (!dot.is_zero()) {
          sel.push_back(i);
          violated = true;
          break;
        }
      }
    }
    if (!violated) return z;
  }
}

}  // namespace

// --------------------------------------------------------------------------
// RepContext

RepContext::RepContext(const CartanDatum& datum, const QuantumParameter& p,
                       const Lattice& x, long height)
    : datum_(datum), p_(p), x_(x) {
  if (datum_.rank() > 2)
    throw RankTooLarge("representation kernel supports rank <= 2, got " +
                       std::to_string(datum_.rank()));
  dl_ = delta_l(datum_, p_);
  const auto& roots = datum_.positive_roots();
  long hsum = 0;
  lgam_.resize(roots.size());
  for (size_t k = 0; k < roots.size(); ++k) {
    lgam_[k] = p_.l_value(datum_, roots[k]);
    hsum += (lgam_[k] - 1) * roots[k].height();
  }
  long h = std::max<long>(4, 2 * hsum);
  h = std::max(h, default_window_height(datum_));
  h = std::max(h, height);
  eng_ = std::make_unique<TriangularEngine>(datum_, p_, h);
  sp_ = std::make_unique<Specializer>(*eng_, x_);

  // restricted exponent boxes
  std::vector<long> m(roots.size(), 0);
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == roots.size()) {
      mono_index_[m] = monos_.size();
      monos_.push_back(m);
      return;
    }
    for (long c = 0; c < lgam_[k]; ++c) {
      m[k] = c;
      rec(k + 1);
    }
    m[k] = 0;
  };
  rec(0);

  // Abar = X / X*
  xstar_ = compute_x_star(datum_, p_, x_);
  abar_pres_ = xstar_.quotient_presentation_in(x_);
  abar_div_ = abar_pres_.divisors;
  if (abar_pres_.outer_basis != x_.basis())
    throw InternalError("Abar presentation uses an unexpected outer basis");
  std::vector<long> c(abar_div_.size(), 0);
  std::function<void(size_t)> reca = [&](size_t k) {
    if (k == abar_div_.size()) {
      abar_elems_.push_back(c);
      return;
    }
    long d = abar_div_[k].get_si();
    for (long t = 0; t < d; ++t) {
      c[k] = t;
      reca(k + 1);
    }
    c[k] = 0;
  };
  reca(0);

  // torus classes Q / R
  const IntMat& rad = sp_->radical_basis();
  int n = datum_.rank();
  std::vector<long> v(n, 0);
  std::function<void(int)> recc = [&](int i) {
    if (i == n) {
      std::vector<long> cls = sp_->torus_class(v);
      if (class_index_.count(cls))
        throw InternalError("torus class enumeration collision");
      class_index_[cls] = classes_.size();
      classes_.push_back(cls);
      return;
    }
    long d = rad[i][i].get_si();
    for (long t = 0; t < d; ++t) {
      v[i] = t;
      recc(i + 1);
    }
    v[i] = 0;
  };
  recc(0);

  // Y = {lam in X : q(nu, lam) = 1 for all nu in Q} and X/Y representatives.
  long bigN = p_.ambient_order();
  IntMat cond(n, IntVec(2 * n, Integer(0)));
  for (int j = 0; j < n; ++j) {
    for (int r = 0; r < n; ++r) {
      Weight row(n);
      for (int t = 0; t < n; ++t) row[t] = x_.basis()[r][t].get_si();
      RootOfUnity u = p_.bicharacter_unit(datum_, datum_.simple_root(j), row);
      cond[j][r] = Integer(u.exponent) * (bigN / u.order);
    }
    cond[j][n + j] = Integer(bigN);
  }
  IntMat ker = int_kernel(cond);  // columns are solutions
  IntMat ygens;
  size_t ncols = ker.empty() ? 0 : ker[0].size();
  for (size_t col = 0; col < ncols; ++col) {
    IntVec g(n, Integer(0));
    for (int r = 0; r < n; ++r)
      for (int t = 0; t < n; ++t) g[t] += ker[r][col] * x_.basis()[r][t];
    ygens.push_back(g);
  }
  Lattice y = Lattice::span(ygens, n);
  if (!xstar_.contains(y))
    throw InternalError("torus kernel lattice not contained in X*");
  Lattice::QuotientPresentation yq = y.quotient_presentation_in(x_);
  std::vector<std::vector<long>> yc;
  std::vector<long> cy(yq.divisors.size(), 0);
  std::function<void(size_t)> recy = [&](size_t k) {
    if (k == yq.divisors.size()) {
      Weight w(n, 0);
      for (size_t t = 0; t < cy.size(); ++t) {
        Weight g(n);
        for (int j = 0; j < n; ++j) g[j] = yq.generators[t][j].get_si();
        w = weight_add(w, weight_scale(cy[t], g));
      }
      xy_reps_.push_back(std::vector<long>(w.begin(), w.end()));
      return;
    }
    long d = yq.divisors[k].get_si();
    for (long t = 0; t < d; ++t) {
      cy[k] = t;
      recy(k + 1);
    }
    cy[k] = 0;
  };
  recy(0);
  if (xy_reps_.size() != classes_.size())
    throw InternalError("(Q/R) x (X/Y) pairing is not square");
}

size_t RepContext::mono_index(const std::vector<long>& m) const {
  auto it = mono_index_.find(m);
  if (it == mono_index_.end())
    throw InternalError("non-restricted PBW exponent vector");
  return it->second;
}

std::vector<long> RepContext::mono_degree(const std::vector<long>& m) const {
  const auto& roots = datum_.positive_roots();
  std::vector<long> deg(datum_.rank(), 0);
  for (size_t k = 0; k < m.size(); ++k)
    for (int j = 0; j < datum_.rank(); ++j) deg[j] += m[k] * roots[k].q_coords[j];
  return deg;
}

size_t RepContext::abar_index(const std::vector<long>& c) const {
  size_t idx = 0;
  for (size_t k = 0; k < abar_div_.size(); ++k) {
    long d = abar_div_[k].get_si();
    long v = ((c[k] % d) + d) % d;
    idx = idx * (size_t)d + (size_t)v;
  }
  return idx;
}

std::vector<long> RepContext::abar_add(const std::vector<long>& a,
                                       const std::vector<long>& b) const {
  std::vector<long> c(a.size());
  for (size_t k = 0; k < a.size(); ++k) {
    long d = abar_div_[k].get_si();
    c[k] = (a[k] + b[k]) % d;
  }
  return c;
}

std::vector<long> RepContext::abar_coords(const Weight& lam) const {
  IntVec xc = lattice_coords(x_, lam);
  IntVec raw = int_apply(abar_pres_.outer_to_coords, xc);
  std::vector<long> c(abar_div_.size());
  for (size_t k = 0; k < c.size(); ++k) {
    long d = abar_div_[k].get_si();
    long v = (long)mpz_fdiv_ui(raw[k].get_mpz_t(), (unsigned long)d);
    c[k] = v;
  }
  return c;
}

Cyclotomic RepContext::abar_char(const std::vector<long>& c,
                                 const Weight& lam) const {
  std::vector<long> a = abar_coords(lam);
  Cyclotomic out(1);
  for (size_t k = 0; k < c.size(); ++k) {
    long d = abar_div_[k].get_si();
    if (d == 1 || c[k] == 0 || a[k] == 0) continue;
    out *= Cyclotomic::zeta(d, c[k] * a[k]);
  }
  return out;
}

Cyclotomic RepContext::abar_char_q(const std::vector<long>& c,
                                   const std::vector<long>& nu_q) const {
  return abar_char(c, qdeg_to_weight(datum_, nu_q));
}

const std::vector<Cyclotomic>& RepContext::fourier(const std::vector<long>& c) {
  auto it = fourier_.find(c);
  if (it != fourier_.end()) return it->second;
  size_t nt = classes_.size();
  Cyclotomic inv_t = Cyclotomic(1, Rational(1, (long)nt));
  CVec out(nt, Cyclotomic(0));
  for (const auto& lam_raw : xy_reps_) {
    Weight lam(lam_raw.begin(), lam_raw.end());
    Cyclotomic chi = abar_char(c, lam);
    if (chi.is_zero()) continue;
    for (size_t t = 0; t < nt; ++t)
      out[t] += chi * qnu(qvec_neg(classes_[t]), lam);
  }
  for (auto& e : out) e *= inv_t;
  // Fourier inversion sanity on one representative.
  if (!xy_reps_.empty()) {
    Weight lam(xy_reps_.back().begin(), xy_reps_.back().end());
    Cyclotomic chk(0);
    for (size_t t = 0; t < nt; ++t) chk += out[t] * qnu(classes_[t], lam);
    if (chk != abar_char(c, lam))
      throw InternalError("Abar character Fourier inversion failed");
  }
  return fourier_.emplace(c, std::move(out)).first->second;
}

size_t RepContext::class_index(const std::vector<long>& cls) const {
  auto it = class_index_.find(sp_->torus_class(cls));
  if (it == class_index_.end()) throw InternalError("unknown torus class");
  return it->second;
}

Cyclotomic RepContext::qnu(const std::vector<long>& nu_q,
                           const Weight& lam) const {
  return p_.bicharacter_eval(datum_, qdeg_to_weight(datum_, nu_q), lam);
}

Cyclotomic RepContext::conj(const Cyclotomic& c) const {
  long m = c.order();
  Cyclotomic out(0);
  const auto& co = c.coords();
  for (size_t k = 0; k < co.size(); ++k) {
    if (is_zero(co[k])) continue;
    out += Cyclotomic(m, co[k]) * Cyclotomic::zeta(m, (long)(m - k) % m);
  }
  return out;
}

const TriangularElement& RepContext::bold_e(size_t k) {
  if (bold_e_.empty()) {
    for (size_t t = 0; t < dl_.roots.size(); ++t) {
      TriangularElement e = recipe_lift(*eng_, dl_, dl_.recipes_e[t].expression);
      bold_e_.push_back(eng_->multiply(eng_->gen_k(dl_.roots[t].q_coords), e));
    }
  }
  return bold_e_[k];
}

const TriangularElement& RepContext::f_gen(size_t k) {
  if (f_gen_.empty()) {
    for (size_t t = 0; t < dl_.roots.size(); ++t)
      f_gen_.push_back(recipe_lift(*eng_, dl_, dl_.recipes_f[t].expression));
  }
  return f_gen_[k];
}

const TriangularElement& RepContext::bold_mono(size_t mono_idx) {
  auto it = bold_mono_.find(mono_idx);
  if (it != bold_mono_.end()) return it->second;
  const auto& m = monos_[mono_idx];
  TriangularElement e = sp_->pbw_monomial('E', m, true);
  e = eng_->multiply(eng_->gen_k(mono_degree(m)), e);
  return bold_mono_.emplace(mono_idx, std::move(e)).first->second;
}

const TriangularElement& RepContext::f_mono(size_t mono_idx) {
  auto it = f_mono_.find(mono_idx);
  if (it != f_mono_.end()) return it->second;
  TriangularElement e = sp_->pbw_monomial('F', monos_[mono_idx], true);
  return f_mono_.emplace(mono_idx, std::move(e)).first->second;
}

RepContext::WordExpansion RepContext::expand_words(char side, size_t mono_idx) {
  const auto& m = monos_[mono_idx];
  WordExpansion out;
  if (vec_is_zero(m)) {
    out.push_back({{}, Cyclotomic(1)});
    return out;
  }
  std::vector<long> tdeg = mono_degree(m);
  // all words in the Delta_l generator letters of the same Q-degree
  std::vector<std::vector<int>> words;
  std::vector<int> w;
  std::vector<long> deg(datum_.rank(), 0);
  std::function<void()> grow = [&]() {
    if (deg == tdeg) {
      words.push_back(w);
      return;
    }
    for (size_t g = 0; g < dl_.roots.size(); ++g) {
      bool ok = true;
      for (int j = 0; j < datum_.rank(); ++j)
        if (deg[j] + dl_.roots[g].q_coords[j] > tdeg[j]) ok = false;
      if (!ok) continue;
      for (int j = 0; j < datum_.rank(); ++j) deg[j] += dl_.roots[g].q_coords[j];
      w.push_back((int)g);
      grow();
      w.pop_back();
      for (int j = 0; j < datum_.rank(); ++j) deg[j] -= dl_.roots[g].q_coords[j];
    }
  };
  grow();
  if (words.size() > 20000)
    throw InternalError("word expansion blow-up at degree " +
                        weight_str(Weight(tdeg.begin(), tdeg.end())));

  // spec vectors of the words over a local key map
  std::map<SpecKey, size_t> keys;
  std::vector<std::map<SpecKey, Cyclotomic>> wvecs;
  for (const auto& word : words) {
    TriangularElement e = eng_->one();
    for (int g : word)
      e = eng_->multiply(e, side == 'E' ? bold_e((size_t)g) : f_gen((size_t)g));
    SpecElement sx = sp_->specialize(e);
    for (const auto& [k, cf] : sx.terms) keys.emplace(k, keys.size());
    wvecs.push_back(std::move(sx.terms));
  }
  SpecElement target =
      sp_->specialize(side == 'E' ? bold_mono(mono_idx) : f_mono(mono_idx));
  for (const auto& [k, cf] : target.terms) keys.emplace(k, keys.size());
  size_t nc = keys.size();
  CMat rows;
  for (const auto& wv : wvecs) {
    CVec r(nc, Cyclotomic(0));
    for (const auto& [k, cf] : wv) r[keys[k]] = cf;
    rows.push_back(std::move(r));
  }
  CVec t(nc, Cyclotomic(0));
  for (const auto& [k, cf] : target.terms) t[keys[k]] = cf;
  CVec coeffs;
  if (!in_row_span(rows, t, &coeffs))
    throw InternalError("restricted monomial outside the generator word span");
  for (size_t i = 0; i < words.size(); ++i)
    if (!coeffs[i].is_zero()) out.push_back({words[i], coeffs[i]});
  return out;
}

const RepContext::WordExpansion& RepContext::bold_expansion(size_t mono_idx) {
  auto it = bold_exp_.find(mono_idx);
  if (it != bold_exp_.end()) return it->second;
  return bold_exp_.emplace(mono_idx, expand_words('E', mono_idx)).first->second;
}

const RepContext::WordExpansion& RepContext::f_expansion(size_t mono_idx) {
  auto it = f_exp_.find(mono_idx);
  if (it != f_exp_.end()) return it->second;
  return f_exp_.emplace(mono_idx, expand_words('F', mono_idx)).first->second;
}

size_t RepContext::label_count() const {
  return monos_.size() * monos_.size() * abar_elems_.size();
}

size_t RepContext::label_index(size_t me, size_t c, size_t mf) const {
  return (me * abar_elems_.size() + c) * monos_.size() + mf;
}

void RepContext::label_split(size_t idx, size_t* me, size_t* c,
                             size_t* mf) const {
  *mf = idx % monos_.size();
  idx /= monos_.size();
  *c = idx % abar_elems_.size();
  *me = idx / abar_elems_.size();
}

const TriangularElement& RepContext::x_elem(size_t me, size_t mf) {
  auto key = std::make_pair(me, mf);
  auto it = x_elems_.find(key);
  if (it != x_elems_.end()) return it->second;
  TriangularElement e = eng_->multiply(bold_mono(me), f_mono(mf));
  return x_elems_.emplace(key, std::move(e)).first->second;
}

std::vector<Cyclotomic> RepContext::chi_append_vector(
    const SpecElement& sx, const std::vector<long>& c, bool grow) {
  // (F^{(a)} K_nu E^{(e)}) chi_c
  //   = chi_c(-deg e) sum_t a_t(c) F^{(a)} K_{nu+t} E^{(e)}.
  const CVec& ft = fourier(c);
  std::map<SpecKey, Cyclotomic> acc;
  const auto& roots = datum_.positive_roots();
  for (const auto& [k, cf] : sx.terms) {
    std::vector<long> dege(datum_.rank(), 0);
    for (size_t r = 0; r < k.eexp.size(); ++r)
      for (int j = 0; j < datum_.rank(); ++j)
        dege[j] += k.eexp[r] * roots[r].q_coords[j];
    Cyclotomic fac = cf * abar_char_q(c, qvec_neg(dege));
    for (size_t t = 0; t < classes_.size(); ++t) {
      if (ft[t].is_zero()) continue;
      SpecKey nk = k;
      nk.knu = sp_->torus_class(qvec_add(k.knu, classes_[t]));
      Cyclotomic add = fac * ft[t];
      auto [it, fresh] = acc.emplace(nk, add);
      if (!fresh) {
        it->second += add;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  }
  if (grow)
    for (const auto& [k, cf] : acc) key_index_.emplace(k, key_index_.size());
  CVec out(key_index_.size(), Cyclotomic(0));
  for (const auto& [k, cf] : acc) {
    auto it = key_index_.find(k);
    if (it == key_index_.end()) {
      if (cf.is_zero()) continue;
      throw InternalError("element outside the label key span");
    }
    out[it->second] = cf;
  }
  return out;
}

void RepContext::ensure_labels() {
  if (labels_ready_) return;
  size_t nm = monos_.size(), na = abar_elems_.size();
  std::vector<CVec> ragged(label_count());
  for (size_t me = 0; me < nm; ++me)
    for (size_t mf = 0; mf < nm; ++mf) {
      SpecElement sx = sp_->specialize(x_elem(me, mf));
      std::vector<long> phi = mono_degree(monos_[mf]);
      for (size_t c = 0; c < na; ++c) {
        Cyclotomic fac = abar_char_q(abar_elems_[c], qvec_neg(phi));
        CVec v = chi_append_vector(sx, abar_elems_[c], true);
        for (auto& e : v) e *= fac;
        ragged[label_index(me, c, mf)] = std::move(v);
      }
    }
  size_t nc = key_index_.size();
  label_rows_.assign(ragged.size(), CVec(nc, Cyclotomic(0)));
  for (size_t i = 0; i < ragged.size(); ++i)
    for (size_t j = 0; j < ragged[i].size(); ++j) label_rows_[i][j] = ragged[i][j];
  CMat copy = label_rows_;
  std::vector<size_t> piv = rref(copy);
  if (piv.size() != label_rows_.size())
    throw InternalError("label basis is linearly dependent");
  pivot_keys_ = piv;
  size_t d = label_rows_.size();
  CMat pt(d, CVec(d, Cyclotomic(0)));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) pt[j][i] = label_rows_[i][pivot_keys_[j]];
  pivot_inverse_t_ = mat_inverse(pt);
  labels_ready_ = true;
}

std::vector<Cyclotomic> RepContext::label_coords_spec(
    const SpecElement& sx, const std::vector<long>& c) {
  ensure_labels();
  CVec full = chi_append_vector(sx, c, false);
  size_t d = label_rows_.size();
  CVec tj(d);
  for (size_t j = 0; j < d; ++j) tj[j] = full[pivot_keys_[j]];
  CVec coeffs = mat_vec(pivot_inverse_t_, tj);
  // verify the full expansion
  for (size_t col = 0; col < full.size(); ++col) {
    Cyclotomic acc(0);
    for (size_t i = 0; i < d; ++i) {
      if (coeffs[i].is_zero() || label_rows_[i][col].is_zero()) continue;
      acc += coeffs[i] * label_rows_[i][col];
    }
    if (acc != full[col]) throw InternalError("element outside the label span");
  }
  return coeffs;
}

std::vector<Cyclotomic> RepContext::label_coords(const TriangularElement& x,
                                                 const std::vector<long>& c) {
  return label_coords_spec(sp_->specialize(x), c);
}

const std::vector<Cyclotomic>& RepContext::gen_label_product(char side,
                                                             size_t k,
                                                             size_t label) {
  auto key = std::make_tuple(side, k, label);
  auto it = gen_label_.find(key);
  if (it != gen_label_.end()) return it->second;
  size_t me, c, mf;
  label_split(label, &me, &c, &mf);
  const TriangularElement& g = side == 'E' ? bold_e(k) : f_gen(k);
  TriangularElement prod = eng_->multiply(g, x_elem(me, mf));
  Cyclotomic fac =
      abar_char_q(abar_elems_[c], qvec_neg(mono_degree(monos_[mf])));
  CVec coords = label_coords_spec(sp_->specialize(prod), abar_elems_[c]);
  for (auto& e : coords) e *= fac;
  return gen_label_.emplace(key, std::move(coords)).first->second;
}

const std::vector<Cyclotomic>& RepContext::label_product(size_t i, size_t j) {
  auto key = std::make_pair(i, j);
  auto it = label_prod_.find(key);
  if (it != label_prod_.end()) return it->second;
  size_t mei, ci, mfi, mej, cj, mfj;
  label_split(i, &mei, &ci, &mfi);
  label_split(j, &mej, &cj, &mfj);
  auto xkey = std::make_pair(mei * monos_.size() + mfi,
                             mej * monos_.size() + mfj);
  auto xit = xprod_.find(xkey);
  if (xit == xprod_.end()) {
    SpecElement sx =
        sp_->specialize(eng_->multiply(x_elem(mei, mfi), x_elem(mej, mfj)));
    xit = xprod_.emplace(xkey, std::move(sx)).first;
  }
  // b_i b_j = chi_{ci}(-phi_i) chi_{cj}(-phi_j) chi_{ci}(deg X_j)
  //           * (X_i X_j) chi_{ci+cj}
  std::vector<long> degxj = mono_degree(monos_[mej]);
  degxj = qvec_add(degxj, qvec_neg(mono_degree(monos_[mfj])));
  Cyclotomic fac =
      abar_char_q(abar_elems_[ci], qvec_neg(mono_degree(monos_[mfi]))) *
      abar_char_q(abar_elems_[cj], qvec_neg(mono_degree(monos_[mfj]))) *
      abar_char_q(abar_elems_[ci], degxj);
  std::vector<long> csum = abar_add(abar_elems_[ci], abar_elems_[cj]);
  CVec coords = label_coords_spec(xit->second, csum);
  for (auto& e : coords) e *= fac;
  return label_prod_.emplace(key, std::move(coords)).first->second;
}

void RepContext::ensure_eleft() {
  if (eleft_ready_) return;
  // spanning system E^{(e)} K_t F^{(a)} over restricted e, a and all classes
  std::vector<std::map<SpecKey, Cyclotomic>> vecs;
  for (size_t e = 0; e < monos_.size(); ++e)
    for (size_t t = 0; t < classes_.size(); ++t)
      for (size_t a = 0; a < monos_.size(); ++a) {
        TriangularElement el = sp_->pbw_monomial('E', monos_[e], true);
        el = eng_->multiply(el, eng_->gen_k(classes_[t]));
        el = eng_->multiply(el, sp_->pbw_monomial('F', monos_[a], true));
        SpecElement sx = sp_->specialize(el);
        for (const auto& [k, cf] : sx.terms)
          eleft_col_index_.emplace(k, eleft_col_index_.size());
        vecs.push_back(std::move(sx.terms));
        eleft_keys_.push_back(SpecKey{monos_[a], classes_[t], monos_[e]});
      }
  size_t nc = eleft_col_index_.size();
  // independent row selection (incremental echelon)
  CMat ech;
  std::vector<size_t> ech_piv;
  std::vector<size_t> sel;
  for (size_t i = 0; i < vecs.size(); ++i) {
    CVec r(nc, Cyclotomic(0));
    for (const auto& [k, cf] : vecs[i]) r[eleft_col_index_[k]] = cf;
    CVec red = reduce_by_rref(ech, ech_piv, r);
    size_t pc = nc;
    for (size_t j = 0; j < nc; ++j)
      if (!red[j].is_zero()) {
        pc = j;
        break;
      }
    if (pc == nc) continue;
    Cyclotomic inv = red[pc].inv();
    for (auto& e : red) e *= inv;
    for (size_t t = 0; t < ech.size(); ++t) {
      Cyclotomic f = ech[t][pc];
      if (f.is_zero()) continue;
      for (size_t j = 0; j < nc; ++j) ech[t][j] -= f * red[j];
    }
    ech.push_back(std::move(red));
    ech_piv.push_back(pc);
    sel.push_back(i);
    eleft_rows_.push_back(CVec(nc, Cyclotomic(0)));
    for (const auto& [k, cf] : vecs[i]) eleft_rows_.back()[eleft_col_index_[k]] = cf;
  }
  std::vector<SpecKey> sel_keys;
  for (size_t i : sel) sel_keys.push_back(eleft_keys_[i]);
  eleft_keys_ = std::move(sel_keys);
  // pivot solver over the selected rows
  CMat copy = eleft_rows_;
  eleft_pivots_ = rref(copy);
  size_t d = eleft_rows_.size();
  CMat pt(d, CVec(d, Cyclotomic(0)));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) pt[j][i] = eleft_rows_[i][eleft_pivots_[j]];
  eleft_inverse_t_ = mat_inverse(pt);
  eleft_ready_ = true;
}

std::map<SpecKey, Cyclotomic> RepContext::eleft_coords(
    const TriangularElement& x) {
  ensure_eleft();
  SpecElement sx = sp_->specialize(x);
  size_t nc = eleft_col_index_.size();
  CVec full(nc, Cyclotomic(0));
  for (const auto& [k, cf] : sx.terms) {
    auto it = eleft_col_index_.find(k);
    if (it == eleft_col_index_.end()) {
      if (cf.is_zero()) continue;
      throw InternalError("element outside the E-left key span");
    }
    full[it->second] = cf;
  }
  size_t d = eleft_rows_.size();
  CVec tj(d);
  for (size_t j = 0; j < d; ++j) tj[j] = full[eleft_pivots_[j]];
  CVec coeffs = mat_vec(eleft_inverse_t_, tj);
  for (size_t col = 0; col < nc; ++col) {
    Cyclotomic acc(0);
    for (size_t i = 0; i < d; ++i) {
      if (coeffs[i].is_zero() || eleft_rows_[i][col].is_zero()) continue;
      acc += coeffs[i] * eleft_rows_[i][col];
    }
    if (acc != full[col]) throw InternalError("element outside the E-left span");
  }
  std::map<SpecKey, Cyclotomic> out;
  for (size_t i = 0; i < d; ++i)
    if (!coeffs[i].is_zero()) out[eleft_keys_[i]] = coeffs[i];
  return out;
}

// --------------------------------------------------------------------------
// WeightModule / FiniteDimAlgebra

std::map<Weight, long> WeightModule::weight_spaces() const {
  std::map<Weight, long> out;
  for (const auto& w : weights) ++out[w];
  return out;
}

FiniteDimAlgebra::FiniteDimAlgebra(RepContext& ctx) : ctx_(ctx) {
  size_t d = ctx_.label_count();
  labels_.reserve(d);
  for (size_t i = 0; i < d; ++i) {
    size_t me, c, mf;
    ctx_.label_split(i, &me, &c, &mf);
    labels_.push_back(Label{ctx_.monomials()[me], ctx_.abar_elements()[c],
                            ctx_.monomials()[mf]});
  }
  unit_ = ctx_.label_index(0, 0, 0);
  if (d <= 64)
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) ctx_.label_product(i, j);
}

const std::vector<Cyclotomic>& FiniteDimAlgebra::product(size_t i, size_t j) {
  return ctx_.label_product(i, j);
}

Matrix<Cyclotomic> FiniteDimAlgebra::left_mult(size_t i) {
  size_t d = dim();
  CMat out(d, CVec(d, Cyclotomic(0)));
  for (size_t j = 0; j < d; ++j) {
    const CVec& p = product(i, j);
    for (size_t k = 0; k < d; ++k) out[k][j] = p[k];
  }
  return out;
}

std::vector<Cyclotomic> FiniteDimAlgebra::augmentation() const {
  size_t d = dim();
  CVec out(d, Cyclotomic(0));
  for (size_t i = 0; i < d; ++i) {
    size_t me, c, mf;
    ctx_.label_split(i, &me, &c, &mf);
    if (me == 0 && mf == 0) out[i] = Cyclotomic(1);
  }
  return out;
}

std::vector<Cyclotomic> FiniteDimAlgebra::gen_coords(char side, size_t k) {
  const auto& roots = ctx_.datum().positive_roots();
  const Root& delta = ctx_.gen_root(k);
  size_t pos = roots.size();
  for (size_t r = 0; r < roots.size(); ++r)
    if (roots[r] == delta) pos = r;
  if (pos == roots.size()) throw InternalError("generator root not positive");
  std::vector<long> m(roots.size(), 0);
  m[pos] = 1;
  size_t mono = ctx_.mono_index(m);
  CVec out(dim(), Cyclotomic(0));
  out[side == 'E' ? ctx_.label_index(mono, 0, 0)
                  : ctx_.label_index(0, 0, mono)] = Cyclotomic(1);
  return out;
}

const Matrix<Cyclotomic>& FiniteDimAlgebra::jacobson_radical() {
  if (radical_) return *radical_;
  size_t d = dim();
  std::vector<CMat> lm(d);
  for (size_t i = 0; i < d; ++i) lm[i] = left_mult(i);
  CMat gram(d, CVec(d, Cyclotomic(0)));
  for (size_t a = 0; a < d; ++a)
    for (size_t b = a; b < d; ++b) {
      Cyclotomic tr(0);
      for (size_t k = 0; k < d; ++k)
        for (size_t j = 0; j < d; ++j) {
          if (lm[a][k][j].is_zero() || lm[b][j][k].is_zero()) continue;
          tr += lm[a][k][j] * lm[b][j][k];
        }
      gram[a][b] = tr;
      gram[b][a] = tr;
    }
  radical_ = nullspace(gram);
  return *radical_;
}

Cyclotomic FiniteDimAlgebra::structure_constant(size_t i, size_t j, size_t k) {
  return product(i, j)[k];
}

FiniteDimAlgebra build_algebra(RepContext& ctx) {
  FiniteDimAlgebra alg(ctx);
  SmallAlgebraCard card = cardinalities(ctx.datum(), ctx.p(), ctx.x());
  if (Integer((long)alg.dim()) != card.dim_ubar)
    throw InternalError("algebra dimension disagrees with the cardinality formula");
  return alg;
}

// --------------------------------------------------------------------------
// module constructions

WeightModule baby_verma(RepContext& ctx, const Weight& lam) {
  if (!ctx.x().contains(lam))
    throw NotInCharacterLattice("baby Verma weight outside X: " +
                                weight_str(lam));
  const auto& monos = ctx.monomials();
  size_t d = monos.size();
  WeightModule m;
  m.name = "M(" + weight_str(lam) + ")";
  for (size_t j = 0; j < d; ++j)
    m.weights.push_back(weight_add(
        lam, qdeg_to_weight(ctx.datum(), ctx.mono_degree(monos[j]))));
  for (char side : {'E', 'F'}) {
    auto& dst = side == 'E' ? m.act_e : m.act_f;
    for (size_t k = 0; k < ctx.gen_count(); ++k) {
      CMat act(d, CVec(d, Cyclotomic(0)));
      const TriangularElement& g = side == 'E' ? ctx.bold_e(k) : ctx.f_gen(k);
      for (size_t j = 0; j < d; ++j) {
        TriangularElement prod = ctx.engine().multiply(
            g, ctx.spec().pbw_monomial('E', monos[j], true));
        for (const auto& [key, cf] : ctx.eleft_coords(prod)) {
          if (!vec_is_zero(key.fexp)) continue;  // F annihilates the vacuum
          act[ctx.mono_index(key.eexp)][j] += cf * ctx.qnu(key.knu, lam);
        }
      }
      dst.push_back(std::move(act));
    }
  }
  return m;
}

WeightModule baby_verma_highest(RepContext& ctx, const Weight& lam) {
  if (!ctx.x().contains(lam))
    throw NotInCharacterLattice("baby Verma weight outside X: " +
                                weight_str(lam));
  const auto& monos = ctx.monomials();
  size_t d = monos.size();
  WeightModule m;
  m.name = "Mhi(" + weight_str(lam) + ")";
  for (size_t j = 0; j < d; ++j)
    m.weights.push_back(weight_sub(
        lam, qdeg_to_weight(ctx.datum(), ctx.mono_degree(monos[j]))));
  for (char side : {'E', 'F'}) {
    auto& dst = side == 'E' ? m.act_e : m.act_f;
    for (size_t k = 0; k < ctx.gen_count(); ++k) {
      CMat act(d, CVec(d, Cyclotomic(0)));
      const TriangularElement& g = side == 'E' ? ctx.bold_e(k) : ctx.f_gen(k);
      for (size_t j = 0; j < d; ++j) {
        TriangularElement prod = ctx.engine().multiply(
            g, ctx.spec().pbw_monomial('F', monos[j], true));
        SpecElement sx = ctx.spec().specialize(prod);
        for (const auto& [key, cf] : sx.terms) {
          if (!vec_is_zero(key.eexp)) continue;  // E annihilates the top
          act[ctx.mono_index(key.fexp)][j] += cf * ctx.qnu(key.knu, lam);
        }
      }
      dst.push_back(std::move(act));
    }
  }
  return m;
}

namespace {

std::vector<CMat> all_actions(const WeightModule& m) {
  std::vector<CMat> out = m.act_e;
  out.insert(out.end(), m.act_f.begin(), m.act_f.end());
  return out;
}

// index of the unique top (dominating) weight line; NotCyclic otherwise
size_t top_index(RepContext& ctx, const WeightModule& m) {
  std::set<Weight> distinct(m.weights.begin(), m.weights.end());
  std::vector<Weight> tops;
  for (const Weight& mu : distinct) {
    bool dominates = true;
    for (const Weight& w : m.weights) {
      try {
        std::vector<long> qc = root_coords(ctx.datum(), weight_sub(mu, w));
        for (long v : qc)
          if (v < 0) dominates = false;
      } catch (const OutsideRootLattice&) {
        dominates = false;
      }
      if (!dominates) break;
    }
    if (dominates) tops.push_back(mu);
  }
  if (tops.size() != 1)
    throw NotCyclic("module has no unique top weight");
  size_t idx = m.dim();
  for (size_t i = 0; i < m.dim(); ++i)
    if (m.weights[i] == tops[0]) {
      if (idx != m.dim()) throw NotCyclic("top weight space is not a line");
      idx = i;
    }
  return idx;
}

}  // namespace

Matrix<Cyclotomic> maximal_submodule(RepContext& ctx, const WeightModule& m) {
  size_t d = m.dim();
  size_t top = top_index(ctx, m);
  std::vector<CMat> acts = all_actions(m);
  // cyclicity from the top line
  {
    CMat span;
    std::vector<size_t> piv;
    CVec v0(d, Cyclotomic(0));
    v0[top] = Cyclotomic(1);
    std::vector<CVec> queue{v0};
    while (!queue.empty()) {
      CVec v = reduce_by_rref(span, piv, queue.back());
      queue.pop_back();
      size_t pc = d;
      for (size_t j = 0; j < d; ++j)
        if (!v[j].is_zero()) {
          pc = j;
          break;
        }
      if (pc == d) continue;
      Cyclotomic inv = v[pc].inv();
      for (auto& e : v) e *= inv;
      for (size_t t = 0; t < span.size(); ++t) {
        Cyclotomic f = span[t][pc];
        if (f.is_zero()) continue;
        for (size_t j = 0; j < d; ++j) span[t][j] -= f * v[j];
      }
      for (const auto& g : acts) queue.push_back(apply_matrix(g, v));
      span.push_back(std::move(v));
      piv.push_back(pc);
    }
    if (span.size() != d)
      throw NotCyclic("top weight vector does not generate the module");
  }
  // fixed point S <- {v in S : g v in S for all g}
  CMat s;
  for (size_t i = 0; i < d; ++i) {
    if (i == top) continue;
    CVec row(d, Cyclotomic(0));
    row[i] = Cyclotomic(1);
    s.push_back(std::move(row));
  }
  for (size_t iter = 0; iter <= d + 1; ++iter) {
    if (iter == d + 1)
      throw InternalError("maximal submodule iteration did not converge");
    CMat scopy = s;
    std::vector<size_t> spiv = rref(scopy);
    s.assign(scopy.begin(), scopy.begin() + (long)spiv.size());
    size_t r = s.size();
    if (r == 0) break;
    // constraints: coefficients x over rows of s with g (x s) in span(s)
    CMat cons;
    for (const auto& g : acts) {
      for (size_t t = 0; t < r; ++t) {
        CVec img = reduce_by_rref(s, spiv, apply_matrix(g, s[t]));
        cons.push_back(std::move(img));  // row t: residual of g s_t
      }
      // x satisfies sum_t x_t residual_t = 0
    }
    // build the linear system over x: one equation per coordinate per gen
    CMat eqs;
    size_t ng = acts.size();
    for (size_t gidx = 0; gidx < ng; ++gidx)
      for (size_t col = 0; col < d; ++col) {
        CVec row(r, Cyclotomic(0));
        bool nz = false;
        for (size_t t = 0; t < r; ++t) {
          row[t] = cons[gidx * r + t][col];
          nz = nz || !row[t].is_zero();
        }
        if (nz) eqs.push_back(std::move(row));
      }
    if (eqs.empty()) break;  // already stable
    CMat xs = nullspace(eqs);
    CMat next;
    for (const auto& x : xs) {
      CVec v(d, Cyclotomic(0));
      for (size_t t = 0; t < r; ++t) {
        if (x[t].is_zero()) continue;
        for (size_t j = 0; j < d; ++j) v[j] += x[t] * s[t][j];
      }
      next.push_back(std::move(v));
    }
    if (next.size() == s.size()) {
      s = std::move(next);
      break;
    }
    s = std::move(next);
  }
  return graded_rows(m.weights, s);
}

namespace {

Weight row_weight(const std::vector<Weight>& weights, const CVec& row) {
  const Weight* w = nullptr;
  for (size_t j = 0; j < row.size(); ++j) {
    if (row[j].is_zero()) continue;
    if (w && *w != weights[j])
      throw InputError("subspace row is not weight-homogeneous");
    w = &weights[j];
  }
  if (!w) throw InputError("zero row in subspace basis");
  return *w;
}

}  // namespace

WeightModule submodule(RepContext& ctx, const WeightModule& m,
                       const Matrix<Cyclotomic>& rows_in,
                       const std::string& name) {
  CMat rows = graded_rows(m.weights, rows_in);
  std::vector<size_t> piv;
  {
    CMat copy = rows;
    piv = rref(copy);
    rows = copy;
  }
  size_t r = rows.size();
  WeightModule out;
  out.name = name;
  for (size_t t = 0; t < r; ++t) out.weights.push_back(row_weight(m.weights, rows[t]));
  std::vector<CMat> acts = all_actions(m);
  size_t ng = ctx.gen_count();
  for (size_t gidx = 0; gidx < acts.size(); ++gidx) {
    CMat act(r, CVec(r, Cyclotomic(0)));
    for (size_t t = 0; t < r; ++t) {
      CVec img = apply_matrix(acts[gidx], rows[t]);
      // rref rows: coefficients read off at the pivot columns
      CVec coeffs(r);
      for (size_t s2 = 0; s2 < r; ++s2) coeffs[s2] = img[piv[s2]];
      CVec rec(img.size(), Cyclotomic(0));
      for (size_t s2 = 0; s2 < r; ++s2)
        for (size_t j = 0; j < img.size(); ++j)
          if (!coeffs[s2].is_zero() && !rows[s2][j].is_zero())
            rec[j] += coeffs[s2] * rows[s2][j];
      if (rec != img) throw InputError("subspace is not action-stable");
      for (size_t s2 = 0; s2 < r; ++s2) act[s2][t] = coeffs[s2];
    }
    (gidx < ng ? out.act_e : out.act_f).push_back(std::move(act));
  }
  return out;
}

WeightModule quotient_module(RepContext& ctx, const WeightModule& m,
                             const Matrix<Cyclotomic>& rows_in,
                             const std::string& name) {
  size_t d = m.dim();
  CMat rows = graded_rows(m.weights, rows_in);
  std::vector<size_t> piv;
  {
    CMat copy = rows;
    piv = rref(copy);
    rows = copy;
  }
  std::vector<bool> is_piv(d, false);
  for (size_t c : piv) is_piv[c] = true;
  std::vector<size_t> basis;
  for (size_t j = 0; j < d; ++j)
    if (!is_piv[j]) basis.push_back(j);
  WeightModule out;
  out.name = name;
  for (size_t j : basis) out.weights.push_back(m.weights[j]);
  std::vector<CMat> acts = all_actions(m);
  size_t ng = ctx.gen_count();
  for (size_t gidx = 0; gidx < acts.size(); ++gidx) {
    size_t r = basis.size();
    CMat act(r, CVec(r, Cyclotomic(0)));
    for (size_t t = 0; t < r; ++t) {
      CVec ej(d, Cyclotomic(0));
      ej[basis[t]] = Cyclotomic(1);
      CVec img = reduce_by_rref(rows, piv, apply_matrix(acts[gidx], ej));
      for (size_t s2 = 0; s2 < r; ++s2) act[s2][t] = img[basis[s2]];
    }
    (gidx < ng ? out.act_e : out.act_f).push_back(std::move(act));
  }
  return out;
}

WeightModule simple_module(RepContext& ctx, const Weight& lam) {
  WeightModule verma = baby_verma_highest(ctx, lam);
  CMat rad = maximal_submodule(ctx, verma);
  return quotient_module(ctx, verma, rad, "L(" + weight_str(lam) + ")");
}

WeightModule contravariant_dual(RepContext& ctx, const WeightModule& m) {
  size_t d = m.dim();
  WeightModule out;
  out.name = "dual(" + m.name + ")";
  for (const auto& w : m.weights) out.weights.push_back(weight_scale(-1, w));
  for (size_t k = 0; k < ctx.gen_count(); ++k) {
    std::vector<long> dq = ctx.gen_root(k).q_coords;
    // S(K_d E_d) = -K_{-2d} (K_d E_d) K_{-d};  S(F_d) = -F_d K_d
    CMat se(d, CVec(d, Cyclotomic(0)));
    CMat sf(d, CVec(d, Cyclotomic(0)));
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) {
        if (!m.act_e[k][i][j].is_zero())
          se[i][j] = -(ctx.qnu(qvec_neg(qvec_add(dq, dq)), m.weights[i]) *
                       m.act_e[k][i][j] * ctx.qnu(qvec_neg(dq), m.weights[j]));
        if (!m.act_f[k][i][j].is_zero())
          sf[i][j] = -(m.act_f[k][i][j] * ctx.qnu(dq, m.weights[j]));
      }
    CMat de(d, CVec(d, Cyclotomic(0)));
    CMat df(d, CVec(d, Cyclotomic(0)));
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) {
        de[i][j] = se[j][i];
        df[i][j] = sf[j][i];
      }
    out.act_e.push_back(std::move(de));
    out.act_f.push_back(std::move(df));
  }
  return out;
}

WeightModule rind(RepContext& ctx, const Weight& lam) {
  WeightModule v = baby_verma(ctx, weight_scale(-1, lam));
  WeightModule out = contravariant_dual(ctx, v);
  out.name = "Rind(" + weight_str(lam) + ")";
  return out;
}

WeightModule steinberg_module(RepContext& ctx) {
  Weight rho = rho_l_in(ctx.datum(), ctx.p(), ctx.x());
  WeightModule st = simple_module(ctx, rho);
  st.name = "St";
  return st;
}

WeightModule tensor_product(RepContext& ctx, const WeightModule& a,
                            const WeightModule& b) {
  size_t da = a.dim(), db = b.dim(), d = da * db;
  WeightModule out;
  out.name = "(" + a.name + ")x(" + b.name + ")";
  out.weights.reserve(d);
  for (size_t i = 0; i < da; ++i)
    for (size_t j = 0; j < db; ++j)
      out.weights.push_back(weight_add(a.weights[i], b.weights[j]));
  for (size_t k = 0; k < ctx.gen_count(); ++k) {
    std::vector<long> dq = ctx.gen_root(k).q_coords;
    std::vector<long> d2q = qvec_add(dq, dq);
    CMat ae(d, CVec(d, Cyclotomic(0)));
    CMat af(d, CVec(d, Cyclotomic(0)));
    for (size_t i = 0; i < da; ++i)
      for (size_t j = 0; j < db; ++j) {
        size_t col = i * db + j;
        // Delta(bold) = bold (x) K + K^2 (x) bold
        for (size_t i2 = 0; i2 < da; ++i2)
          if (!a.act_e[k][i2][i].is_zero())
            ae[i2 * db + j][col] +=
                a.act_e[k][i2][i] * ctx.qnu(dq, b.weights[j]);
        for (size_t j2 = 0; j2 < db; ++j2)
          if (!b.act_e[k][j2][j].is_zero())
            ae[i * db + j2][col] +=
                ctx.qnu(d2q, a.weights[i]) * b.act_e[k][j2][j];
        // Delta(F) = F (x) K^{-1} + 1 (x) F
        for (size_t i2 = 0; i2 < da; ++i2)
          if (!a.act_f[k][i2][i].is_zero())
            af[i2 * db + j][col] +=
                a.act_f[k][i2][i] * ctx.qnu(qvec_neg(dq), b.weights[j]);
        for (size_t j2 = 0; j2 < db; ++j2)
          if (!b.act_f[k][j2][j].is_zero())
            af[i * db + j2][col] += b.act_f[k][j2][j];
      }
    out.act_e.push_back(std::move(ae));
    out.act_f.push_back(std::move(af));
  }
  return out;
}

WeightModule character_module(RepContext& ctx, const Weight& lam) {
  if (!ctx.x().contains(lam))
    throw NotInCharacterLattice("character weight outside X");
  for (int j = 0; j < ctx.datum().rank(); ++j) {
    long lj = ctx.p().l_simple(ctx.datum(), j);
    if (ctx.datum().pairing(ctx.datum().simple_root_obj(j), lam) % lj != 0)
      throw InputError("weight does not define a one-dimensional module");
  }
  WeightModule out;
  out.name = "k(" + weight_str(lam) + ")";
  out.weights.push_back(lam);
  for (size_t k = 0; k < ctx.gen_count(); ++k) {
    out.act_e.push_back(CMat(1, CVec(1, Cyclotomic(0))));
    out.act_f.push_back(CMat(1, CVec(1, Cyclotomic(0))));
  }
  return out;
}

WeightModule shift_module(RepContext& ctx, const WeightModule& m,
                          const Weight& lam1) {
  if (!ctx.xstar().contains(lam1))
    throw InputError("grading shift must lie in X*");
  WeightModule out = m;
  out.name = m.name + "+" + weight_str(lam1);
  for (auto& w : out.weights) w = weight_add(w, lam1);
  return out;
}

WeightModule regular_module(FiniteDimAlgebra& alg) {
  // The label basis does not diagonalize the left torus action (the trailing
  // chi_c shifts under right multiplication), so the left regular module is
  // graded through the idempotent basis v_{me,mu,mf} = B F p_mu with
  // p_mu = |A|^{-1} sum_c chi_c(mu)^{-1} chi_c: left multiplication preserves
  // the right idempotent, and chi acts on v by chi(Q-degree + mu).
  RepContext& ctx = alg.ctx();
  size_t d = alg.dim();
  size_t na = ctx.abar_order();
  // restricted representative per Abar class
  std::vector<Weight> rep(na);
  std::vector<bool> have(na, false);
  for (const Weight& lam0 : enumerate_restricted(ctx.datum(), ctx.p())) {
    if (!ctx.x().contains(lam0)) continue;
    size_t idx = ctx.abar_index(ctx.abar_coords(lam0));
    if (have[idx]) throw InternalError("restricted box maps onto Abar unevenly");
    rep[idx] = lam0;
    have[idx] = true;
  }
  for (bool h : have)
    if (!h) throw InternalError("restricted box misses an Abar class");

  WeightModule out;
  out.name = "regular";
  Cyclotomic inv_a = Cyclotomic(1, Rational(1, (long)na));
  // v_n in label coords and labels in v coords, blockwise in the c index
  for (size_t i = 0; i < d; ++i) {
    size_t me, mu, mf;
    ctx.label_split(i, &me, &mu, &mf);
    std::vector<long> deg = qvec_add(
        ctx.mono_degree(ctx.monomials()[me]),
        qvec_neg(ctx.mono_degree(ctx.monomials()[mf])));
    out.weights.push_back(weight_add(qdeg_to_weight(ctx.datum(), deg), rep[mu]));
  }
  auto chi_at = [&](size_t c, const Weight& w) {
    return ctx.abar_char(ctx.abar_elements()[c], w);
  };
  for (char side : {'E', 'F'}) {
    auto& dst = side == 'E' ? out.act_e : out.act_f;
    for (size_t k = 0; k < ctx.gen_count(); ++k) {
      CMat act(d, CVec(d, Cyclotomic(0)));
      for (size_t me = 0; me < ctx.monomials().size(); ++me)
        for (size_t mf = 0; mf < ctx.monomials().size(); ++mf) {
          Weight phi = qdeg_to_weight(
              ctx.datum(), ctx.mono_degree(ctx.monomials()[mf]));
          for (size_t mu = 0; mu < na; ++mu) {
            size_t col = ctx.label_index(me, mu, mf);
            // v_{me,mu,mf} = |A|^{-1} sum_c chi_c(mu)^{-1} chi_c(phi) label_c
            CVec acc(d, Cyclotomic(0));
            for (size_t c = 0; c < na; ++c) {
              Cyclotomic fac = inv_a * ctx.conj(chi_at(c, rep[mu])) *
                               chi_at(c, phi);
              const CVec& p =
                  ctx.gen_label_product(side, k, ctx.label_index(me, c, mf));
              for (size_t t = 0; t < d; ++t)
                if (!p[t].is_zero()) acc[t] += fac * p[t];
            }
            // back to the idempotent basis:
            // label(me',c,mf') = sum_mu chi_c(mu - phi') v_{me',mu,mf'}
            for (size_t t = 0; t < d; ++t) {
              if (acc[t].is_zero()) continue;
              size_t me2, c2, mf2;
              ctx.label_split(t, &me2, &c2, &mf2);
              Weight phi2 = qdeg_to_weight(
                  ctx.datum(), ctx.mono_degree(ctx.monomials()[mf2]));
              for (size_t mu2 = 0; mu2 < na; ++mu2) {
                Cyclotomic fac = chi_at(c2, weight_sub(rep[mu2], phi2));
                if (fac.is_zero()) continue;
                act[ctx.label_index(me2, mu2, mf2)][col] += acc[t] * fac;
              }
            }
          }
        }
      dst.push_back(std::move(act));
    }
  }
  return out;
}

Matrix<Cyclotomic> label_action(RepContext& ctx, const WeightModule& m,
                                size_t label) {
  size_t me, c, mf;
  ctx.label_split(label, &me, &c, &mf);
  size_t d = m.dim();
  auto word_op = [&](char side, const RepContext::WordExpansion& exp) {
    CMat acc(d, CVec(d, Cyclotomic(0)));
    for (const auto& [word, coeff] : exp) {
      CMat op = identity_matrix<Cyclotomic>(d);
      for (int g : word)
        op = mat_mul(op, side == 'E' ? m.act_e[(size_t)g] : m.act_f[(size_t)g]);
      for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
          if (!op[i][j].is_zero()) acc[i][j] += coeff * op[i][j];
    }
    return acc;
  };
  CMat be = word_op('E', ctx.bold_expansion(me));
  CMat ff = word_op('F', ctx.f_expansion(mf));
  const auto& cvec = ctx.abar_elements()[c];
  CMat chi(d, CVec(d, Cyclotomic(0)));
  for (size_t j = 0; j < d; ++j) chi[j][j] = ctx.abar_char(cvec, m.weights[j]);
  return mat_mul(be, mat_mul(chi, ff));
}

Matrix<Cyclotomic> coords_action(RepContext& ctx, const WeightModule& m,
                                 const std::vector<Cyclotomic>& coords) {
  size_t d = m.dim();
  CMat acc(d, CVec(d, Cyclotomic(0)));
  for (size_t l = 0; l < coords.size(); ++l) {
    if (coords[l].is_zero()) continue;
    CMat op = label_action(ctx, m, l);
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j)
        if (!op[i][j].is_zero()) acc[i][j] += coords[l] * op[i][j];
  }
  return acc;
}

Matrix<Cyclotomic> socle_rows(FiniteDimAlgebra& alg, const WeightModule& m) {
  RepContext& ctx = alg.ctx();
  const CMat& rad = alg.jacobson_radical();
  size_t d = m.dim();
  CMat stacked;
  for (const auto& r : rad) {
    CMat op = coords_action(ctx, m, r);
    for (auto& row : op) stacked.push_back(std::move(row));
  }
  CMat ker = stacked.empty() ? identity_matrix<Cyclotomic>(d)
                             : nullspace(stacked);
  return graded_rows(m.weights, ker);
}

WeightModule socle(FiniteDimAlgebra& alg, const WeightModule& m) {
  return submodule(alg.ctx(), m, socle_rows(alg, m), "socle(" + m.name + ")");
}

WeightModule cosocle(FiniteDimAlgebra& alg, const WeightModule& m) {
  RepContext& ctx = alg.ctx();
  const CMat& rad = alg.jacobson_radical();
  size_t d = m.dim();
  CMat jm;
  for (const auto& r : rad) {
    CMat op = coords_action(ctx, m, r);
    for (size_t j = 0; j < d; ++j) {
      CVec col(d);
      bool nz = false;
      for (size_t i = 0; i < d; ++i) {
        col[i] = op[i][j];
        nz = nz || !col[i].is_zero();
      }
      if (nz) jm.push_back(std::move(col));
    }
  }
  return quotient_module(ctx, m, jm, "cosocle(" + m.name + ")");
}

Matrix<Cyclotomic> invariants_subspace(RepContext& ctx, const WeightModule& m) {
  size_t d = m.dim();
  CMat stacked;
  for (const auto& g : all_actions(m))
    for (const auto& row : g) stacked.push_back(row);
  CMat ker = stacked.empty() ? identity_matrix<Cyclotomic>(d)
                             : nullspace(stacked);
  CMat graded = graded_rows(m.weights, ker);
  CMat out;
  for (auto& row : graded)
    if (ctx.xstar().contains(row_weight(m.weights, row)))
      out.push_back(std::move(row));
  return out;
}

namespace {

// box reduction lam = lam0 + lam1 with lam0 restricted (floor-mod, valid for
// arbitrary weights) and lam1 in P*
SteinbergSplit box_split(RepContext& ctx, const Weight& lam) {
  int n = ctx.datum().rank();
  SteinbergSplit s;
  s.lambda0.assign(n, 0);
  s.lambda1.assign(n, 0);
  for (int j = 0; j < n; ++j) {
    long l = ctx.p().l_simple(ctx.datum(), j);
    s.lambda0[j] = ((lam[j] % l) + l) % l;
    s.lambda1[j] = lam[j] - s.lambda0[j];
  }
  return s;
}

// unique restricted representative of the Abar class of w
Weight restricted_rep(RepContext& ctx, const Weight& w) {
  Weight lam0 = box_split(ctx, w).lambda0;
  if (!ctx.x().contains(lam0))
    throw InternalError("restricted representative escapes X");
  return lam0;
}

}  // namespace

WeightModule lift_grading(RepContext& ctx, const WeightModule& m) {
  WeightModule out = m;
  out.name = "lift(" + m.name + ")";
  for (auto& w : out.weights) w = restricted_rep(ctx, w);
  // Abar-compatibility of the actions with the lifted grading
  for (size_t k = 0; k < ctx.gen_count(); ++k) {
    Weight delta = qdeg_to_weight(ctx.datum(), ctx.gen_root(k).q_coords);
    for (size_t i = 0; i < out.dim(); ++i)
      for (size_t j = 0; j < out.dim(); ++j) {
        if (!out.act_e[k][i][j].is_zero() &&
            !ctx.xstar().contains(weight_sub(
                weight_sub(out.weights[i], out.weights[j]), delta)))
          throw InputError("grading data incompatible with the E action");
        if (!out.act_f[k][i][j].is_zero() &&
            !ctx.xstar().contains(weight_add(
                weight_sub(out.weights[i], out.weights[j]), delta)))
          throw InputError("grading data incompatible with the F action");
      }
  }
  return out;
}

WeightModule reduce_grading(RepContext& ctx, const WeightModule& m) {
  WeightModule out = m;
  out.name = "reduce(" + m.name + ")";
  for (auto& w : out.weights) w = restricted_rep(ctx, w);
  return out;
}

std::vector<Matrix<Cyclotomic>> hom_space(RepContext& ctx,
                                          const WeightModule& m,
                                          const WeightModule& n) {
  size_t dm = m.dim(), dn = n.dim();
  std::vector<std::pair<size_t, size_t>> pos;  // (i in N, j in M)
  for (size_t i = 0; i < dn; ++i)
    for (size_t j = 0; j < dm; ++j)
      if (n.weights[i] == m.weights[j]) pos.push_back({i, j});
  size_t u = pos.size();
  if (u == 0) return {};
  std::vector<CMat> am = all_actions(m), an = all_actions(n);
  CMat rows;
  for (size_t g = 0; g < am.size(); ++g) {
    // (rho_N(g) T - T rho_M(g))[i][j] = 0
    for (size_t i = 0; i < dn; ++i)
      for (size_t j = 0; j < dm; ++j) {
        CVec row(u, Cyclotomic(0));
        bool nz = false;
        for (size_t t = 0; t < u; ++t) {
          auto [r, c] = pos[t];
          Cyclotomic coeff(0);
          if (c == j && !an[g][i][r].is_zero()) coeff += an[g][i][r];
          if (r == i && !am[g][c][j].is_zero()) coeff -= am[g][c][j];
          row[t] = coeff;
          nz = nz || !coeff.is_zero();
        }
        if (nz) rows.push_back(std::move(row));
      }
  }
  CMat sol = rows.empty() ? identity_matrix<Cyclotomic>(u) : nullspace(rows);
  std::vector<CMat> out;
  for (const auto& x : sol) {
    CMat t(dn, CVec(dm, Cyclotomic(0)));
    for (size_t i = 0; i < u; ++i) t[pos[i].first][pos[i].second] = x[i];
    out.push_back(std::move(t));
  }
  return out;
}

std::optional<Matrix<Cyclotomic>> module_iso_test(RepContext& ctx,
                                                  const WeightModule& a,
                                                  const WeightModule& b) {
  if (a.dim() != b.dim()) return std::nullopt;
  if (a.weight_spaces() != b.weight_spaces()) return std::nullopt;
  std::vector<CMat> homs = hom_space(ctx, a, b);
  if (homs.empty()) return std::nullopt;
  size_t d = a.dim();
  for (const auto& h : homs)
    if (mat_rank(h) == d) return h;
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> dist(-4, 4);
  for (int trial = 0; trial < 60; ++trial) {
    CMat t(d, CVec(d, Cyclotomic(0)));
    for (const auto& h : homs) {
      int c = dist(rng);
      if (c == 0) continue;
      for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
          if (!h[i][j].is_zero()) t[i][j] += Cyclotomic(c) * h[i][j];
    }
    if (mat_rank(t) == d) return t;
  }
  return std::nullopt;
}

// --------------------------------------------------------------------------
// Ext^1

namespace {

struct Unknown {
  char side;
  size_t k;
  size_t r, c;  // target row in N, source column in M
};

long label_wdeg(RepContext& ctx, size_t label) {
  size_t me, c, mf;
  ctx.label_split(label, &me, &c, &mf);
  const auto& roots = ctx.datum().positive_roots();
  long w = 0;
  for (size_t t = 0; t < roots.size(); ++t)
    w += (ctx.monomials()[me][t] + ctx.monomials()[mf][t]) * roots[t].height();
  if (!vec_is_zero(ctx.abar_elements()[c])) w += 1;
  return w;
}

}  // namespace

ExtReport ext1(RepContext& ctx, const WeightModule& m, const WeightModule& n,
               long degree_window) {
  size_t dm = m.dim(), dn = n.dim();
  size_t d = ctx.label_count();
  size_t ng = ctx.gen_count();

  // unknowns: graded entries of delta(g), degree +delta for bold E, -delta
  // for F
  std::vector<Unknown> unk;
  std::vector<Weight> deltas;
  for (size_t k = 0; k < ng; ++k)
    deltas.push_back(qdeg_to_weight(ctx.datum(), ctx.gen_root(k).q_coords));
  for (size_t k = 0; k < ng; ++k) {
    for (size_t r = 0; r < dn; ++r)
      for (size_t c = 0; c < dm; ++c) {
        if (n.weights[r] == weight_add(m.weights[c], deltas[k]))
          unk.push_back({'E', k, r, c});
        if (n.weights[r] == weight_sub(m.weights[c], deltas[k]))
          unk.push_back({'F', k, r, c});
      }
  }
  size_t u = unk.size();

  long maxw = 0;
  std::vector<long> wdegs(d);
  for (size_t l = 0; l < d; ++l) {
    wdegs[l] = label_wdeg(ctx, l);
    maxw = std::max(maxw, wdegs[l]);
  }
  long d0 = degree_window > 0 ? degree_window : maxw + 1;

  ExtReport report;
  report.stabilization_degree = d0;
  if (u == 0) return report;

  // T_lin[label][unknown] via Leibniz along the label's word expansions
  std::vector<std::vector<CMat>> tlin(
      d, std::vector<CMat>(u, CMat(dn, CVec(dm, Cyclotomic(0)))));
  std::vector<CMat> rho_m(d);
  for (size_t l = 0; l < d; ++l) {
    rho_m[l] = label_action(ctx, m, l);
    size_t me, cc, mf;
    ctx.label_split(l, &me, &cc, &mf);
    const auto& cvec = ctx.abar_elements()[cc];
    for (const auto& [we, ce] : ctx.bold_expansion(me))
      for (const auto& [wf, cf] : ctx.f_expansion(mf)) {
        Cyclotomic coeff = ce * cf;
        // letters: E word, chi_c, F word; chi has zero derivative
        struct Letter {
          char kind;  // 'E', 'F', or 'C'
          size_t g;
        };
        std::vector<Letter> seq;
        for (int g : we) seq.push_back({'E', (size_t)g});
        seq.push_back({'C', 0});
        for (int g : wf) seq.push_back({'F', (size_t)g});
        size_t len = seq.size();
        auto op_on = [&](const WeightModule& mod, const Letter& lt) {
          if (lt.kind == 'E') return mod.act_e[lt.g];
          if (lt.kind == 'F') return mod.act_f[lt.g];
          size_t dd = mod.dim();
          CMat chi(dd, CVec(dd, Cyclotomic(0)));
          for (size_t j = 0; j < dd; ++j)
            chi[j][j] = ctx.abar_char(cvec, mod.weights[j]);
          return chi;
        };
        std::vector<CMat> suf(len + 1);
        suf[len] = identity_matrix<Cyclotomic>(dm);
        for (size_t i = len; i-- > 0;)
          suf[i] = mat_mul(op_on(m, seq[i]), suf[i + 1]);
        CMat pre = identity_matrix<Cyclotomic>(dn);
        for (size_t i = 0; i < len; ++i) {
          if (seq[i].kind != 'C') {
            for (size_t t = 0; t < u; ++t) {
              if (unk[t].side != seq[i].kind || unk[t].k != seq[i].g) continue;
              // coeff * pre[:, r] (x) suf[i+1][c, :]
              for (size_t a = 0; a < dn; ++a) {
                if (pre[a][unk[t].r].is_zero()) continue;
                Cyclotomic f = coeff * pre[a][unk[t].r];
                for (size_t b = 0; b < dm; ++b)
                  if (!suf[i + 1][unk[t].c][b].is_zero())
                    tlin[l][t][a][b] += f * suf[i + 1][unk[t].c][b];
              }
            }
          }
          pre = mat_mul(pre, op_on(n, seq[i]));
        }
      }
  }

  // constraint rows tagged by the source label's word-degree
  std::vector<std::pair<long, CVec>> tagged;
  std::set<CVec> seen;
  for (char side : {'E', 'F'}) {
    for (size_t k = 0; k < ng; ++k) {
      const CMat& gn = side == 'E' ? n.act_e[k] : n.act_f[k];
      const CMat& gm = side == 'E' ? m.act_e[k] : m.act_f[k];
      for (size_t b = 0; b < d; ++b) {
        if (wdegs[b] >= d0 + 1) continue;
        const CVec& p = ctx.gen_label_product(side, k, b);
        // per unknown: sum_l p_l T(b_l) - rho_N(g) T(b) - delta(g) rho_M(b)
        std::vector<CMat> lhs(u, CMat(dn, CVec(dm, Cyclotomic(0))));
        for (size_t l = 0; l < d; ++l) {
          if (p[l].is_zero()) continue;
          for (size_t t = 0; t < u; ++t)
            for (size_t a = 0; a < dn; ++a)
              for (size_t bb = 0; bb < dm; ++bb)
                if (!tlin[l][t][a][bb].is_zero())
                  lhs[t][a][bb] += p[l] * tlin[l][t][a][bb];
        }
        for (size_t t = 0; t < u; ++t) {
          CMat gt = mat_mul(gn, tlin[b][t]);
          for (size_t a = 0; a < dn; ++a)
            for (size_t bb = 0; bb < dm; ++bb)
              if (!gt[a][bb].is_zero()) lhs[t][a][bb] -= gt[a][bb];
          if (unk[t].side == side && unk[t].k == k) {
            // (E_{rc} rho_M(b))[a][bb] = [a == r] rho_M(b)[c][bb]
            for (size_t bb = 0; bb < dm; ++bb)
              if (!rho_m[b][unk[t].c][bb].is_zero())
                lhs[t][unk[t].r][bb] -= rho_m[b][unk[t].c][bb];
          }
        }
        for (size_t a = 0; a < dn; ++a)
          for (size_t bb = 0; bb < dm; ++bb) {
            CVec row(u);
            bool nz = false;
            for (size_t t = 0; t < u; ++t) {
              row[t] = lhs[t][a][bb];
              nz = nz || !row[t].is_zero();
            }
            if (nz && seen.insert(row).second)
              tagged.push_back({wdegs[b], std::move(row)});
          }
      }
    }
  }

  auto solve = [&](long window) -> std::pair<long, CMat> {
    CMat rows;
    for (const auto& [w, row] : tagged)
      if (w < window) rows.push_back(row);
    CMat z = kernel_with_prepass(rows, u);
    // coboundaries from graded degree-zero h
    CMat bnd;
    for (size_t i0 = 0; i0 < dn; ++i0)
      for (size_t j0 = 0; j0 < dm; ++j0) {
        if (n.weights[i0] != m.weights[j0]) continue;
        CVec row(u, Cyclotomic(0));
        bool nz = false;
        for (size_t t = 0; t < u; ++t) {
          const CMat& gn =
              unk[t].side == 'E' ? n.act_e[unk[t].k] : n.act_f[unk[t].k];
          const CMat& gm =
              unk[t].side == 'E' ? m.act_e[unk[t].k] : m.act_f[unk[t].k];
          Cyclotomic coeff(0);
          if (unk[t].c == j0) coeff += gn[unk[t].r][i0];
          if (unk[t].r == i0) coeff -= gm[j0][unk[t].c];
          row[t] = coeff;
          nz = nz || !coeff.is_zero();
        }
        if (nz) bnd.push_back(std::move(row));
      }
    // coboundaries must be cocycles
    for (const auto& br : bnd)
      if (!in_row_span(z, br)) {
        CMat zb = z;
        zb.push_back(br);
        if (mat_rank(zb) > z.size())
          throw InternalError("coboundary escapes the cocycle space");
      }
    long rank_b = (long)mat_rank(bnd);
    long dim = (long)z.size() - rank_b;
    // representatives of a basis modulo coboundaries
    CMat chosen = bnd;
    size_t base = mat_rank(chosen);
    CMat reps;
    for (const auto& zr : z) {
      CMat cand = chosen;
      cand.push_back(zr);
      if (mat_rank(cand) > base + reps.size()) {
        chosen.push_back(zr);
        reps.push_back(zr);
      }
    }
    if ((long)reps.size() != dim)
      throw InternalError("Ext basis extraction mismatch");
    return {dim, reps};
  };

  auto [dim0, reps0] = solve(d0);
  auto [dim1, reps1] = solve(d0 + 1);
  if (dim0 != dim1)
    throw NotStabilized("Ext dimension moved between degree windows " +
                        std::to_string(d0) + " and " + std::to_string(d0 + 1));
  report.dimension = dim1;
  for (const auto& rep : reps1) {
    Cocycle c;
    c.de.assign(ng, CMat(dn, CVec(dm, Cyclotomic(0))));
    c.df.assign(ng, CMat(dn, CVec(dm, Cyclotomic(0))));
    for (size_t t = 0; t < u; ++t) {
      if (rep[t].is_zero()) continue;
      auto& dst = unk[t].side == 'E' ? c.de : c.df;
      dst[unk[t].k][unk[t].r][unk[t].c] = rep[t];
    }
    report.cocycle_basis.push_back(std::move(c));
  }
  return report;
}

std::vector<Weight> candidate_simple_labels(RepContext& ctx,
                                            const WeightModule& m) {
  // border: supp(M) and its shifts by the generator roots
  std::set<Weight> border(m.weights.begin(), m.weights.end());
  for (const auto& w : m.weights)
    for (size_t k = 0; k < ctx.gen_count(); ++k) {
      Weight delta = qdeg_to_weight(ctx.datum(), ctx.gen_root(k).q_coords);
      border.insert(weight_add(w, delta));
      border.insert(weight_sub(w, delta));
    }
  std::set<Weight> out;
  for (const Weight& lam0 : enumerate_restricted(ctx.datum(), ctx.p())) {
    if (!ctx.x().contains(lam0)) continue;
    WeightModule l = simple_module(ctx, lam0);
    std::set<Weight> shifts;
    for (const Weight& b : border)
      for (const Weight& s : l.weights) shifts.insert(weight_sub(b, s));
    for (const Weight& lam1 : shifts) {
      if (!ctx.xstar().contains(lam1)) continue;
      out.insert(weight_add(lam0, lam1));
    }
  }
  return std::vector<Weight>(out.begin(), out.end());
}

namespace {

bool ext_vanishes_against_simples(RepContext& ctx, const WeightModule& m,
                                  bool m_first) {
  std::map<Weight, WeightModule> cache;
  for (const Weight& lam : candidate_simple_labels(ctx, m)) {
    SteinbergSplit sp = box_split(ctx, lam);
    auto it = cache.find(sp.lambda0);
    if (it == cache.end())
      it = cache.emplace(sp.lambda0, simple_module(ctx, sp.lambda0)).first;
    WeightModule l = weight_is_zero(sp.lambda1)
                         ? it->second
                         : shift_module(ctx, it->second, sp.lambda1);
    ExtReport r = m_first ? ext1(ctx, m, l) : ext1(ctx, l, m);
    if (r.dimension != 0) return false;
  }
  return true;
}

}  // namespace

bool is_projective(RepContext& ctx, const WeightModule& m) {
  return ext_vanishes_against_simples(ctx, m, true);
}

bool is_injective(RepContext& ctx, const WeightModule& m) {
  return ext_vanishes_against_simples(ctx, m, false);
}

}  // namespace smallq
