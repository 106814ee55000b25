#include "smallq/specialized.hpp"

#include "smallq/errors.hpp"

namespace smallq {

void spec_add(SpecElement& acc, const SpecKey& k, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto it = acc.terms.find(k);
  if (it == acc.terms.end()) {
    acc.terms.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) acc.terms.erase(it);
}

SpecElement spec_add(const SpecElement& a, const SpecElement& b) {
  SpecElement out = a;
  for (auto& [k, c] : b.terms) spec_add(out, k, c);
  return out;
}

SpecElement spec_sub(const SpecElement& a, const SpecElement& b) {
  SpecElement out = a;
  for (auto& [k, c] : b.terms) spec_add(out, k, -c);
  return out;
}

SpecElement spec_scale(const SpecElement& a, const Cyclotomic& c) {
  SpecElement out;
  if (c.is_zero()) return out;
  for (auto& [k, t] : a.terms) out.terms.emplace(k, t * c);
  return out;
}

Specializer::Specializer(TriangularEngine& eng, const Lattice& x)
    : eng_(eng), x_(x), q_(Cyclotomic::zeta(eng.qp().ambient_order())) {
  compute_radical();
}

void Specializer::compute_radical() {
  const CartanDatum& datum = eng_.datum();
  const QuantumParameter& p = eng_.qp();
  int n = datum.rank();
  long big_n = p.ambient_order();
  size_t b = x_.basis().size();

  // q(nu, lam) = zeta_N^{sum_j nu_j e_j d_j lam_j}; the radical is the set of
  // integer nu with A nu = 0 mod N for A[b][j] = e_j d_j lam^{(b)}_j.
  IntMat block(b, std::vector<Integer>(n + b, 0));
  for (size_t r = 0; r < b; ++r) {
    for (int j = 0; j < n; ++j)
      block[r][j] = Integer(p.exponents()[datum.component_of(j)]) *
                    Integer(datum.d(j)) * x_.basis()[r][j];
    block[r][n + r] = big_n;
  }
  IntMat ker = int_kernel(block);  // columns are solutions (nu; t)
  IntMat rows;
  for (size_t c = 0; c < (ker.empty() ? 0 : ker[0].size()); ++c) {
    std::vector<Integer> row(n);
    for (int j = 0; j < n; ++j) row[j] = ker[j][c];
    rows.push_back(std::move(row));
  }
  radical_ = hnf_rows(rows);
  if ((int)radical_.size() != n)
    throw InternalError("torus radical is not full rank");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (radical_[i][j] != 0)
        throw InternalError("torus radical HNF is not upper triangular");
}

std::vector<long> Specializer::torus_class(std::vector<long> nu) const {
  // Ascending order keeps every already-reduced coordinate final: row i only
  // touches columns >= i, so nu[i] lands in [0, piv_i) and stays there.  The
  // box is a fundamental domain of size det R, hence the result is the unique
  // box representative of the class (descending order is not canonical when
  // the HNF has entries above a pivot).
  int n = (int)nu.size();
  for (int i = 0; i < n; ++i) {
    long piv = radical_[i][i].get_si();
    long t = nu[i] >= 0 ? nu[i] / piv : -((-nu[i] + piv - 1) / piv);
    if (t == 0) continue;
    for (int j = i; j < n; ++j) nu[j] -= t * radical_[i][j].get_si();
  }
  return nu;
}

bool Specializer::torus_trivial(const std::vector<long>& nu) const {
  std::vector<long> c = torus_class(nu);
  for (long v : c)
    if (v != 0) return false;
  return true;
}

Cyclotomic Specializer::eval(const RationalFunction& c) const {
  return smallq::specialize(c, q_);
}

TriangularElement Specializer::pbw_monomial(char side, const std::vector<long>& m,
                                            bool divided) {
  TriangularElement out = eng_.one();
  for (size_t k = 0; k < m.size(); ++k) {
    if (m[k] == 0) continue;
    TriangularElement pw = (side == 'E') ? eng_.root_power_e(k, m[k], divided)
                                         : eng_.root_power_f(k, m[k], divided);
    out = eng_.multiply(out, pw);
  }
  return out;
}

TriangularElement Specializer::generic_monomial(const std::vector<long>& fexp,
                                                const std::vector<long>& knu,
                                                const std::vector<long>& eexp) {
  TriangularElement out = pbw_monomial('F', fexp);
  out = eng_.multiply(out, eng_.gen_k(knu));
  return eng_.multiply(out, pbw_monomial('E', eexp));
}

Specializer::PBWDegree& Specializer::degree(char side,
                                            const std::vector<long>& deg) {
  auto key = std::make_pair(side, deg);
  auto it = degrees_.find(key);
  if (it != degrees_.end()) return it->second;

  PBWDegree d;
  auto& alg = eng_.plus();
  d.monomials = alg.kostant().partitions(deg);
  d.basis_words = alg.component(deg).basis_words;
  if (d.monomials.size() != d.basis_words.size())
    throw InternalError("PBW monomial count disagrees with basis size");
  for (size_t i = 0; i < d.basis_words.size(); ++i)
    d.word_index[d.basis_words[i]] = i;

  size_t n = d.monomials.size();
  d.expansion.assign(n, std::vector<RationalFunction>(n, RationalFunction()));
  std::vector<long> zero(eng_.datum().rank(), 0);
  for (size_t r = 0; r < n; ++r) {
    TriangularElement mono = pbw_monomial(side, d.monomials[r], true);
    for (auto& [k, c] : mono.terms) {
      const LetterWord& w = (side == 'E') ? k.eword : k.fword;
      const LetterWord& other = (side == 'E') ? k.fword : k.eword;
      if (!other.empty() || k.knu != zero)
        throw InternalError("PBW monomial is not one-sided");
      d.expansion[r][d.word_index.at(w)] = c;
    }
  }
  return degrees_.emplace(key, std::move(d)).first->second;
}

void Specializer::ensure_solver(PBWDegree& d) {
  if (d.solver_ready) return;
  size_t n = d.expansion.size();
  Matrix<RationalFunction> t(n, std::vector<RationalFunction>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) t[i][j] = d.expansion[j][i];
  d.inverse_t = mat_inverse(t);
  d.solver_ready = true;
}

std::map<SpecKey, RationalFunction> Specializer::generic_coords(
    const TriangularElement& x) {
  int rank = eng_.datum().rank();
  // group terms into blocks of fixed (F-degree, torus class, E-degree)
  using BlockKey = std::tuple<std::vector<long>, std::vector<long>, std::vector<long>>;
  std::map<BlockKey, std::map<std::pair<size_t, size_t>, RationalFunction>> blocks;
  for (auto& [k, c] : x.terms) {
    std::vector<long> fdeg = word_degree(k.fword, rank);
    std::vector<long> edeg = word_degree(k.eword, rank);
    PBWDegree& df = degree('F', fdeg);
    PBWDegree& de = degree('E', edeg);
    size_t fi = df.word_index.at(k.fword);
    size_t ei = de.word_index.at(k.eword);
    auto& cell =
        blocks[{fdeg, torus_class(k.knu), edeg}][{fi, ei}];
    cell += c;
  }

  std::map<SpecKey, RationalFunction> out;
  for (auto& [bk, cells] : blocks) {
    auto& [fdeg, cls, edeg] = bk;
    PBWDegree& df = degree('F', fdeg);
    PBWDegree& de = degree('E', edeg);
    ensure_solver(df);
    ensure_solver(de);
    size_t nf = df.monomials.size(), ne = de.monomials.size();
    // word coordinates -> divided-power PBW coordinates on both sides:
    // B = invT_F * C * invT_E^T
    Matrix<RationalFunction> c(nf, std::vector<RationalFunction>(ne));
    for (auto& [ij, v] : cells) c[ij.first][ij.second] = v;
    for (size_t mf = 0; mf < nf; ++mf) {
      for (size_t me = 0; me < ne; ++me) {
        RationalFunction acc;
        for (size_t i = 0; i < nf; ++i) {
          if (df.inverse_t[mf][i].is_zero()) continue;
          for (size_t j = 0; j < ne; ++j) {
            if (c[i][j].is_zero()) continue;
            acc += df.inverse_t[mf][i] * c[i][j] * de.inverse_t[me][j];
          }
        }
        if (acc.is_zero()) continue;
        out[SpecKey{df.monomials[mf], cls, de.monomials[me]}] = acc;
      }
    }
  }
  return out;
}

const std::map<SpecKey, RationalFunction>& Specializer::key_coords(
    const TriKey& k) {
  auto it = key_coords_.find(k);
  if (it != key_coords_.end()) return it->second;
  int rank = eng_.datum().rank();
  PBWDegree& df = degree('F', word_degree(k.fword, rank));
  PBWDegree& de = degree('E', word_degree(k.eword, rank));
  ensure_solver(df);
  ensure_solver(de);
  size_t fi = df.word_index.at(k.fword);
  size_t ei = de.word_index.at(k.eword);
  std::vector<long> cls = torus_class(k.knu);
  std::map<SpecKey, RationalFunction> coords;
  for (size_t mf = 0; mf < df.monomials.size(); ++mf) {
    if (df.inverse_t[mf][fi].is_zero()) continue;
    for (size_t me = 0; me < de.monomials.size(); ++me) {
      if (de.inverse_t[me][ei].is_zero()) continue;
      coords[SpecKey{df.monomials[mf], cls, de.monomials[me]}] =
          df.inverse_t[mf][fi] * de.inverse_t[me][ei];
    }
  }
  return key_coords_.emplace(k, std::move(coords)).first->second;
}

SpecElement Specializer::specialize(const TriangularElement& x) {
  SpecElement out;
  for (auto& [k, c] : generic_coords(x)) spec_add(out, k, eval(c));
  return out;
}

std::vector<RationalFunction> Specializer::pbw_coords(
    char side, const TriangularElement& x) {
  int rank = eng_.datum().rank();
  std::vector<long> zero(rank, 0), deg;
  for (auto& [k, c] : x.terms) {
    const LetterWord& w = (side == 'E') ? k.eword : k.fword;
    const LetterWord& other = (side == 'E') ? k.fword : k.eword;
    if (!other.empty() || k.knu != zero)
      throw InputError("pbw_coords requires a one-sided element");
    std::vector<long> wd = word_degree(w, rank);
    if (deg.empty())
      deg = wd;
    else if (deg != wd)
      throw InputError("pbw_coords requires a homogeneous element");
  }
  if (deg.empty()) return {};

  PBWDegree& d = degree(side, deg);
  ensure_solver(d);
  std::vector<RationalFunction> wc(d.basis_words.size());
  for (auto& [k, c] : x.terms)
    wc[d.word_index.at((side == 'E') ? k.eword : k.fword)] = c;

  std::vector<RationalFunction> out(wc.size());
  for (size_t i = 0; i < wc.size(); ++i)
    for (size_t j = 0; j < wc.size(); ++j)
      out[i] += d.inverse_t[i][j] * wc[j];
  return out;
}

std::vector<Cyclotomic> Specializer::pbw_specialized(char side,
                                                     const TriangularElement& x) {
  std::vector<RationalFunction> coords = pbw_coords(side, x);
  std::vector<Cyclotomic> out;
  out.reserve(coords.size());
  for (auto& c : coords)
    out.push_back(smallq::specialize(clear_denominators(c), q_));
  return out;
}

}  // namespace smallq
