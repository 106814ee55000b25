#include "smallq/lattice.hpp"

#include "smallq/errors.hpp"
#include "smallq/linalg.hpp"

namespace smallq {

Lattice Lattice::span(const IntMat& generators, int rank) {
  Lattice l;
  l.rank_ = rank;
  l.basis_ = hnf_rows(generators);
  return l;
}

Lattice Lattice::full(int rank) {
  Lattice l;
  l.rank_ = rank;
  l.basis_ = int_identity(rank);
  return l;
}

namespace {

// Rational coefficients of v over the rows of basis (which are linearly
// independent); returns false if v is outside the rational span.
bool rational_coords(const IntMat& basis, const std::vector<Integer>& v,
                     std::vector<Rational>* out) {
  size_t n = basis.size(), m = v.size();
  Matrix<Rational> a(m, std::vector<Rational>(n + 1));
  for (size_t j = 0; j < m; ++j) {
    for (size_t i = 0; i < n; ++i) a[j][i] = Rational(basis[i][j]);
    a[j][n] = Rational(v[j]);
  }
  std::vector<size_t> pivots = rref(a);
  if (!pivots.empty() && pivots.back() == n) return false;
  if (out) {
    out->assign(n, Rational(0));
    for (size_t r = 0; r < pivots.size(); ++r) (*out)[pivots[r]] = a[r][n];
  }
  return true;
}

}  // namespace

bool Lattice::contains(const Weight& v) const {
  std::vector<Integer> iv(v.begin(), v.end());
  std::vector<Rational> c;
  if (!rational_coords(basis_, iv, &c)) return false;
  for (auto& x : c)
    if (x.get_den() != 1) return false;
  return true;
}

bool Lattice::contains(const Lattice& other) const {
  for (auto& row : other.basis_) {
    Weight w(row.size());
    for (size_t i = 0; i < row.size(); ++i) w[i] = row[i].get_si();
    if (!contains(w)) return false;
  }
  return true;
}

IntVec lattice_coords(const Lattice& lat, const Weight& v) {
  std::vector<Integer> iv(v.begin(), v.end());
  std::vector<Rational> c;
  if (!rational_coords(lat.basis(), iv, &c))
    throw NotSublattice("vector outside lattice span");
  IntVec out(c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i].get_den() != 1)
      throw NotSublattice("vector not in lattice " + weight_str(v));
    out[i] = c[i].get_num();
  }
  return out;
}

namespace {

// Matrix C with inner = C * outer (rows); throws NotSublattice when the
// coefficients are not integral.
IntMat change_of_basis(const IntMat& inner, const IntMat& outer) {
  IntMat c(inner.size());
  for (size_t r = 0; r < inner.size(); ++r) {
    std::vector<Rational> coords;
    if (!rational_coords(outer, inner[r], &coords))
      throw NotSublattice("inner lattice outside outer span");
    c[r].resize(coords.size());
    for (size_t i = 0; i < coords.size(); ++i) {
      if (coords[i].get_den() != 1)
        throw NotSublattice("inner lattice not contained in outer");
      c[r][i] = coords[i].get_num();
    }
  }
  return c;
}

}  // namespace

Integer Lattice::index_in(const Lattice& outer) const {
  IntMat c = change_of_basis(basis_, outer.basis_);
  IntMat u, v, d;
  smith_decompose(c, u, v, d);
  size_t nmin = d.empty() ? 0 : std::min(d.size(), d[0].size());
  Integer idx = 1;
  if (basis_.size() < outer.basis_.size())
    throw NotSublattice("inner lattice has smaller rank (infinite index)");
  for (size_t i = 0; i < nmin; ++i) idx *= d[i][i];
  if (idx == 0) throw NotSublattice("degenerate index");
  return idx;
}

std::vector<Integer> Lattice::quotient_invariants_in(const Lattice& outer) const {
  IntMat c = change_of_basis(basis_, outer.basis_);
  return cokernel_invariants(int_transpose(c), outer.basis_.size());
}

Lattice Lattice::intersect(const Lattice& other) const {
  // Kernel method on [B1^T | -B2^T] columns.
  size_t n1 = basis_.size(), n2 = other.basis_.size(), m = rank_;
  IntMat a(m, IntVec(n1 + n2, 0));
  for (size_t i = 0; i < n1; ++i)
    for (size_t j = 0; j < (size_t)m; ++j) a[j][i] = basis_[i][j];
  for (size_t i = 0; i < n2; ++i)
    for (size_t j = 0; j < (size_t)m; ++j) a[j][n1 + i] = -other.basis_[i][j];
  IntMat k = int_kernel(a);  // columns
  size_t dim = k.empty() ? 0 : k[0].size();
  IntMat gens(dim, IntVec(m, 0));
  for (size_t c = 0; c < dim; ++c)
    for (size_t j = 0; j < (size_t)m; ++j)
      for (size_t i = 0; i < n1; ++i) gens[c][j] += k[i][c] * basis_[i][j];
  return Lattice::span(gens, rank_);
}

Lattice Lattice::scaled(long c) const {
  IntMat gens = basis_;
  for (auto& row : gens)
    for (auto& x : row) x *= c;
  return Lattice::span(gens, rank_);
}

Lattice::QuotientPresentation Lattice::quotient_presentation_in(
    const Lattice& outer) const {
  // outer/inner: with inner = C * outer, Smith u C v = d gives
  // outer/inner = sum Z/d_k on the basis rows (v^{-1} * outer) ... we use
  // the transform directly: new outer basis f = v^T-adjusted.
  IntMat c = change_of_basis(basis_, outer.basis_);
  // We want unimodular P (rows transform of outer) with inner spanned by
  // d_k * f_k.  Work with C^T: columns index outer basis.  u (C^T) v = d
  // => f = u * outer works: inner = span rows of C*outer; C^T = u^{-1} d v^{-1}.
  IntMat ct = int_transpose(c);
  IntMat u, v, d;
  smith_decompose(ct, u, v, d);
  // ct maps e_r (inner row r) to its outer-coordinates; u * ct * v = d means
  // with new outer coordinates y = u * x, inner generators become columns of
  // d (times v^{-1} mixing of inner generators, irrelevant for the span).
  // So outer/inner = sum_k Z/d_k with generator f_k = (u^{-1} e_k)?  Careful:
  // y = u*x transforms coordinates, so basis vectors transform by u^{-1}:
  // f_k = sum_j (u^{-1})_{jk} outer_j.  We compute u^{-1} exactly.
  size_t n = outer.basis_.size();
  Matrix<Rational> ur = to_rational(u);
  Matrix<Rational> uinv = mat_inverse(ur);
  QuotientPresentation pres;
  pres.outer_basis = outer.basis_;
  pres.outer_to_coords = u;
  size_t nmin = d.empty() ? 0 : std::min(d.size(), d[0].size());
  for (size_t k = 0; k < n; ++k) {
    Integer dk = (k < nmin) ? d[k][k] : Integer(0);
    if (dk == 0 && k < (size_t)basis_.size()) dk = 0;
    if (k >= nmin || d[k][k] == 0) {
      // Full-rank inner lattices leave no free factors; flag otherwise.
      throw NotSublattice("quotient_presentation: infinite quotient factor");
    }
    pres.divisors.push_back(d[k][k]);
    IntVec f(rank_, 0);
    for (size_t j = 0; j < n; ++j) {
      if (uinv[j][k].get_den() != 1)
        throw InternalError("unimodular inverse not integral");
      Integer cj = uinv[j][k].get_num();
      for (size_t t = 0; t < (size_t)rank_; ++t)
        f[t] += cj * outer.basis_[j][t];
    }
    pres.generators.push_back(f);
  }
  return pres;
}

Lattice root_lattice(const CartanDatum& datum) {
  int n = datum.rank();
  IntMat gens(n, IntVec(n));
  for (int i = 0; i < n; ++i) {
    Weight a = datum.simple_root(i);
    for (int j = 0; j < n; ++j) gens[i][j] = a[j];
  }
  return Lattice::span(gens, n);
}

Lattice weight_lattice(const CartanDatum& datum) {
  return Lattice::full(datum.rank());
}

}  // namespace smallq
