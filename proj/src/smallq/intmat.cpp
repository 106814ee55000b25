#include "smallq/intmat.hpp"

#include <algorithm>

#include "smallq/errors.hpp"

namespace smallq {

IntMat int_identity(size_t n) {
  IntMat m(n, IntVec(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat int_transpose(const IntMat& a) {
  if (a.empty()) return {};
  IntMat t(a[0].size(), IntVec(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

IntMat int_mul(const IntMat& a, const IntMat& b) {
  size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  IntMat c(n, IntVec(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

IntVec int_apply(const IntMat& a, const IntVec& v) {
  IntVec r(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  return r;
}

IntMat hnf_rows(IntMat a) {
  if (a.empty()) return a;
  size_t rows = a.size(), cols = a[0].size(), r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    // Euclidean elimination within column c on rows >= r.
    while (true) {
      size_t piv = rows;
      for (size_t i = r; i < rows; ++i)
        if (a[i][c] != 0 &&
            (piv == rows || abs(a[i][c]) < abs(a[piv][c])))
          piv = i;
      if (piv == rows) break;
      std::swap(a[r], a[piv]);
      bool clean = true;
      for (size_t i = r + 1; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        Integer q = a[i][c] / a[r][c];  // truncated division is fine here
        if (q != 0)
          for (size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
        if (a[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[r][c] == 0) continue;
    if (a[r][c] < 0)
      for (size_t j = 0; j < cols; ++j) a[r][j] = -a[r][j];
    // Reduce the rows above into [0, pivot).
    for (size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[r][c].get_mpz_t());
      if (q != 0)
        for (size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
    }
    ++r;
  }
  a.resize(r);  // drop zero rows
  return a;
}

void smith_decompose(const IntMat& a_in, IntMat& u, IntMat& v, IntMat& d) {
  size_t m = a_in.size(), n = m ? a_in[0].size() : 0;
  u = int_identity(m);
  v = int_identity(n);
  d = a_in;
  size_t nmin = std::min(m, n);
  for (size_t s = 0; s < nmin; ++s) {
    while (true) {
      // Locate the minimal nonzero entry in the trailing block.
      size_t pi = m, pj = n;
      for (size_t i = s; i < m; ++i)
        for (size_t j = s; j < n; ++j)
          if (d[i][j] != 0 && (pi == m || abs(d[i][j]) < abs(d[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == m) break;  // block is zero
      std::swap(d[s], d[pi]);
      std::swap(u[s], u[pi]);
      for (size_t i = 0; i < m; ++i) std::swap(d[i][s], d[i][pj]);
      for (size_t i = 0; i < n; ++i) std::swap(v[i][s], v[i][pj]);

      bool clean = true;
      for (size_t i = s + 1; i < m; ++i) {
        if (d[i][s] == 0) continue;
        Integer q = d[i][s] / d[s][s];
        for (size_t j = 0; j < n; ++j) d[i][j] -= q * d[s][j];
        for (size_t j = 0; j < m; ++j) u[i][j] -= q * u[s][j];
        if (d[i][s] != 0) clean = false;
      }
      for (size_t j = s + 1; j < n; ++j) {
        if (d[s][j] == 0) continue;
        Integer q = d[s][j] / d[s][s];
        for (size_t i = 0; i < m; ++i) d[i][j] -= q * d[i][s];
        for (size_t i = 0; i < n; ++i) v[i][j] -= q * v[i][s];
        if (d[s][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce divisibility d[s][s] | d[i][j] on the trailing block.
      bool divides_all = true;
      for (size_t i = s + 1; i < m && divides_all; ++i)
        for (size_t j = s + 1; j < n && divides_all; ++j)
          if (d[i][j] % d[s][s] != 0) {
            for (size_t t = 0; t < n; ++t) d[s][t] += d[i][t];
            for (size_t t = 0; t < m; ++t) u[s][t] += u[i][t];
            divides_all = false;
          }
      if (divides_all) break;
    }
    if (d[s][s] < 0) {
      for (size_t j = 0; j < n; ++j) d[s][j] = -d[s][j];
      for (size_t j = 0; j < m; ++j) u[s][j] = -u[s][j];
    }
  }
}

std::vector<Integer> cokernel_invariants(const IntMat& a, size_t ambient_rank) {
  IntMat u, v, d;
  smith_decompose(a, u, v, d);
  size_t m = a.size();
  size_t nmin = d.empty() ? 0 : std::min(d.size(), d[0].size());
  std::vector<Integer> inv;
  size_t nonzero = 0;
  for (size_t i = 0; i < nmin; ++i)
    if (d[i][i] != 0) {
      ++nonzero;
      if (d[i][i] > 1) inv.push_back(d[i][i]);
    }
  // Free factors: ambient coordinates not hit at all.
  for (size_t i = nonzero; i < std::max(m, ambient_rank); ++i) inv.push_back(0);
  return inv;
}

IntMat int_kernel(const IntMat& a) {
  IntMat u, v, d;
  smith_decompose(a, u, v, d);
  size_t n = a.empty() ? 0 : a[0].size();
  size_t nmin = d.empty() ? 0 : std::min(d.size(), d[0].size());
  size_t rank = 0;
  for (size_t i = 0; i < nmin; ++i)
    if (d[i][i] != 0) ++rank;
  // Columns of v with index >= rank span the kernel.
  IntMat k(n, IntVec(n - rank, 0));
  for (size_t j = rank; j < n; ++j)
    for (size_t i = 0; i < n; ++i) k[i][j - rank] = v[i][j];
  return k;
}

Matrix<Rational> to_rational(const IntMat& a) {
  Matrix<Rational> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    r[i].reserve(a[i].size());
    for (auto& x : a[i]) r[i].push_back(Rational(x));
  }
  return r;
}

}  // namespace smallq
