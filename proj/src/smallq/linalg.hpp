#pragma once

#include <cstdint>
#include <vector>

#include "smallq/errors.hpp"

namespace smallq {

// Dense exact linear algebra, generic over any field type F supporting
// F(int), +, -, *, /, == and a free function field_is_zero(const F&).
// Used with Rational, RationalFunction, Cyclotomic, and Fp64 coefficients.

template <typename F>
bool field_is_zero(const F& x) {
  return x == F(0);
}

template <typename F>
using Matrix = std::vector<std::vector<F>>;

template <typename F>
Matrix<F> identity_matrix(size_t n) {
  Matrix<F> m(n, std::vector<F>(n, F(0)));
  for (size_t i = 0; i < n; ++i) m[i][i] = F(1);
  return m;
}

template <typename F>
Matrix<F> mat_mul(const Matrix<F>& a, const Matrix<F>& b) {
  size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  Matrix<F> c(n, std::vector<F>(m, F(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (field_is_zero(a[i][t])) continue;
      for (size_t j = 0; j < m; ++j) {
        if (field_is_zero(b[t][j])) continue;
        c[i][j] = c[i][j] + a[i][t] * b[t][j];
      }
    }
  return c;
}

// In-place reduced row echelon form.  Returns the pivot column per row of the
// echelon part; rank = pivots.size().
template <typename F>
std::vector<size_t> rref(Matrix<F>& a) {
  std::vector<size_t> pivots;
  if (a.empty()) return pivots;
  size_t rows = a.size(), cols = a[0].size(), r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && field_is_zero(a[sel][c])) ++sel;
    if (sel == rows) continue;
    std::swap(a[r], a[sel]);
    F inv_piv = F(1) / a[r][c];
    for (size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv_piv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || field_is_zero(a[i][c])) continue;
      F f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <typename F>
size_t mat_rank(Matrix<F> a) {
  return rref(a).size();
}

// Basis of the right nullspace of a (rows = vectors of length cols(a)).
template <typename F>
Matrix<F> nullspace(Matrix<F> a) {
  if (a.empty()) return {};
  size_t cols = a[0].size();
  std::vector<size_t> pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  Matrix<F> basis;
  for (size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<F> vec(cols, F(0));
    vec[c] = F(1);
    for (size_t r = 0; r < pivots.size(); ++r)
      vec[pivots[r]] = F(0) - a[r][c];
    basis.push_back(std::move(vec));
  }
  return basis;
}

// Solves A X = B for square invertible A; throws InternalError when singular.
template <typename F>
Matrix<F> solve_linear(Matrix<F> a, Matrix<F> b) {
  size_t n = a.size();
  if (n == 0) return b;
  size_t m = b[0].size();
  for (size_t i = 0; i < n; ++i)
    a[i].insert(a[i].end(), b[i].begin(), b[i].end());
  std::vector<size_t> pivots = rref(a);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw InternalError("solve_linear: singular matrix");
  Matrix<F> x(n, std::vector<F>(m, F(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) x[i][j] = a[i][n + j];
  return x;
}

template <typename F>
Matrix<F> mat_inverse(const Matrix<F>& a) {
  return solve_linear(a, identity_matrix<F>(a.size()));
}

// Solve x A = b for a single row vector b given A in row-major form; returns
// empty optional-like flag via bool.  Used for expressing vectors over a
// spanning set: transposes internally.
template <typename F>
bool in_row_span(const Matrix<F>& rows, const std::vector<F>& target,
                 std::vector<F>* coeffs = nullptr) {
  if (rows.empty()) {
    for (auto& t : target)
      if (!field_is_zero(t)) return false;
    if (coeffs) coeffs->clear();
    return true;
  }
  size_t n = rows.size(), m = rows[0].size();
  // Columns = rows^T; augmented with target as extra column.
  Matrix<F> a(m, std::vector<F>(n + 1, F(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) a[j][i] = rows[i][j];
  for (size_t j = 0; j < m; ++j) a[j][n] = target[j];
  std::vector<size_t> pivots = rref(a);
  if (!pivots.empty() && pivots.back() == n) return false;  // inconsistent
  if (coeffs) {
    coeffs->assign(n, F(0));
    for (size_t r = 0; r < pivots.size(); ++r) (*coeffs)[pivots[r]] = a[r][n];
  }
  return true;
}

// Prime field of word size for fast rank certificates (p < 2^31 so products
// fit in 64 bits).
class Fp64 {
public:
  static constexpr uint64_t P = 2147483647ull;  // 2^31 - 1
  Fp64() : v_(0) {}
  Fp64(int x) : v_(x >= 0 ? x % (long long)P : (P - (-(long long)x) % P) % P) {}
  explicit Fp64(uint64_t x) : v_(x % P) {}
  uint64_t value() const { return v_; }
  Fp64 operator+(Fp64 o) const { return raw((v_ + o.v_) % P); }
  Fp64 operator-(Fp64 o) const { return raw((v_ + P - o.v_) % P); }
  Fp64 operator*(Fp64 o) const { return raw(v_ * o.v_ % P); }
  Fp64 operator/(Fp64 o) const { return *this * o.inv(); }
  bool operator==(Fp64 o) const { return v_ == o.v_; }
  bool operator!=(Fp64 o) const { return v_ != o.v_; }
  Fp64 inv() const {
    if (v_ == 0) throw InternalError("Fp64: inverse of zero");
    return pow((long long)P - 2);
  }
  Fp64 pow(long long n) const {
    if (n < 0) return inv().pow(-n);
    Fp64 r = raw(1), b = *this;
    for (; n > 0; n >>= 1) {
      if (n & 1) r = r * b;
      b = b * b;
    }
    return r;
  }

private:
  static Fp64 raw(uint64_t v) {
    Fp64 f;
    f.v_ = v;
    return f;
  }
  uint64_t v_;
};

inline bool field_is_zero(const Fp64& x) { return x.value() == 0; }

}  // namespace smallq
