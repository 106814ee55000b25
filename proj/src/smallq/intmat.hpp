#pragma once

#include <vector>

#include "smallq/linalg.hpp"
#include "smallq/rational.hpp"

namespace smallq {

using IntMat = std::vector<std::vector<Integer>>;  // row-major
using IntVec = std::vector<Integer>;

IntMat int_identity(size_t n);
IntMat int_transpose(const IntMat& a);
IntMat int_mul(const IntMat& a, const IntMat& b);
IntVec int_apply(const IntMat& a, const IntVec& v);

// Row-style Hermite normal form of the row span: canonical basis of the
// lattice spanned by the rows (zero rows dropped, pivots positive, entries
// above each pivot reduced into [0, pivot)).
IntMat hnf_rows(IntMat a);

// Smith decomposition u * a * v = d with u, v unimodular and d diagonal with
// d_i | d_{i+1} >= 0.
void smith_decompose(const IntMat& a, IntMat& u, IntMat& v, IntMat& d);

// Nontrivial elementary divisors (> 1) of the cokernel of a viewed as a map
// Z^cols -> Z^rows; zeros reported for free factors.
std::vector<Integer> cokernel_invariants(const IntMat& a, size_t ambient_rank);

// Basis (as columns collected into a matrix) of { x : a x = 0 }.
IntMat int_kernel(const IntMat& a);

// Exact rational solve helpers.
Matrix<Rational> to_rational(const IntMat& a);

}  // namespace smallq
