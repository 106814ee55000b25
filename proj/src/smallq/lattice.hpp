#pragma once

#include "smallq/rootdata.hpp"

namespace smallq {

// Full-rank sublattice of the weight lattice P, represented by a canonical
// (row-style Hermite normal form) basis in P-coordinates.  One row per basis
// vector; equality of lattices is equality of canonical bases.
class Lattice {
public:
  Lattice() = default;
  // Span of the given generators (rows, P-coordinates).
  static Lattice span(const IntMat& generators, int rank);
  static Lattice full(int rank);  // P itself

  int rank() const { return rank_; }
  const IntMat& basis() const { return basis_; }  // rank() rows after HNF
  bool is_full_rank() const { return (int)basis_.size() == rank_; }

  bool contains(const Weight& v) const;
  bool contains(const Lattice& other) const;
  bool operator==(const Lattice& o) const { return basis_ == o.basis_; }

  // [outer : inner] for inner = *this viewed inside outer; throws
  // NotSublattice unless inner is contained in outer.
  Integer index_in(const Lattice& outer) const;
  // Nontrivial elementary divisors of outer / inner (inner = *this).
  std::vector<Integer> quotient_invariants_in(const Lattice& outer) const;

  Lattice intersect(const Lattice& other) const;
  Lattice scaled(long c) const;  // c * L

  // Coordinates of the quotient outer/inner: Smith decomposition giving
  // outer/inner = sum Z/d_k with explicit generators u_k (rows, P-coords).
  struct QuotientPresentation {
    std::vector<Integer> divisors;   // d_k >= 1, may include 1's
    IntMat generators;               // row k = representative of u_k in P-coords
    // Coordinates of a vector of outer modulo inner: x -> (c_k mod d_k).
    // Filled by quotient_presentation_in; depends on cached transform.
    IntMat outer_to_coords;          // maps outer-basis coefficients to c_k
    IntMat outer_basis;              // rows: the outer basis used
  };
  QuotientPresentation quotient_presentation_in(const Lattice& outer) const;

private:
  int rank_ = 0;
  IntMat basis_;
};

// Convenience constructors used across modules.
Lattice root_lattice(const CartanDatum& datum);            // Q
Lattice weight_lattice(const CartanDatum& datum);          // P

// Coefficients of v over the lattice basis (must be a member; rational solve
// plus integrality check).
IntVec lattice_coords(const Lattice& lat, const Weight& v);

}  // namespace smallq
