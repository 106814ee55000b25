#pragma once

#include <memory>
#include <optional>

#include "smallq/steinberg.hpp"
#include "smallq/verify.hpp"

namespace smallq {

// Shared computational state for the specialized small algebra ubar_q at a
// rank <= 2 datum: the generic engine and specializer, the Delta_l generator
// set lifted to engine elements (bold E_delta = K_delta E_delta and F_delta),
// the restricted divided-power monomial combinatorics, and the character
// theory of Abar = X/X*.  The torus of ubar is realized inside the span of
// the K_nu (nu in Q): the Abar-characters chi_c are functions on X/X*, and
// since Y = {lam : q(nu, lam) = 1 for all nu} is contained in X* while the
// pairing (Q/rad) x (X/Y) is perfect, each chi_c expands over the torus
// classes by finite Fourier inversion.  The chi_c are group-like, multiply by
// chi_c chi_c' = chi_{c+c'}, and chi_0 = 1, so they serve as the Abar part of
// the basis labels.
class RepContext {
 public:
  // Throws RankTooLarge above rank 2; height 0 picks a window large enough
  // for products of two restricted monomials.
  RepContext(const CartanDatum& datum, const QuantumParameter& p,
             const Lattice& x, long height = 0);

  const CartanDatum& datum() const { return datum_; }
  const QuantumParameter& p() const { return p_; }
  const Lattice& x() const { return x_; }
  const Lattice& xstar() const { return xstar_; }
  TriangularEngine& engine() { return *eng_; }
  Specializer& spec() { return *sp_; }
  const DeltaLSet& dl() const { return dl_; }

  // l_gamma per positive root (convexity order).
  const std::vector<long>& l_values() const { return lgam_; }
  // Restricted exponent vectors m (0 <= m_k < l_gamma_k), lexicographic.
  const std::vector<std::vector<long>>& monomials() const { return monos_; }
  size_t mono_index(const std::vector<long>& m) const;
  // Q-degree (simple-root coordinates) of an exponent vector.
  std::vector<long> mono_degree(const std::vector<long>& m) const;

  // --- Abar = X/X* ---------------------------------------------------------
  size_t abar_order() const { return abar_elems_.size(); }
  const std::vector<std::vector<long>>& abar_elements() const {
    return abar_elems_;
  }
  size_t abar_index(const std::vector<long>& c) const;
  std::vector<long> abar_add(const std::vector<long>& a,
                             const std::vector<long>& b) const;
  // chi_c(lam) for lam in X.
  Cyclotomic abar_char(const std::vector<long>& c, const Weight& lam) const;
  // chi_c(nu) for nu in simple-root coordinates.
  Cyclotomic abar_char_q(const std::vector<long>& c,
                         const std::vector<long>& nu_q) const;
  // Expansion chi_c = sum_t fourier(c)[t] K_{t}, t over torus_classes().
  const std::vector<Cyclotomic>& fourier(const std::vector<long>& c);
  const std::vector<std::vector<long>>& torus_classes() const {
    return classes_;
  }
  size_t class_index(const std::vector<long>& cls) const;

  // q(nu, lam), nu in simple-root coordinates.
  Cyclotomic qnu(const std::vector<long>& nu_q, const Weight& lam) const;
  // Galois conjugation zeta -> zeta^{-1}.
  Cyclotomic conj(const Cyclotomic& c) const;

  // --- generators ----------------------------------------------------------
  size_t gen_count() const { return dl_.roots.size(); }
  const Root& gen_root(size_t k) const { return dl_.roots[k]; }
  const TriangularElement& bold_e(size_t k);  // K_delta E_delta (recipe lift)
  const TriangularElement& f_gen(size_t k);

  // Bold divided-power monomial prod (K E)_gamma^{(m)} and the plain F
  // monomial, as engine elements (cached).
  const TriangularElement& bold_mono(size_t mono_idx);
  const TriangularElement& f_mono(size_t mono_idx);

  // Expansion of a monomial over products of generator letters of the same
  // degree: list of (letter word over gen indices, coefficient).
  using WordExpansion = std::vector<std::pair<std::vector<int>, Cyclotomic>>;
  const WordExpansion& bold_expansion(size_t mono_idx);
  const WordExpansion& f_expansion(size_t mono_idx);

  // --- ubar coordinates ----------------------------------------------------
  // Label index <-> (me, c, mf); dimension = |monos|^2 |Abar|.
  size_t label_count() const;
  size_t label_index(size_t me, size_t c, size_t mf) const;
  void label_split(size_t idx, size_t* me, size_t* c, size_t* mf) const;

  // Specialized coordinate vector of bold_mono(me) chi_c f_mono(mf) over the
  // compressed key index (building the label solver on first use).
  // Coordinates of an element given as (engine element) * chi_c over the
  // label basis; throws InternalError when outside the span.
  std::vector<Cyclotomic> label_coords(const TriangularElement& x,
                                       const std::vector<long>& c);
  // Coordinates of generator g (bold E side 'E' / F side 'F') times label b.
  const std::vector<Cyclotomic>& gen_label_product(char side, size_t k,
                                                   size_t label);
  // Coordinates of basis_i * basis_j over the label basis.
  const std::vector<Cyclotomic>& label_product(size_t i, size_t j);

  // Coordinates of x over the ambient E-left system E^{(e)} K_t F^{(a)}
  // (for lowest-weight evaluation); throws when outside the span.
  std::map<SpecKey, Cyclotomic> eleft_coords(const TriangularElement& x);

  // Coordinates of lam in the Abar presentation (c_k mod d_k).
  std::vector<long> abar_coords(const Weight& lam) const;

 private:
  CartanDatum datum_;
  QuantumParameter p_;
  Lattice x_;
  Lattice xstar_;
  DeltaLSet dl_;
  std::unique_ptr<TriangularEngine> eng_;
  std::unique_ptr<Specializer> sp_;

  std::vector<long> lgam_;
  std::vector<std::vector<long>> monos_;
  std::map<std::vector<long>, size_t> mono_index_;

  std::vector<Integer> abar_div_;  // nontrivial divisors of X/X*
  Lattice::QuotientPresentation abar_pres_;
  std::vector<std::vector<long>> abar_elems_;
  std::vector<std::vector<long>> classes_;  // Q/rad representatives
  std::map<std::vector<long>, size_t> class_index_;
  std::vector<std::vector<long>> xy_reps_;  // X/Y representatives (P-coords)
  std::map<std::vector<long>, std::vector<Cyclotomic>> fourier_;

  std::vector<TriangularElement> bold_e_, f_gen_;
  std::map<size_t, TriangularElement> bold_mono_, f_mono_;
  std::map<size_t, WordExpansion> bold_exp_, f_exp_;

  // label solver state
  bool labels_ready_ = false;
  std::map<SpecKey, size_t> key_index_;
  Matrix<Cyclotomic> label_rows_;       // label spec vectors (rows)
  std::vector<size_t> pivot_keys_;      // d independent key columns
  Matrix<Cyclotomic> pivot_inverse_t_;  // inverse of the pivot submatrix^T
  std::map<std::pair<size_t, size_t>, SpecElement> xprod_;  // spec(X_i X_j)
  std::map<std::tuple<char, size_t, size_t>, std::vector<Cyclotomic>>
      gen_label_;
  std::map<std::pair<size_t, size_t>, std::vector<Cyclotomic>> label_prod_;

  // E-left solver state (lazy)
  bool eleft_ready_ = false;
  std::vector<SpecKey> eleft_keys_;
  std::map<SpecKey, size_t> eleft_key_index_;
  std::map<SpecKey, size_t> eleft_col_index_;
  Matrix<Cyclotomic> eleft_rows_;
  std::vector<size_t> eleft_pivots_;
  Matrix<Cyclotomic> eleft_inverse_t_;

  void ensure_labels();
  void ensure_eleft();
  // spec vector of (engine element x) * chi_c over compressed keys; grows the
  // key index when grow = true.
  std::vector<Cyclotomic> chi_append_vector(const SpecElement& sx,
                                            const std::vector<long>& c,
                                            bool grow);
  std::vector<Cyclotomic> label_coords_spec(const SpecElement& sx,
                                            const std::vector<long>& c);
  const TriangularElement& x_elem(size_t me, size_t mf);
  std::map<std::pair<size_t, size_t>, TriangularElement> x_elems_;
  WordExpansion expand_words(char side, size_t mono_idx);
};

// Finite-dimensional X-graded module: weight per basis vector plus one action
// matrix per Delta_l generator on each side (bold E_delta and F_delta);
// column convention, act_e[k] * coords.  The torus acts through the grading.
struct WeightModule {
  std::vector<Weight> weights;
  std::vector<Matrix<Cyclotomic>> act_e;
  std::vector<Matrix<Cyclotomic>> act_f;
  std::string name;

  size_t dim() const { return weights.size(); }
  std::map<Weight, long> weight_spaces() const;
};

// The specialized small algebra as an abstract structure-constant algebra
// over the label basis {bold E-monomial x chi_c x F-monomial}.  The full
// structure tensor is materialized eagerly for dim <= 64 and on demand above.
class FiniteDimAlgebra {
 public:
  explicit FiniteDimAlgebra(RepContext& ctx);

  struct Label {
    std::vector<long> eexp;  // bold E-monomial exponents
    std::vector<long> abar;  // Abar character coordinates
    std::vector<long> fexp;
  };

  RepContext& ctx() { return ctx_; }
  size_t dim() const { return ctx_.label_count(); }
  const std::vector<Label>& basis_labels() const { return labels_; }
  size_t unit_index() const { return unit_; }

  // Coordinates of basis_i * basis_j (cached).
  const std::vector<Cyclotomic>& product(size_t i, size_t j);
  Matrix<Cyclotomic> left_mult(size_t i);  // L_i[k][j] = coeff of b_k in b_i b_j
  // Counit: 1 on purely toral labels, 0 otherwise.
  std::vector<Cyclotomic> augmentation() const;

  // Generator coordinate vectors over the basis: bold E / F per Delta_l index
  // and the toral labels themselves.
  std::vector<Cyclotomic> gen_coords(char side, size_t k);

  // Basis of the Jacobson radical (coordinate rows): the radical of the trace
  // form of left multiplication (valid in characteristic zero).
  const Matrix<Cyclotomic>& jacobson_radical();

  // a(i,j,k) = coefficient of b_k in b_i b_j for spot checks.
  Cyclotomic structure_constant(size_t i, size_t j, size_t k);

 private:
  RepContext& ctx_;
  std::vector<Label> labels_;
  size_t unit_ = 0;
  std::map<std::pair<size_t, size_t>, std::vector<Cyclotomic>> products_;
  std::optional<Matrix<Cyclotomic>> radical_;
};

FiniteDimAlgebra build_algebra(RepContext& ctx);

// --- module constructions --------------------------------------------------

// Baby Verma induced from the non-positive part: free of rank one over the
// plus part, basis the restricted E-monomials, deg(E^{(m)} v) = lam + sum
// m_k gamma_k (lowest weight lam).  Throws NotInCharacterLattice when lam is
// outside X.
WeightModule baby_verma(RepContext& ctx, const Weight& lam);

// Highest-weight baby Verma (induced from the non-negative part): basis the
// restricted F-monomials, deg(F^{(m)} v) = lam - sum m_k gamma_k, cyclic from
// its one-dimensional top weight space.
WeightModule baby_verma_highest(RepContext& ctx, const Weight& lam);

// Largest action-stable subspace of a complement of the top weight line,
// computed by fixed-point iteration S <- {m in S : g m in S for all g}.
// Requires a one-dimensional top weight space that generates M (NotCyclic
// otherwise).  Returns coordinate rows of the submodule.
Matrix<Cyclotomic> maximal_submodule(RepContext& ctx, const WeightModule& m);

// Submodule spanned by the given coordinate rows (must be action-stable) and
// quotient by such a span.
WeightModule submodule(RepContext& ctx, const WeightModule& m,
                       const Matrix<Cyclotomic>& rows, const std::string& name);
WeightModule quotient_module(RepContext& ctx, const WeightModule& m,
                             const Matrix<Cyclotomic>& rows,
                             const std::string& name);

// Simple module of highest weight lam: quotient of baby_verma_highest(lam) by
// its maximal submodule.
WeightModule simple_module(RepContext& ctx, const Weight& lam);

// Dual module with action through the antipode on the skew-primitive
// generators (the phi / K_rho-pivot antiautomorphism): weights are negated
// and dual(simple(lam)) = simple(-w0 lam).
WeightModule contravariant_dual(RepContext& ctx, const WeightModule& m);

// Coinduced module of highest weight lam: contravariant dual of the baby
// Verma at the dual label -lam; weights run over [lam - 2 rho_l, lam].
WeightModule rind(RepContext& ctx, const Weight& lam);

// Steinberg module: simple of highest weight rho_l.
WeightModule steinberg_module(RepContext& ctx);

// Tensor product through the coproduct (bold E: x (x) K + K^2 (x) x; F:
// x (x) K^{-1} + 1 (x) x), K-factors acting by grading scalars.
WeightModule tensor_product(RepContext& ctx, const WeightModule& a,
                            const WeightModule& b);

// One-dimensional module of weight lam (requires l_alpha | <alpha, lam> at
// every simple root, e.g. lam in X*).
WeightModule character_module(RepContext& ctx, const Weight& lam);
// Shift the grading by lam1 in X* (invertible twist, same matrices).
WeightModule shift_module(RepContext& ctx, const WeightModule& m,
                          const Weight& lam1);

// Left regular module, graded by the Q-degree of the labels.
WeightModule regular_module(FiniteDimAlgebra& alg);

// Action of an abstract basis element on a module, through the generator-word
// expansions of its label (used for radical elements).
Matrix<Cyclotomic> label_action(RepContext& ctx, const WeightModule& m,
                                size_t label);
Matrix<Cyclotomic> coords_action(RepContext& ctx, const WeightModule& m,
                                 const std::vector<Cyclotomic>& coords);

// Socle (annihilator of the Jacobson radical, coordinate rows) and cosocle
// (quotient by J M).
Matrix<Cyclotomic> socle_rows(FiniteDimAlgebra& alg, const WeightModule& m);
WeightModule socle(FiniteDimAlgebra& alg, const WeightModule& m);
WeightModule cosocle(FiniteDimAlgebra& alg, const WeightModule& m);

// Joint kernel of all generators intersected with the X*-graded part
// (coordinate rows).
Matrix<Cyclotomic> invariants_subspace(RepContext& ctx, const WeightModule& m);

// Unique X-graded lift of an (X/X*)-graded module with weights in P_l:
// replaces each weight by its restricted representative and checks that the
// action matrices respect the lifted grading (InputError otherwise).
WeightModule lift_grading(RepContext& ctx, const WeightModule& m);
// The reduction direction: weights replaced by their Abar class
// representative computed from the restricted box.
WeightModule reduce_grading(RepContext& ctx, const WeightModule& m);

// Grade-by-grade intertwiner search; returns the invertible intertwiner when
// the modules are isomorphic.
std::optional<Matrix<Cyclotomic>> module_iso_test(RepContext& ctx,
                                                  const WeightModule& a,
                                                  const WeightModule& b);

// Space of module homomorphisms M -> N (each entry one matrix).
std::vector<Matrix<Cyclotomic>> hom_space(RepContext& ctx,
                                          const WeightModule& m,
                                          const WeightModule& n);

// --- Ext^1 -----------------------------------------------------------------

struct Cocycle {
  std::vector<Matrix<Cyclotomic>> de;  // per bold E generator, degree +delta
  std::vector<Matrix<Cyclotomic>> df;  // per F generator, degree -delta
};

struct ExtReport {
  long dimension = 0;
  long stabilization_degree = 0;  // word-degree window D of the harvest
  std::vector<Cocycle> cocycle_basis;
};

// Ext^1(M, N) in the X-graded category: cocycles delta(g) in Hom(M, N) of
// the generator's degree, vanishing on the relation ideal harvested through
// the label word reductions up to degree D (0 = complete window), modulo
// coboundaries.  The computation is repeated at D + 1; NotStabilized when the
// dimension moves.
ExtReport ext1(RepContext& ctx, const WeightModule& m, const WeightModule& n,
               long degree_window = 0);

// Simple labels lam0 + lam1 (lam0 restricted in X, lam1 in X*) whose shifted
// simple has weight support meeting supp(M) extended by the generator roots.
std::vector<Weight> candidate_simple_labels(RepContext& ctx,
                                            const WeightModule& m);

bool is_projective(RepContext& ctx, const WeightModule& m);
bool is_injective(RepContext& ctx, const WeightModule& m);

}  // namespace smallq
