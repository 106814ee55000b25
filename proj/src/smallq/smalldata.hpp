#pragma once

#include "smallq/cyclotomic.hpp"
#include "smallq/frobdual.hpp"

namespace smallq {

// Expression tree for low-order generator recipes: products and sums of
// (divided powers of) root vectors, with cyclotomic scalars.
struct RecipeNode {
  enum Kind { kGen, kProduct, kSum, kScaled } kind = kGen;
  char side = 'E';                // kGen only
  std::vector<long> root_q;       // kGen: referenced root, simple-root coords
  long power = 1;                 // kGen: divided power
  Cyclotomic scalar{1};           // kScaled only
  std::vector<RecipeNode> children;
};

RecipeNode recipe_gen(char side, const std::vector<long>& root_q, long power = 1);
RecipeNode recipe_product(std::vector<RecipeNode> factors);
RecipeNode recipe_sum(std::vector<RecipeNode> terms);
RecipeNode recipe_scaled(const Cyclotomic& c, RecipeNode child);

struct GeneratorRecipe {
  Root target;
  char side;            // 'E' or 'F'
  RecipeNode expression;
};

// The distinguished roots Delta_l labeling the skew-primitive generators of
// v_frak_q, with explicit recipes for the members beyond the simple roots.
struct DeltaLSet {
  std::vector<Root> roots;                  // per-component concatenation
  std::vector<GeneratorRecipe> recipes_e;   // parallel to roots
  std::vector<GeneratorRecipe> recipes_f;
};

DeltaLSet delta_l(const CartanDatum& datum, const QuantumParameter& p);

struct SmallAlgebraCard {
  Integer dim_v_frak_plus;   // prod_gamma l_gamma
  Integer dim_v_frak;        // (prod_alpha 2 l_alpha) (prod l_gamma)^2
  Integer dim_v;             // |A| (prod l_gamma)^2
  Integer dim_ubar;          // [X : X*] (prod l_gamma)^2
  Integer order_A;           // |X / 2lQ|
  Integer order_Abar;        // |X / X*|
  Integer order_Psi;         // |X* / 2lQ|
  Integer index_x_xstar;
};

SmallAlgebraCard cardinalities(const CartanDatum& datum,
                               const QuantumParameter& p, const Lattice& x);

struct CharacterGroups {
  std::vector<Integer> a;     // invariant factors of X / 2lQ
  std::vector<Integer> abar;  // X / X*
  std::vector<Integer> psi;   // X* / 2lQ
};

CharacterGroups character_groups(const CartanDatum& datum,
                                 const QuantumParameter& p, const Lattice& x);

// Rendering used by the CLI: `E[2a+b] = E_a^(2)*E_b + ...`.
std::string root_name(const std::vector<long>& q_coords);
std::string recipe_str(const GeneratorRecipe& r);

}  // namespace smallq
