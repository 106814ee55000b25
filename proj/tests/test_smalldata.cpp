#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <functional>
#include <set>

#include "doctest.h"
#include "smallq/frobdual.hpp"
#include "smallq/smalldata.hpp"

using namespace smallq;

namespace {

std::set<std::string> root_names(const DeltaLSet& dl) {
  std::set<std::string> s;
  for (const Root& r : dl.roots) s.insert(root_name(r.q_coords));
  return s;
}

// Degree of a recipe expression in simple-root coordinates (E side positive).
std::vector<long> recipe_degree(const RecipeNode& node, int rank) {
  std::vector<long> deg(rank, 0);
  switch (node.kind) {
    case RecipeNode::kGen:
      for (int i = 0; i < rank; ++i) deg[i] = node.power * node.root_q[i];
      break;
    case RecipeNode::kProduct:
      for (const RecipeNode& c : node.children) {
        std::vector<long> d = recipe_degree(c, rank);
        for (int i = 0; i < rank; ++i) deg[i] += d[i];
      }
      break;
    case RecipeNode::kSum: {
      deg = recipe_degree(node.children.at(0), rank);
      for (const RecipeNode& c : node.children)
        REQUIRE(recipe_degree(c, rank) == deg);
      break;
    }
    case RecipeNode::kScaled:
      deg = recipe_degree(node.children.at(0), rank);
      break;
  }
  return deg;
}

bool is_nonneg_combination(const std::vector<Root>& base,
                           const std::vector<long>& target) {
  // Small exhaustive search: coefficients bounded by the target height.
  long bound = 0;
  for (long c : target) bound += c;
  std::function<bool(size_t, std::vector<long>)> rec =
      [&](size_t k, std::vector<long> rest) -> bool {
    bool zero = true;
    for (long c : rest) zero = zero && c == 0;
    if (zero) return true;
    if (k == base.size()) return false;
    for (long m = 0; m <= bound; ++m) {
      std::vector<long> next = rest;
      bool ok = true;
      for (size_t i = 0; i < next.size(); ++i) {
        next[i] -= m * base[k].q_coords[i];
        if (next[i] < 0) ok = false;
      }
      if (!ok) break;
      if (rec(k + 1, next)) return true;
    }
    return false;
  };
  return rec(0, target);
}

}  // namespace

TEST_CASE("delta_l case lists") {
  // C2 at l = 2: {beta + alpha_1, alpha_1}.
  CartanDatum c2 = CartanDatum::parse("C2");
  QuantumParameter c2p = QuantumParameter::from_order(c2, 4);
  DeltaLSet dlc = delta_l(c2, c2p);
  CHECK(dlc.roots.size() == 2);

  // G2 at l = 2: {2a+b, b, a}.
  CartanDatum g2 = CartanDatum::parse("G2");
  QuantumParameter g2p = QuantumParameter::from_order(g2, 4);
  DeltaLSet dlg = delta_l(g2, g2p);
  CHECK(dlg.roots.size() == 3);
  CHECK(root_names(dlg) == std::set<std::string>{"2a+b", "b", "a"});

  // Simply laced at any l >= 2: Delta itself.
  CartanDatum a2 = CartanDatum::parse("A2");
  for (long n : {3L, 4L, 5L, 8L}) {
    DeltaLSet dla = delta_l(a2, QuantumParameter::from_order(a2, n));
    CHECK(dla.roots.size() == 2);
    for (const Root& r : dla.roots) CHECK(r.height() == 1);
  }

  // Above the lacing number Delta_l = Delta, e.g. G2 at l = 5.
  DeltaLSet dlg5 = delta_l(g2, QuantumParameter::from_order(g2, 5));
  CHECK(dlg5.roots.size() == 2);
}

TEST_CASE("generator recipes") {
  CartanDatum c2 = CartanDatum::parse("C2");
  QuantumParameter c2p = QuantumParameter::from_order(c2, 4);
  DeltaLSet dl = delta_l(c2, c2p);
  // The composite root's recipe is the two-term anticommutator-style sum.
  bool found = false;
  for (const GeneratorRecipe& r : dl.recipes_e)
    if (r.target.height() > 1) {
      found = true;
      CHECK(r.expression.kind == RecipeNode::kSum);
      CHECK(r.expression.children.size() == 2);
    }
  CHECK(found);

  // G2 at l = 2 divided-power recipe, rendered exactly as documented.
  CartanDatum g2 = CartanDatum::parse("G2");
  DeltaLSet dlg = delta_l(g2, QuantumParameter::from_order(g2, 4));
  bool found_g = false;
  for (const GeneratorRecipe& r : dlg.recipes_e)
    if (root_name(r.target.q_coords) == "2a+b") {
      found_g = true;
      CHECK(recipe_str(r) ==
            "E[2a+b] = E_a^(2)*E_b + E_b*E_a^(2) + E_a*E_b*E_a");
    }
  CHECK(found_g);

  // Simple roots map to themselves.
  CartanDatum a2 = CartanDatum::parse("A2");
  DeltaLSet dla = delta_l(a2, QuantumParameter::from_order(a2, 3));
  for (const GeneratorRecipe& r : dla.recipes_e)
    CHECK(r.expression.kind == RecipeNode::kGen);
}

TEST_CASE("recipe degree homogeneity") {
  for (const char* type : {"A2", "B2", "C2", "G2"})
    for (long n : {3L, 4L, 6L}) {
      CartanDatum d = CartanDatum::parse(type);
      DeltaLSet dl = delta_l(d, QuantumParameter::from_order(d, n));
      for (const GeneratorRecipe& r : dl.recipes_e)
        CHECK(recipe_degree(r.expression, d.rank()) == r.target.q_coords);
      for (const GeneratorRecipe& r : dl.recipes_f)
        CHECK(recipe_degree(r.expression, d.rank()) == r.target.q_coords);
    }
}

TEST_CASE("delta_l base property") {
  for (const char* type : {"A2", "B2", "C2", "B3", "C3"})
    for (long n : {3L, 4L, 6L, 8L}) {
      CartanDatum d = CartanDatum::parse(type);
      QuantumParameter p = QuantumParameter::from_order(d, n);
      DeltaLSet dl = delta_l(d, p);
      for (const Root& g : d.positive_roots())
        if (p.l_value(d, g) > 1)
          CHECK(is_nonneg_combination(dl.roots, g.q_coords));
    }
}

TEST_CASE("cardinalities") {
  CartanDatum a1 = CartanDatum::parse("A1");
  Lattice full1 = Lattice::full(1);
  // A1 sc, l = 2 (zeta_4): dim ubar = l^3 = 8.
  SmallAlgebraCard c =
      cardinalities(a1, QuantumParameter::from_order(a1, 4), full1);
  CHECK(c.dim_ubar == Integer(8));
  CHECK(c.order_A == Integer(8));
  CHECK(c.order_Abar == Integer(2));
  CHECK(c.order_Psi == Integer(4));

  // A2 sc, l = 2: [X:X*] = 4, prod l_gamma = 8, dim ubar = 256.
  CartanDatum a2 = CartanDatum::parse("A2");
  SmallAlgebraCard c2 =
      cardinalities(a2, QuantumParameter::from_order(a2, 4), Lattice::full(2));
  CHECK(c2.index_x_xstar == Integer(4));
  CHECK(c2.dim_v_frak_plus == Integer(8));
  CHECK(c2.dim_ubar == Integer(256));

  // l = 1 everywhere: the trivial algebra.
  SmallAlgebraCard c1 =
      cardinalities(a1, QuantumParameter::from_order(a1, 1), full1);
  CHECK(c1.dim_ubar == Integer(1));

  // B2 sc zeta_4.
  CartanDatum b2 = CartanDatum::parse("B2");
  SmallAlgebraCard cb =
      cardinalities(b2, QuantumParameter::from_order(b2, 4), Lattice::full(2));
  CHECK(cb.dim_ubar == Integer(32));
  CHECK(cb.order_Abar == Integer(2));
}

TEST_CASE("dimension identities across the sweep grid") {
  for (const char* type : {"A1", "A2", "B2", "G2", "A1xA1"})
    for (long n = 1; n <= 12; ++n) {
      CartanDatum d = CartanDatum::parse(type);
      QuantumParameter p = QuantumParameter::from_order(d, n);
      Lattice x = Lattice::full(d.rank());
      SmallAlgebraCard c = cardinalities(d, p, x);
      Integer prod = 1;
      for (const Root& g : d.positive_roots()) prod *= p.l_value(d, g);
      CHECK(c.dim_ubar == c.index_x_xstar * prod * prod);
      CHECK(c.dim_v == c.order_A * prod * prod);
      CHECK(c.dim_ubar * c.order_Psi == c.dim_v);
      CHECK(c.order_A == c.order_Abar * c.order_Psi);
      // Cross-module: |Abar| = [X:X*] from frobdual.
      CHECK(c.order_Abar ==
            compute_x_star(d, p, x).index_in(x));
    }
}

TEST_CASE("character groups") {
  CartanDatum a1 = CartanDatum::parse("A1");
  Lattice full1 = Lattice::full(1);
  CharacterGroups cg =
      character_groups(a1, QuantumParameter::from_order(a1, 4), full1);
  CHECK(cg.a == std::vector<Integer>{Integer(8)});
  CHECK(cg.abar == std::vector<Integer>{Integer(2)});
  CHECK(cg.psi == std::vector<Integer>{Integer(4)});

  CharacterGroups cg1 =
      character_groups(a1, QuantumParameter::from_order(a1, 1), full1);
  CHECK(cg1.abar.empty());
}
