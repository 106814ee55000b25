#include "smallq/smalldata.hpp"

#include <sstream>

#include "smallq/errors.hpp"

namespace smallq {

RecipeNode recipe_gen(char side, const std::vector<long>& root_q, long power) {
  RecipeNode n;
  n.kind = RecipeNode::kGen;
  n.side = side;
  n.root_q = root_q;
  n.power = power;
  return n;
}

RecipeNode recipe_product(std::vector<RecipeNode> factors) {
  RecipeNode n;
  n.kind = RecipeNode::kProduct;
  n.children = std::move(factors);
  return n;
}

RecipeNode recipe_sum(std::vector<RecipeNode> terms) {
  RecipeNode n;
  n.kind = RecipeNode::kSum;
  n.children = std::move(terms);
  return n;
}

RecipeNode recipe_scaled(const Cyclotomic& c, RecipeNode child) {
  RecipeNode n;
  n.kind = RecipeNode::kScaled;
  n.scalar = c;
  n.children.push_back(std::move(child));
  return n;
}

namespace {

std::vector<long> expr_degree(const RecipeNode& n) {
  switch (n.kind) {
    case RecipeNode::kGen: {
      std::vector<long> d(n.root_q.size());
      for (size_t i = 0; i < d.size(); ++i) d[i] = n.power * n.root_q[i];
      return d;
    }
    case RecipeNode::kScaled:
      return expr_degree(n.children[0]);
    case RecipeNode::kProduct: {
      std::vector<long> d = expr_degree(n.children[0]);
      for (size_t i = 1; i < n.children.size(); ++i) {
        std::vector<long> e = expr_degree(n.children[i]);
        for (size_t j = 0; j < d.size(); ++j) d[j] += e[j];
      }
      return d;
    }
    case RecipeNode::kSum: {
      std::vector<long> d = expr_degree(n.children[0]);
      for (size_t i = 1; i < n.children.size(); ++i)
        if (expr_degree(n.children[i]) != d)
          throw InternalError("recipe sum is not homogeneous");
      return d;
    }
  }
  throw InternalError("bad recipe node");
}

Root make_root(const CartanDatum& datum, const std::vector<long>& q) {
  Root g;
  g.q_coords = q;
  g.d = datum.root_d(q);
  g.omega = datum.root_omega(q);
  return g;
}

std::vector<long> unit_q(int rank, int i) {
  std::vector<long> q(rank, 0);
  q[i] = 1;
  return q;
}

// E_{beta+gamma'} = E_beta E_{gamma'} + E_{gamma'} E_beta and the F-side
// variant -(F_beta F_{gamma'} + F_{gamma'} F_beta).
RecipeNode bracket_recipe(char side, const std::vector<long>& beta,
                          const std::vector<long>& prev) {
  RecipeNode s = recipe_sum({recipe_product({recipe_gen(side, beta),
                                             recipe_gen(side, prev)}),
                             recipe_product({recipe_gen(side, prev),
                                             recipe_gen(side, beta)})});
  if (side == 'F') return recipe_scaled(Cyclotomic(-1), std::move(s));
  return s;
}

}  // namespace

DeltaLSet delta_l(const CartanDatum& datum, const QuantumParameter& p) {
  DeltaLSet out;
  int rank = datum.rank();

  auto push = [&](const std::vector<long>& q, RecipeNode e, RecipeNode f) {
    Root g = make_root(datum, q);
    if (expr_degree(e) != q || expr_degree(f) != q)
      throw InternalError("recipe degree mismatch for root " + root_name(q));
    out.roots.push_back(g);
    out.recipes_e.push_back({g, 'E', std::move(e)});
    out.recipes_f.push_back({g, 'F', std::move(f)});
  };
  auto push_simple = [&](int i) {
    std::vector<long> q = unit_q(rank, i);
    push(q, recipe_gen('E', q), recipe_gen('F', q));
  };

  for (auto& comp : datum.components()) {
    int ci = (int)(&comp - datum.components().data());
    long li = p.l_i(datum, ci);
    int o = comp.offset, n = comp.rank;

    if (li == 1) continue;
    if (li > comp.lacing) {
      for (int i = 0; i < n; ++i) push_simple(o + i);
      continue;
    }

    if (comp.letter == 'G' && li == 2) {
      // {2a+b, b, a} with a short, b long; E_{2a+b} = E_a^(2) E_b +
      // E_b E_a^(2) + E_a E_b E_a (and the same shape on the F side).
      std::vector<long> a = unit_q(rank, o), b = unit_q(rank, o + 1);
      std::vector<long> t(rank, 0);
      t[o] = 2;
      t[o + 1] = 1;
      auto big = [&](char s) {
        return recipe_sum(
            {recipe_product({recipe_gen(s, a, 2), recipe_gen(s, b)}),
             recipe_product({recipe_gen(s, b), recipe_gen(s, a, 2)}),
             recipe_product(
                 {recipe_gen(s, a), recipe_gen(s, b), recipe_gen(s, a)})});
      };
      push(t, big('E'), big('F'));
      push_simple(o + 1);
      push_simple(o);
      continue;
    }

    // l_i equals the lacing number.
    switch (comp.letter) {
      case 'B': {
        // Targets a_j + ... + a_n (the short positive roots), longest first;
        // each is the symmetrized bracket of the next with a long simple.
        std::vector<std::vector<long>> tail(n);
        for (int j = n - 1; j >= 0; --j) {
          tail[j].assign(rank, 0);
          for (int k = j; k < n; ++k) tail[j][o + k] = 1;
        }
        for (int j = 0; j < n; ++j) {
          if (tail[j] == unit_q(rank, o + n - 1)) break;
          push(tail[j], bracket_recipe('E', unit_q(rank, o + j), tail[j + 1]),
               bracket_recipe('F', unit_q(rank, o + j), tail[j + 1]));
        }
        push_simple(o + n - 1);
        break;
      }
      case 'C': {
        // {a_n + a_{n-1}, a_{n-1}, ..., a_1} with a_n the long simple.
        std::vector<long> t(rank, 0);
        t[o + n - 1] = 1;
        t[o + n - 2] = 1;
        push(t, bracket_recipe('E', unit_q(rank, o + n - 1), unit_q(rank, o + n - 2)),
             bracket_recipe('F', unit_q(rank, o + n - 1), unit_q(rank, o + n - 2)));
        for (int j = n - 2; j >= 0; --j) push_simple(o + j);
        break;
      }
      case 'F': {
        // {a1+a2+a3, a2+a3, a3, a4}; a1, a2 long, a3, a4 short.
        std::vector<long> t23(rank, 0), t123(rank, 0);
        t23[o + 1] = t23[o + 2] = 1;
        t123[o] = t123[o + 1] = t123[o + 2] = 1;
        push(t123, bracket_recipe('E', unit_q(rank, o), t23),
             bracket_recipe('F', unit_q(rank, o), t23));
        push(t23, bracket_recipe('E', unit_q(rank, o + 1), unit_q(rank, o + 2)),
             bracket_recipe('F', unit_q(rank, o + 1), unit_q(rank, o + 2)));
        push_simple(o + 2);
        push_simple(o + 3);
        break;
      }
      case 'G': {
        // l_i = 3: {a+b, a} with a short, b long;
        // E_{b+a} = E_b E_a - q_a^3 E_a E_b, F side negated.
        std::vector<long> a = unit_q(rank, o), b = unit_q(rank, o + 1);
        std::vector<long> t(rank, 0);
        t[o] = t[o + 1] = 1;
        Cyclotomic qa3 = p.q_i(ci).pow(3).to_cyclotomic(p.ambient_order());
        RecipeNode e = recipe_sum(
            {recipe_product({recipe_gen('E', b), recipe_gen('E', a)}),
             recipe_scaled(Cyclotomic(-1) * qa3,
                           recipe_product({recipe_gen('E', a),
                                           recipe_gen('E', b)}))});
        RecipeNode f = recipe_scaled(
            Cyclotomic(-1),
            recipe_sum(
                {recipe_product({recipe_gen('F', b), recipe_gen('F', a)}),
                 recipe_scaled(Cyclotomic(-1) * qa3,
                               recipe_product({recipe_gen('F', a),
                                               recipe_gen('F', b)}))}));
        push(t, std::move(e), std::move(f));
        push_simple(o);
        break;
      }
      default:
        throw InternalError("unexpected laced component in delta_l");
    }
  }
  return out;
}

SmallAlgebraCard cardinalities(const CartanDatum& datum,
                               const QuantumParameter& p, const Lattice& x) {
  SmallAlgebraCard card;
  Integer prod_l = 1;
  for (auto& g : datum.positive_roots()) prod_l *= p.l_value(datum, g);
  Integer prod_2l = 1;
  for (int j = 0; j < datum.rank(); ++j) prod_2l *= 2 * p.l_simple(datum, j);

  Lattice lq = compute_lq(datum, p);
  Lattice two_lq = lq.scaled(2);
  Lattice x_star = compute_x_star(datum, p, x);

  card.dim_v_frak_plus = prod_l;
  card.dim_v_frak = prod_2l * prod_l * prod_l;
  card.order_A = two_lq.index_in(x);
  card.order_Abar = x_star.index_in(x);
  card.order_Psi = two_lq.index_in(x_star);
  card.index_x_xstar = card.order_Abar;
  card.dim_v = card.order_A * prod_l * prod_l;
  card.dim_ubar = card.index_x_xstar * prod_l * prod_l;

  if (card.order_A != card.order_Abar * card.order_Psi)
    throw InternalError("|A| != |Abar| * |Psi|");
  if (card.dim_ubar * card.order_Psi != card.dim_v)
    throw InternalError("dim ubar != dim v / |Psi|");
  return card;
}

CharacterGroups character_groups(const CartanDatum& datum,
                                 const QuantumParameter& p, const Lattice& x) {
  Lattice lq = compute_lq(datum, p);
  Lattice two_lq = lq.scaled(2);
  Lattice x_star = compute_x_star(datum, p, x);
  CharacterGroups g;
  g.a = two_lq.quotient_invariants_in(x);
  g.abar = x_star.quotient_invariants_in(x);
  g.psi = two_lq.quotient_invariants_in(x_star);
  return g;
}

std::string root_name(const std::vector<long>& q_coords) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < q_coords.size(); ++i) {
    if (q_coords[i] == 0) continue;
    if (!first) os << "+";
    if (q_coords[i] != 1) os << q_coords[i];
    os << (char)('a' + (int)i);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

namespace {

bool is_simple_q(const std::vector<long>& q) {
  int nz = 0;
  for (long c : q) {
    if (c == 1)
      ++nz;
    else if (c != 0)
      return false;
  }
  return nz == 1;
}

std::string gen_symbol(char side, const std::vector<long>& q) {
  std::string s(1, side);
  if (is_simple_q(q))
    s += std::string("_") + root_name(q);
  else
    s += "[" + root_name(q) + "]";
  return s;
}

std::string node_str(const RecipeNode& n) {
  switch (n.kind) {
    case RecipeNode::kGen: {
      std::string s = gen_symbol(n.side, n.root_q);
      if (n.power != 1) s += "^(" + std::to_string(n.power) + ")";
      return s;
    }
    case RecipeNode::kScaled: {
      std::string c = n.children[0].kind == RecipeNode::kSum
                          ? "(" + node_str(n.children[0]) + ")"
                          : node_str(n.children[0]);
      if (n.scalar == Cyclotomic(-1)) return "-" + c;
      return "(" + n.scalar.str() + ")*" + c;
    }
    case RecipeNode::kProduct: {
      std::string s;
      for (size_t i = 0; i < n.children.size(); ++i) {
        if (i) s += "*";
        bool wrap = n.children[i].kind == RecipeNode::kSum ||
                    n.children[i].kind == RecipeNode::kScaled;
        s += wrap ? "(" + node_str(n.children[i]) + ")" : node_str(n.children[i]);
      }
      return s;
    }
    case RecipeNode::kSum: {
      std::string s;
      for (size_t i = 0; i < n.children.size(); ++i) {
        std::string t = node_str(n.children[i]);
        if (i == 0) {
          s = t;
        } else if (!t.empty() && t[0] == '-') {
          s += " - " + t.substr(1);
        } else {
          s += " + " + t;
        }
      }
      return s;
    }
  }
  throw InternalError("bad recipe node");
}

}  // namespace

std::string recipe_str(const GeneratorRecipe& r) {
  return gen_symbol(r.side, r.target.q_coords) + " = " + node_str(r.expression);
}

}  // namespace smallq
