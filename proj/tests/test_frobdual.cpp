#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "smallq/errors.hpp"
#include "smallq/frobdual.hpp"

using namespace smallq;

namespace {

std::string dual_type(const DualDatum& dd) {
  std::string s;
  for (const DualComponent& c : dd.dual_components) {
    if (!s.empty()) s += "x";
    s += c.letter;
    s += std::to_string(c.rank);
  }
  return s;
}

}  // namespace

TEST_CASE("X* computation") {
  CartanDatum a1 = CartanDatum::parse("A1");
  Lattice full1 = Lattice::full(1);
  QuantumParameter p3 = QuantumParameter::from_order(a1, 3);
  Lattice xs = compute_x_star(a1, p3, full1);
  CHECK(xs == Lattice::full(1).scaled(3));
  CHECK(xs.index_in(full1) == Integer(3));
  // Independent residue enumeration: (alpha, c omega) = 2c mod 3.
  for (long c = -6; c <= 6; ++c)
    CHECK(xs.contains(Weight{c}) == (((c % 3) + 3) % 3 == 0));

  // All l = 1: X* = X.
  QuantumParameter p1 = QuantumParameter::from_order(a1, 1);
  CHECK(compute_x_star(a1, p1, full1) == full1);

  // B2 sc at zeta_4: only the short simple root constrains, index 2.
  CartanDatum b2 = CartanDatum::parse("B2");
  Lattice full2 = Lattice::full(2);
  QuantumParameter p4 = QuantumParameter::from_order(b2, 4);
  Lattice xs2 = compute_x_star(b2, p4, full2);
  CHECK(xs2.index_in(full2) == Integer(2));
  int short_idx = b2.d(0) == 1 ? 0 : 1;
  for (long a = 0; a < 2; ++a)
    for (long b = 0; b < 2; ++b) {
      Weight lam(2, 0);
      lam[short_idx] = a;
      lam[1 - short_idx] = b;
      CHECK(xs2.contains(lam) == (a % 2 == 0));
    }
}

TEST_CASE("lQ computation and containment") {
  CartanDatum a1 = CartanDatum::parse("A1");
  QuantumParameter p3 = QuantumParameter::from_order(a1, 3);
  Lattice lq = compute_lq(a1, p3);
  // lQ = Z 3 alpha = 6 Z omega.
  CHECK(lq == Lattice::full(1).scaled(6));
  CHECK(compute_x_star(a1, p3, Lattice::full(1)).contains(lq));

  QuantumParameter p1 = QuantumParameter::from_order(a1, 1);
  CHECK(compute_lq(a1, p1) == root_lattice(a1));

  // B2 at zeta_4: sigma_long(2 alpha_short) stays in lQ.
  CartanDatum b2 = CartanDatum::parse("B2");
  QuantumParameter p4 = QuantumParameter::from_order(b2, 4);
  Lattice lq2 = compute_lq(b2, p4);
  int short_idx = b2.d(0) == 1 ? 0 : 1;
  Weight two_alpha = weight_scale(2, b2.simple_root(short_idx));
  CHECK(lq2.contains(two_alpha));
  CHECK(lq2.contains(b2.reflect(1 - short_idx, two_alpha)));
}

TEST_CASE("stability across the sweep grid") {
  for (const char* type : {"A1", "A2", "B2", "G2", "A1xA1"})
    for (long n = 1; n <= 12; ++n) {
      CartanDatum d = CartanDatum::parse(type);
      QuantumParameter p = QuantumParameter::from_order(d, n);
      Lattice xs = compute_x_star(d, p, Lattice::full(d.rank()));
      Lattice lq = compute_lq(d, p);
      CHECK_NOTHROW(check_stability(d, xs, lq));
    }
}

TEST_CASE("dual type classification") {
  Lattice full3 = Lattice::full(3);
  // l = 2 needs ambient order 4 (l_gamma = ord(q_gamma^2)).
  CartanDatum b3 = CartanDatum::parse("B3");
  QuantumParameter b3p = QuantumParameter::from_order(b3, 4);
  CHECK(dual_type(compute_dual_datum(b3, b3p, full3)) == "C3");

  CartanDatum c3 = CartanDatum::parse("C3");
  QuantumParameter c3p = QuantumParameter::from_order(c3, 4);
  CHECK(dual_type(compute_dual_datum(c3, c3p, full3)) == "B3");

  // Simply-laced types are self-dual at every order.
  for (const char* type : {"A1", "A2", "A3"})
    for (long n = 1; n <= 8; ++n) {
      CartanDatum d = CartanDatum::parse(type);
      QuantumParameter p = QuantumParameter::from_order(d, n);
      CHECK(dual_type(compute_dual_datum(d, p, Lattice::full(d.rank()))) ==
            type);
    }

  // Lacing 2 coprime to l = 3: same type.
  CartanDatum b2 = CartanDatum::parse("B2");
  QuantumParameter b2p = QuantumParameter::from_order(b2, 3);
  DualDatum dd = compute_dual_datum(b2, b2p, Lattice::full(2));
  CHECK(dual_type(dd) == "B2");
  CHECK(dd.dual_components[0].relation == "same");
}

TEST_CASE("epsilon parameters") {
  CartanDatum a1 = CartanDatum::parse("A1");
  Lattice full1 = Lattice::full(1);
  // A1 at zeta_{2p}, p odd prime: epsilon = -1.
  for (long p : {3L, 5L}) {
    QuantumParameter qp = QuantumParameter::from_order(a1, 2 * p);
    DualDatum dd = compute_dual_datum(a1, qp, full1);
    CHECK(dd.epsilon_per_simple == std::vector<int>{-1});
  }
  // A1 at zeta_5: epsilon = zeta_5^{25} = 1.
  QuantumParameter q5 = QuantumParameter::from_order(a1, 5);
  CHECK(compute_dual_datum(a1, q5, full1).epsilon_per_simple ==
        std::vector<int>{1});

  // B2 at zeta_4: short simple -> +1, long simple -> -1.
  CartanDatum b2 = CartanDatum::parse("B2");
  QuantumParameter p4 = QuantumParameter::from_order(b2, 4);
  DualDatum dd = compute_dual_datum(b2, p4, Lattice::full(2));
  for (int i = 0; i < 2; ++i)
    CHECK(dd.epsilon_per_simple[i] == (b2.d(i) == 1 ? 1 : -1));
}

TEST_CASE("dual lattices and P*") {
  for (const char* type : {"A1", "A2", "B2", "G2"})
    for (long n : {3L, 4L, 6L, 8L}) {
      CartanDatum d = CartanDatum::parse(type);
      QuantumParameter p = QuantumParameter::from_order(d, n);
      DualDatum dd = compute_dual_datum(d, p, Lattice::full(d.rank()));
      // P* is spanned by l_alpha omega_alpha; [P:P*] = prod l_alpha.
      IntMat gens;
      Integer prod = 1;
      for (int i = 0; i < d.rank(); ++i) {
        std::vector<Integer> row(d.rank(), 0);
        row[i] = p.l_simple(d, i);
        prod *= p.l_simple(d, i);
        gens.push_back(std::move(row));
      }
      CHECK(dd.p_star == Lattice::span(gens, d.rank()));
      CHECK(dd.p_star.index_in(Lattice::full(d.rank())) == prod);
      // alpha* = l_alpha alpha.
      for (int i = 0; i < d.rank(); ++i) {
        Weight expect = weight_scale(p.l_simple(d, i), d.simple_root(i));
        Weight got(dd.dual_simple_roots[i].size());
        for (size_t k = 0; k < got.size(); ++k)
          got[k] = dd.dual_simple_roots[i][k].get_si();
        CHECK(got == expect);
      }
    }
}

TEST_CASE("frobenius generator images") {
  CartanDatum a1 = CartanDatum::parse("A1");
  QuantumParameter p3 = QuantumParameter::from_order(a1, 3);
  Lattice full1 = Lattice::full(1);
  Weight in_xstar{3};
  Weight out_xstar{1};

  auto im = frobenius_generator_image(a1, p3, full1, 'E', 0, 3, in_xstar);
  REQUIRE(im.has_value());
  CHECK(im->kind == 'E');
  CHECK(im->power == 1);
  CHECK(im->weight == in_xstar);

  CHECK(!frobenius_generator_image(a1, p3, full1, 'E', 0, 1, in_xstar)
             .has_value());
  CHECK(!frobenius_generator_image(a1, p3, full1, 'F', 0, 6, out_xstar)
             .has_value());
}

TEST_CASE("quasi-classical weights") {
  CartanDatum a1 = CartanDatum::parse("A1");
  QuantumParameter p3 = QuantumParameter::from_order(a1, 3);
  Lattice full1 = Lattice::full(1);
  CHECK(is_quasi_classical_weight(a1, p3, full1, Weight{0}));
  CHECK(is_quasi_classical_weight(a1, p3, full1, Weight{3}));
  CHECK(!is_quasi_classical_weight(a1, p3, full1, Weight{1}));

  CartanDatum b2 = CartanDatum::parse("B2");
  QuantumParameter p4 = QuantumParameter::from_order(b2, 4);
  Lattice full2 = Lattice::full(2);
  int short_idx = b2.d(0) == 1 ? 0 : 1;
  Weight omega_long(2, 0);
  omega_long[1 - short_idx] = 1;
  CHECK(is_quasi_classical_weight(b2, p4, full2, omega_long));
}
