#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "smallq/errors.hpp"
#include "smallq/qparam.hpp"

using namespace smallq;

TEST_CASE("l values per root") {
  CartanDatum g2 = CartanDatum::parse("G2");
  QuantumParameter p6 = QuantumParameter::from_order(g2, 6);
  for (const Root& r : g2.positive_roots())
    CHECK(p6.l_value(g2, r) == (r.d == 1 ? 3 : 1));

  CartanDatum b2 = CartanDatum::parse("B2");
  QuantumParameter p4 = QuantumParameter::from_order(b2, 4);
  for (const Root& r : b2.positive_roots())
    CHECK(p4.l_value(b2, r) == (r.d == 1 ? 2 : 1));

  // G2 at zeta_4: ord(zeta_4^2) = ord(zeta_4^6) = 2 everywhere.
  QuantumParameter g2p4 = QuantumParameter::from_order(g2, 4);
  for (const Root& r : g2.positive_roots()) {
    CHECK(g2p4.l_value(g2, r) == 2);
    CHECK(g2p4.l_value(g2, r) ==
          unit_order(g2p4.q_root(g2, r).pow(2)));
  }
}

TEST_CASE("l_i and l_prime_i") {
  CartanDatum b2 = CartanDatum::parse("B2");
  QuantumParameter p4 = QuantumParameter::from_order(b2, 4);
  CHECK(p4.l_i(b2, 0) == 2);
  CHECK(p4.l_prime_i(b2, 0) == 1);

  CartanDatum a2 = CartanDatum::parse("A2");
  QuantumParameter p5 = QuantumParameter::from_order(a2, 5);
  CHECK(p5.l_i(a2, 0) == 5);
  CHECK(p5.l_prime_i(a2, 0) == 5);

  CartanDatum g2 = CartanDatum::parse("G2");
  QuantumParameter p6 = QuantumParameter::from_order(g2, 6);
  CHECK(p6.l_i(g2, 0) == 3);
  CHECK(p6.l_prime_i(g2, 0) == 1);
}

TEST_CASE("bicharacter on Q x X") {
  for (const char* type : {"A2", "B2", "G2"}) {
    CartanDatum d = CartanDatum::parse(type);
    QuantumParameter p = QuantumParameter::from_order(d, 8);
    for (int i = 0; i < d.rank(); ++i) {
      Weight omega(d.rank(), 0);
      omega[i] = 1;
      // q(alpha, omega_alpha) = q_alpha.
      CHECK(p.bicharacter_eval(d, d.simple_root(i), omega) ==
            p.q_root_value(d, d.simple_root_obj(i)));
      // Orthogonality: q(alpha, omega_j) = 1 when (alpha, omega_j) = 0.
      for (int j = 0; j < d.rank(); ++j) {
        if (j == i) continue;
        Weight oj(d.rank(), 0);
        oj[j] = 1;
        if (d.pairing(d.simple_root_obj(i), oj) == 0)
          CHECK(p.bicharacter_eval(d, d.simple_root(i), oj) == Cyclotomic(1));
      }
    }
  }

  // B2 at zeta_4: the short simple root pairs to zero with the long
  // fundamental weight.
  CartanDatum b2 = CartanDatum::parse("B2");
  QuantumParameter p4 = QuantumParameter::from_order(b2, 4);
  int short_idx = b2.d(0) == 1 ? 0 : 1;
  Weight omega_long(2, 0);
  omega_long[1 - short_idx] = 1;
  CHECK(b2.pairing(b2.simple_root_obj(short_idx), omega_long) == 0);
  CHECK(p4.bicharacter_eval(b2, b2.simple_root(short_idx), omega_long) ==
        Cyclotomic(1));

  CHECK_THROWS_AS(p4.bicharacter_eval(b2, Weight{0, 1}, Weight{0, 0}),
                  OutsideRootLattice);
}

TEST_CASE("l is Weyl invariant") {
  for (const char* type : {"A2", "B2", "G2"})
    for (long n : {3L, 4L, 6L, 8L}) {
      CartanDatum d = CartanDatum::parse(type);
      QuantumParameter p = QuantumParameter::from_order(d, n);
      for (const Root& r : d.positive_roots())
        for (int i = 0; i < d.rank(); ++i) {
          Weight w = d.reflect(i, r.omega);
          std::vector<long> q = root_coords(d, w);
          bool negative = false;
          for (long c : q) negative = negative || c < 0;
          if (negative) {
            for (auto& c : q) c = -c;
            w = weight_scale(-1, w);
          }
          Root image{q, d.root_d(q), w};
          CHECK(p.l_value(d, image) == p.l_value(d, r));
        }
    }
}

TEST_CASE("q(alpha,alpha)^{2 l_alpha} = 1") {
  for (const char* type : {"A1", "A2", "B2", "G2"})
    for (long n = 1; n <= 12; ++n) {
      CartanDatum d = CartanDatum::parse(type);
      QuantumParameter p = QuantumParameter::from_order(d, n);
      for (int i = 0; i < d.rank(); ++i) {
        long l = p.l_simple(d, i);
        RootOfUnity q_aa =
            p.bicharacter_unit(d, d.simple_root(i), d.simple_root(i));
        CHECK(unit_order(q_aa.pow(l)) <= 2);
        CHECK(unit_order(q_aa.pow(2 * l)) == 1);
      }
    }
}

TEST_CASE("gram extension restricts to the component formula") {
  // A1 with q = zeta_16^2: the full P x P form has G = [[1/16]].
  CartanDatum a1 = CartanDatum::parse("A1");
  QuantumParameter p = QuantumParameter::from_exponents(a1, 16, {2});
  CHECK_THROWS_AS(p.gram_eval(Weight{1}, Weight{1}), MissingGramExtension);

  Matrix<Rational> g{{Rational(1, 16)}};
  p.set_gram_extension(g);
  std::mt19937 rng(6);
  std::uniform_int_distribution<long> c(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    long a = 2 * c(rng);  // root lattice = even weights
    long b = c(rng);
    CHECK(p.gram_eval(Weight{a}, Weight{b}) ==
          p.bicharacter_eval(a1, Weight{a}, Weight{b}));
  }
}

TEST_CASE("per-component orders and explicit exponents") {
  CartanDatum d = CartanDatum::parse("A1xA1");
  QuantumParameter p = QuantumParameter::from_orders(d, {3, 4});
  CHECK(p.ambient_order() == 12);
  CHECK(unit_order(p.q_i(0)) == 3);
  CHECK(unit_order(p.q_i(1)) == 4);

  QuantumParameter pe = QuantumParameter::from_exponents(d, 12, {4, 3});
  CHECK(unit_order(pe.q_i(0)) == 3);
  CHECK(unit_order(pe.q_i(1)) == 4);
}
