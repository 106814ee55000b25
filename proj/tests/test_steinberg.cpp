#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "smallq/errors.hpp"
#include "smallq/steinberg.hpp"

using namespace smallq;

TEST_CASE("restricted weights") {
  CartanDatum a1 = CartanDatum::parse("A1");
  QuantumParameter p3 = QuantumParameter::from_order(a1, 3);
  CHECK(is_restricted(a1, p3, Weight{0}));
  std::vector<Weight> box = enumerate_restricted(a1, p3);
  CHECK(box.size() == 3);
  std::set<Weight> s(box.begin(), box.end());
  CHECK(s == std::set<Weight>{{0}, {1}, {2}});

  // B2 zeta_4: one degenerate direction (the long simple root has l = 1).
  CartanDatum b2 = CartanDatum::parse("B2");
  QuantumParameter p4 = QuantumParameter::from_order(b2, 4);
  std::vector<Weight> box2 = enumerate_restricted(b2, p4);
  CHECK(box2.size() == 2);
  int short_idx = b2.d(0) == 1 ? 0 : 1;
  Weight omega_short(2, 0);
  omega_short[short_idx] = 1;
  CHECK(is_restricted(b2, p4, omega_short));
  CHECK(!is_restricted(b2, p4, weight_scale(2, omega_short)));
}

TEST_CASE("rho_l") {
  CartanDatum a1 = CartanDatum::parse("A1");
  for (long l : {1L, 2L, 3L, 4L, 5L}) {
    long order = l % 2 == 0 ? 2 * l : l;
    QuantumParameter p = QuantumParameter::from_order(a1, order);
    REQUIRE(p.l_simple(a1, 0) == l);
    CHECK(rho_l(a1, p) == Weight{l - 1});
  }

  // B2 at zeta_4: half the sum of the two short positive roots, the short
  // fundamental weight.
  CartanDatum b2 = CartanDatum::parse("B2");
  QuantumParameter p4 = QuantumParameter::from_order(b2, 4);
  int short_idx = b2.d(0) == 1 ? 0 : 1;
  Weight expect(2, 0);
  expect[short_idx] = 1;
  CHECK(rho_l(b2, p4) == expect);
  CHECK(is_restricted(b2, p4, rho_l(b2, p4)));

  CHECK(rho_l(b2, QuantumParameter::from_order(b2, 1)) == Weight{0, 0});
}

TEST_CASE("steinberg decomposition") {
  CartanDatum a1 = CartanDatum::parse("A1");
  // l = 3 at ambient order 6.
  QuantumParameter p6 = QuantumParameter::from_order(a1, 6);
  REQUIRE(p6.l_simple(a1, 0) == 3);
  SteinbergSplit s = steinberg_decompose(a1, p6, Weight{7});
  CHECK(s.lambda0 == Weight{1});
  CHECK(s.lambda1 == Weight{6});

  for (const Weight& lam : enumerate_restricted(a1, p6)) {
    SteinbergSplit t = steinberg_decompose(a1, p6, lam);
    CHECK(t.lambda0 == lam);
    CHECK(weight_is_zero(t.lambda1));
  }
  SteinbergSplit r = steinberg_decompose(a1, p6, rho_l(a1, p6));
  CHECK(r.lambda0 == rho_l(a1, p6));
  CHECK(weight_is_zero(r.lambda1));

  CHECK_THROWS_AS(steinberg_decompose(a1, p6, Weight{-1}), NotDominant);
}

TEST_CASE("decomposition uniqueness against box search") {
  for (const char* type : {"A2", "B2"}) {
    CartanDatum d = CartanDatum::parse(type);
    QuantumParameter p = QuantumParameter::from_order(
        d, std::string(type) == "A2" ? 3 : 4);
    long bound = 0;
    for (int i = 0; i < d.rank(); ++i)
      bound = std::max(bound, 3 * p.l_simple(d, i));
    for (long a = 0; a <= bound; ++a)
      for (long b = 0; b <= bound; ++b) {
        Weight lam{a, b};
        std::vector<SteinbergSplit> all =
            steinberg_decompose_by_search(d, p, lam);
        REQUIRE(all.size() == 1);
        SteinbergSplit s = steinberg_decompose(d, p, lam);
        CHECK(s.lambda0 == all[0].lambda0);
        CHECK(s.lambda1 == all[0].lambda1);
        CHECK(weight_add(s.lambda0, s.lambda1) == lam);
        CHECK(is_restricted(d, p, s.lambda0));
      }
  }
}

TEST_CASE("restricted box size equals [P:P*]") {
  for (const char* type : {"A1", "A2", "B2", "G2"})
    for (long n : {1L, 3L, 4L, 6L, 8L}) {
      CartanDatum d = CartanDatum::parse(type);
      QuantumParameter p = QuantumParameter::from_order(d, n);
      long prod = 1;
      for (int i = 0; i < d.rank(); ++i) prod *= p.l_simple(d, i);
      CHECK((long)enumerate_restricted(d, p).size() == prod);
    }
}

TEST_CASE("dual labels") {
  CartanDatum a1 = CartanDatum::parse("A1");
  for (long n = 0; n <= 6; ++n) CHECK(dual_label(a1, Weight{n}) == Weight{n});

  CartanDatum a2 = CartanDatum::parse("A2");
  CHECK(dual_label(a2, Weight{1, 0}) == Weight{0, 1});

  // rho_l is self-dual; duality is an involution preserving the box.
  for (const char* type : {"A2", "B2", "G2"})
    for (long n : {3L, 4L, 6L}) {
      CartanDatum d = CartanDatum::parse(type);
      QuantumParameter p = QuantumParameter::from_order(d, n);
      CHECK(dual_label(d, rho_l(d, p)) == rho_l(d, p));
      for (const Weight& lam : enumerate_restricted(d, p)) {
        Weight mu = dual_label(d, lam);
        CHECK(is_restricted(d, p, mu));
        CHECK(dual_label(d, mu) == lam);
      }
    }
}

TEST_CASE("rho_l membership in a non-simply-connected lattice") {
  // A1 adjoint at l = 2: rho_l = omega is outside X = Q = 2 Z omega.
  CartanDatum a1 = CartanDatum::parse("A1");
  QuantumParameter p4 = QuantumParameter::from_order(a1, 4);
  CHECK_THROWS_AS(rho_l_in(a1, p4, root_lattice(a1)), NotInCharacterLattice);
  CHECK(rho_l_in(a1, p4, Lattice::full(1)) == Weight{1});
}
