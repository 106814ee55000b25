#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "smallq/errors.hpp"
#include "smallq/lattice.hpp"
#include "smallq/rootdata.hpp"

using namespace smallq;

namespace {

std::multiset<std::vector<long>> root_set(const std::vector<Root>& roots) {
  std::multiset<std::vector<long>> s;
  for (const Root& r : roots) s.insert(r.q_coords);
  return s;
}

Weight random_weight(int rank, std::mt19937& rng) {
  std::uniform_int_distribution<long> c(-5, 5);
  Weight w(rank);
  for (auto& x : w) x = c(rng);
  return w;
}

}  // namespace

TEST_CASE("positive roots") {
  CartanDatum a2 = CartanDatum::parse("A2");
  CHECK(root_set(a2.positive_roots()) ==
        std::multiset<std::vector<long>>{{1, 0}, {1, 1}, {0, 1}});

  CartanDatum b2 = CartanDatum::parse("B2");
  auto roots = b2.positive_roots();
  CHECK(roots.size() == 4);
  std::multiset<long> lengths;
  for (const Root& r : roots) lengths.insert(r.d);
  CHECK(lengths == std::multiset<long>{1, 1, 2, 2});

  CHECK(CartanDatum::parse("G2").positive_roots().size() == 6);
}

TEST_CASE("convexity enumeration agrees with reflection closure") {
  for (const char* type : {"A1", "A2", "B2", "G2", "A3", "B3", "C3", "A1xA1"}) {
    CartanDatum d = CartanDatum::parse(type);
    CHECK(root_set(d.positive_roots()) ==
          root_set(d.positive_roots_by_closure()));
  }
}

TEST_CASE("positive root count equals longest word length") {
  for (const char* type : {"A1", "A2", "B2", "G2", "A3", "B3", "C3", "D4",
                           "F4", "A1xA1", "A2xB2"}) {
    CartanDatum d = CartanDatum::parse(type);
    CHECK(d.positive_roots().size() == d.longest_word().size());
  }
}

TEST_CASE("killing form") {
  CartanDatum a2 = CartanDatum::parse("A2");
  Weight alpha = a2.simple_root(0);
  CHECK(a2.killing_form(alpha, alpha) == Rational(2));

  for (const char* type : {"A2", "B2", "G2"}) {
    CartanDatum d = CartanDatum::parse(type);
    for (int i = 0; i < d.rank(); ++i) {
      Weight omega(d.rank(), 0);
      omega[i] = 1;
      CHECK(d.killing_form(d.simple_root(i), omega) == Rational(d.d(i)));
    }
  }

  // B2: the long non-simple root has squared length 4.
  CartanDatum b2 = CartanDatum::parse("B2");
  for (const Root& r : b2.positive_roots()) {
    long ht = r.height();
    Rational v = b2.killing_form(r.omega, r.omega);
    CHECK(v == Rational(2 * r.d));
    if (r.d == 2 && ht > 1) CHECK(v == Rational(4));
  }
}

TEST_CASE("killing form is Weyl invariant") {
  std::mt19937 rng(3);
  for (const char* type : {"A2", "B2", "G2"}) {
    CartanDatum d = CartanDatum::parse(type);
    std::uniform_int_distribution<int> pick(0, d.rank() - 1);
    for (int trial = 0; trial < 70; ++trial) {
      Weight lam = random_weight(d.rank(), rng);
      Weight mu = random_weight(d.rank(), rng);
      int i = pick(rng);
      CHECK(d.killing_form(d.reflect(i, lam), d.reflect(i, mu)) ==
            d.killing_form(lam, mu));
    }
  }
}

TEST_CASE("reflections and orbits") {
  CartanDatum a1 = CartanDatum::parse("A1");
  CHECK(a1.reflect(0, Weight{1}) == weight_sub(Weight{1}, a1.simple_root(0)));

  CartanDatum a2 = CartanDatum::parse("A2");
  CHECK(a2.weyl_orbit(Weight{1, 1}).size() == 6);

  std::mt19937 rng(4);
  for (const char* type : {"A2", "B2", "G2"}) {
    CartanDatum d = CartanDatum::parse(type);
    std::uniform_int_distribution<int> pick(0, d.rank() - 1);
    for (int trial = 0; trial < 100; ++trial) {
      Weight lam = random_weight(d.rank(), rng);
      int i = pick(rng);
      CHECK(d.reflect(i, d.reflect(i, lam)) == lam);
    }
  }
}

TEST_CASE("lattice index and quotient invariants") {
  CartanDatum a2 = CartanDatum::parse("A2");
  CHECK(root_lattice(a2).index_in(weight_lattice(a2)) == Integer(3));

  CartanDatum b2 = CartanDatum::parse("B2");
  CHECK(root_lattice(b2).index_in(weight_lattice(b2)) == Integer(2));

  CartanDatum a1 = CartanDatum::parse("A1");
  Lattice two_p = Lattice::full(1).scaled(2);
  CHECK(two_p.quotient_invariants_in(Lattice::full(1)) ==
        std::vector<Integer>{Integer(2)});

  // Containment is enforced.
  CHECK_THROWS_AS(Lattice::full(1).index_in(two_p), NotSublattice);
}

TEST_CASE("dominance and lowest weight partners") {
  CartanDatum a1 = CartanDatum::parse("A1");
  for (long n = 0; n <= 5; ++n)
    CHECK(a1.lowest_weight_partner(Weight{n}) == Weight{n});

  CartanDatum a2 = CartanDatum::parse("A2");
  CHECK(a2.lowest_weight_partner(Weight{1, 0}) == Weight{0, 1});

  CartanDatum b2 = CartanDatum::parse("B2");
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    Weight lam = random_weight(2, rng);
    CHECK(b2.apply_w0(lam) == weight_scale(-1, lam));
  }

  CHECK(a2.is_dominant(Weight{2, 0}));
  CHECK(!a2.is_dominant(Weight{-1, 3}));
}

TEST_CASE("product data factors componentwise") {
  CartanDatum d = CartanDatum::parse("A1xA1");
  CHECK(d.rank() == 2);
  CHECK(d.positive_roots().size() == 2);
  CHECK(d.killing_form(d.simple_root(0), d.simple_root(1)) == Rational(0));
  CHECK(d.weyl_orbit(Weight{1, 1}).size() == 4);

  CartanDatum d2 = CartanDatum::parse("A2xB2");
  CHECK(d2.positive_roots().size() == 3 + 4);
}

TEST_CASE("type parsing rejects junk") {
  CHECK_THROWS_AS(CartanDatum::parse("Z9"), InputError);
  CHECK_THROWS_AS(CartanDatum::parse("E9"), Error);
}
