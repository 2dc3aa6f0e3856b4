#include "doctest.h"
#include <stdexcept>

#include "bosonic/cartan.hpp"

using namespace bosonic;

TEST_CASE("construction") {
  CHECK_THROWS_AS(CartanDatum::from_name("X2"), std::invalid_argument);
  CHECK_THROWS_AS(CartanDatum::from_name("G3"), std::invalid_argument);
  CHECK(CartanDatum::from_name("A3").rank() == 3);
}

TEST_CASE("braid orders") {
  CHECK(CartanDatum::from_name("A2").m(1, 2) == 3);
  CHECK(CartanDatum::from_name("B2").m(1, 2) == 4);
  CHECK(CartanDatum::from_name("G2").m(1, 2) == 6);
  const CartanDatum a3 = CartanDatum::from_name("A3");
  CHECK(a3.m(1, 3) == 2);
  CHECK(a3.m(2, 2) == 1);
}

TEST_CASE("symmetrized pairing") {
  const CartanDatum a2 = CartanDatum::from_name("A2");
  CHECK(a2.pairing({1, 0}, {1, 0}) == 2);
  CHECK(a2.pairing({1, 0}, {0, 1}) == -1);
  const CartanDatum b2 = CartanDatum::from_name("B2");
  CHECK(b2.pairing({1, 0}, {0, 1}) == -2);
  CHECK(b2.pairing({0, 1}, {1, 0}) == -2);
  for (const char* n : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
    const CartanDatum cd = CartanDatum::from_name(n);
    for (Node i = 1; i <= cd.rank(); ++i)
      for (Node j = 1; j <= cd.rank(); ++j) CHECK(cd.pairing_simple(i, j) == cd.pairing_simple(j, i));
  }
}

TEST_CASE("root systems") {
  CHECK(CartanDatum::from_name("A2").positive_roots().size() == 3);
  CHECK(CartanDatum::from_name("B2").positive_roots().size() == 4);
  CHECK(CartanDatum::from_name("G2").positive_roots().size() == 6);
  CHECK(CartanDatum::from_name("A3").positive_roots().size() == 6);
  CHECK(CartanDatum::from_name("D4").positive_roots().size() == 12);
  CHECK(CartanDatum::from_name("F4").positive_roots().size() == 24);
  const CartanDatum a2 = CartanDatum::from_name("A2");
  CHECK(a2.is_root({1, 1}));
  CHECK(a2.is_root({-1, 0}));
  CHECK_FALSE(a2.is_root({0, 0}));
  CHECK_FALSE(a2.is_root({2, 1}));
  CHECK(a2.root_string_p({1, 1}, {1, 0}) == 1);
  CHECK(a2.root_string_p({1, 0}, {1, 0}) == 0);
  CHECK(CartanDatum::from_name("G2").root_string_p({1, 1}, {0, 1}) == 1);
  CHECK(a2.coroot_pairing(1, {0, 1}) == -1);
}
