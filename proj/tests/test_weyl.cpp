#include "doctest.h"
#include "bosonic/weyl.hpp"

using namespace bosonic;

TEST_CASE("reflections") {
  const CartanDatum a2 = CartanDatum::from_name("A2");
  CHECK(apply_word(a2, {1}, {1, 0}) == RootVec{-1, 0});
  CHECK(apply_word(a2, {1}, {0, 1}) == RootVec{1, 1});
  CHECK(apply_word(a2, {1, 2}, {1, 0}) == RootVec{0, 1});
  CHECK(apply_word(a2, {}, {3, -2}) == RootVec{3, -2});
}

TEST_CASE("length and reducedness") {
  const CartanDatum a2 = CartanDatum::from_name("A2");
  CHECK(is_reduced(a2, {1, 2, 1}));
  CHECK_FALSE(is_reduced(a2, {1, 1}));
  CHECK(weyl_length(a2, {1, 2, 1, 2}) == 2);
  CHECK(weyl_length(a2, {}) == 0);
  CHECK(WeylElement::from_word(a2, {1, 2, 1}) == WeylElement::from_word(a2, {2, 1, 2}));
  const WeylElement w = WeylElement::from_word(a2, {1, 2});
  CHECK(w.length(a2) == 2);
  CHECK(w.has_right_descent(2));
  CHECK_FALSE(w.has_right_descent(1));
  CHECK(w.has_left_descent(a2, 1));
  CHECK(WeylElement::from_word(a2, w.reduced_word(a2)) == w);
}

TEST_CASE("longest element") {
  const CartanDatum a2 = CartanDatum::from_name("A2");
  CHECK(longest_word(a2) == IndexWord{1, 2, 1});
  CHECK(dual_index(1, a2) == 2);
  CHECK(dual_index(2, a2) == 1);
  const CartanDatum b2 = CartanDatum::from_name("B2");
  CHECK(dual_index(1, b2) == 1);
  CHECK(dual_index(2, b2) == 2);
  const CartanDatum a3 = CartanDatum::from_name("A3");
  CHECK(dual_index(2, a3) == 2);
  CHECK(dual_index(1, a3) == 3);
  CHECK(longest_element(a3).length(a3) == 6);
  CHECK(longest_element(CartanDatum::from_name("G2")).length(CartanDatum::from_name("G2")) == 6);
  for (Node i = 1; i <= 3; ++i) {
    RootVec img = longest_element(a3).apply(a3.simple_root(i));
    for (int& x : img) x = -x;
    CHECK(img == a3.simple_root(dual_index(i, a3)));
  }
}

TEST_CASE("locally reduced sequences") {
  const CartanDatum a2 = CartanDatum::from_name("A2");
  const CartanDatum b2 = CartanDatum::from_name("B2");
  CHECK(locally_reduced_sequence(a2, {1}, 6) == IndexWord{1, 2, 1, 2, 1, 2});
  CHECK(locally_reduced_sequence(b2, {1}, 8) == IndexWord{1, 2, 1, 2, 1, 2, 1, 2});
  for (const char* n : {"A3", "B3", "G2"}) {
    const CartanDatum cd = CartanDatum::from_name(n);
    const int l = static_cast<int>(longest_word(cd).size());
    const IndexWord s = locally_reduced_sequence(cd, {1}, 3 * l);
    CHECK(is_locally_reduced(cd, s));
    for (int k = 0; k + l < 3 * l; ++k) CHECK(s[k + l] == dual_index(s[k], cd));
    for (int k = 0; k + l <= 3 * l; ++k) CHECK(is_reduced(cd, IndexWord(s.begin() + k, s.begin() + k + l)));
  }
  CHECK_FALSE(is_locally_reduced(a2, {1, 2, 2}));
}

TEST_CASE("word text") {
  CHECK(parse_index_word("1,2,1") == IndexWord{1, 2, 1});
  CHECK(word_to_string({2, 1}) == "2,1");
}
