#include <algorithm>

#include "doctest.h"
#include "bosonic/braid.hpp"

using namespace bosonic;

namespace {

BraidWord cat(BraidWord a, const BraidWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

TEST_CASE("weyl image and permutation braids") {
  const CartanDatum a2 = CartanDatum::from_name("A2");
  CHECK(weyl_image(a2, {1, 2, 1}) == longest_element(a2));
  CHECK(weyl_image(a2, {1, 1}).is_identity());
  CHECK(weyl_image(a2, {1, 2, 1, 2}) == WeylElement::from_word(a2, {2, 1}));
  CHECK(is_permutation_braid(a2, {1, 2, 1}));
  CHECK_FALSE(is_permutation_braid(a2, {1, 1}));
  CHECK(is_permutation_braid(CartanDatum::from_name("B2"), {1, 2, 1, 2}));
}

TEST_CASE("braid equality") {
  const CartanDatum a2 = CartanDatum::from_name("A2");
  CHECK(braid_equal(a2, {1, 2, 1}, {2, 1, 2}));
  CHECK_FALSE(braid_equal(a2, {1, 2}, {2, 1}));
  CHECK(braid_equal(a2, {1, 2, 2, 1, 2, 2}, {1, 2, 1, 2, 1, 2}));
  CHECK_FALSE(braid_equal(a2, {1, 1}, {}));
}

TEST_CASE("left normal form") {
  const CartanDatum a2 = CartanDatum::from_name("A2");
  GarsideForm g = garside_normal_form(a2, {1, 2, 1});
  CHECK(g.delta_power == 1);
  CHECK(g.factors.empty());
  g = garside_normal_form(a2, {1, 1});
  CHECK(g.delta_power == 0);
  CHECK(g.factor_words(a2) == std::vector<IndexWord>{{1}, {1}});
  g = garside_normal_form(a2, {2, 1, 1, 2});
  CHECK(g.delta_power == 0);
  CHECK(g.factor_words(a2) == std::vector<IndexWord>{{2, 1}, {1, 2}});
  CHECK(g.to_string(a2) == "Delta^0 | 2,1 | 1,2");
  CHECK(braid_equal(a2, g.to_word(a2), {2, 1, 1, 2}));
  CHECK(garside_normal_form(a2, {}).factors.empty());
}

TEST_CASE("gcd and prefix order") {
  const CartanDatum a2 = CartanDatum::from_name("A2");
  CHECK(braid_equal(a2, braid_gcd(a2, {1, 2}, {1, 1}), {1}));
  CHECK(braid_equal(a2, braid_gcd(a2, {1, 2, 1}, {2, 1, 2}), {1, 2, 1}));
  CHECK(braid_equal(a2, braid_gcd(a2, {1, 1, 2}, {1, 1, 2}), {1, 1, 2}));
  CHECK(braid_equal(a2, braid_gcd(a2, {1, 1, 1}, {1, 1, 2, 1, 1, 2}), {1, 1}));
  CHECK(braid_gcd(a2, {1}, {2}).empty());

  CHECK(left_divisible(a2, {2, 1, 2}, 1));
  CHECK_FALSE(left_divisible(a2, {2, 1}, 1));
  CHECK(braid_equal(a2, left_quotient(a2, {2, 1, 2}, 1), {2, 1}));
  CHECK_THROWS_AS(left_quotient(a2, {2, 1}, 1), std::invalid_argument);

  CHECK(braid_prefix_le(a2, {1}, {2, 1, 2}));
  CHECK_FALSE(braid_prefix_le(a2, {1, 2}, {2, 1}));
  const BraidWord x{1, 2}, y{1, 2, 2, 1};
  REQUIRE(braid_prefix_le(a2, x, y));
  for (const BraidWord& z : {BraidWord{1}, BraidWord{2, 1}, BraidWord{1, 1, 2}})
    CHECK(braid_prefix_le(a2, cat(z, x), cat(z, y)));
}

TEST_CASE("completion to a power of Delta") {
  const CartanDatum a2 = CartanDatum::from_name("A2");
  const IndexWord delta = longest_word(a2);
  DeltaCompletion c = complete_to_delta_power(a2, delta);
  CHECK(c.y.empty());
  CHECK(c.m == 1);
  c = complete_to_delta_power(a2, {1});
  CHECK(c.m == 1);
  CHECK(c.y == BraidWord{2, 1});
  for (const BraidWord& x : {BraidWord{1, 1}, BraidWord{2, 1, 1, 2}, BraidWord{1, 2, 2, 1, 1}}) {
    c = complete_to_delta_power(a2, x);
    BraidWord power;
    for (int k = 0; k < c.m; ++k) power = cat(power, delta);
    CHECK(braid_equal(a2, cat(x, c.y), power));
  }
  CHECK(complete_to_delta_power(a2, {1, 1}).m == 4);
}

TEST_CASE("braid moves") {
  const CartanDatum a2 = CartanDatum::from_name("A2");
  CHECK(braid_move_neighbors(a2, {1, 2, 1}) == std::vector<BraidWord>{{2, 1, 2}});
  CHECK(braid_move_neighbors(a2, {1, 1}).empty());
  const CartanDatum b2 = CartanDatum::from_name("B2");
  CHECK(braid_move_neighbors(b2, {1, 2, 1, 2}) == std::vector<BraidWord>{{2, 1, 2, 1}});
  const CartanDatum a3 = CartanDatum::from_name("A3");
  CHECK(braid_move_neighbors(a3, {1, 3}) == std::vector<BraidWord>{{3, 1}});

  auto cls = braid_move_class(a2, {1, 2, 2, 1, 2, 2});
  CHECK(std::find(cls.begin(), cls.end(), BraidWord{1, 2, 1, 2, 1, 2}) != cls.end());
  for (const auto& w : cls) CHECK(braid_equal(a2, w, {1, 2, 2, 1, 2, 2}));
  CHECK(braid_move_class(a3, longest_word(a3)).size() == 16);
}
