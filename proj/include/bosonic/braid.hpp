#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bosonic/weyl.hpp"

namespace bosonic {

// Positive braid words are plain index words.
using BraidWord = IndexWord;

// Left normal form Delta^r x_1 ... x_k of a positive braid.
struct GarsideForm {
  int delta_power = 0;
  std::vector<WeylElement> factors;

  friend bool operator==(const GarsideForm& a, const GarsideForm& b) {
    return a.delta_power == b.delta_power && a.factors == b.factors;
  }
  std::vector<IndexWord> factor_words(const CartanDatum& cd) const;
  BraidWord to_word(const CartanDatum& cd) const;
  // "Delta^r | 1,2 | 2,1"
  std::string to_string(const CartanDatum& cd) const;
};

WeylElement weyl_image(const CartanDatum& cd, const BraidWord& w);
bool is_permutation_braid(const CartanDatum& cd, const BraidWord& w);
GarsideForm garside_normal_form(const CartanDatum& cd, const BraidWord& w);
bool braid_equal(const CartanDatum& cd, const BraidWord& x, const BraidWord& y);

// r_i <= z in the prefix order.
bool left_divisible(const CartanDatum& cd, const BraidWord& z, Node i);
// A word for r_i^{-1} z; requires left_divisible.
BraidWord left_quotient(const CartanDatum& cd, const BraidWord& z, Node i);
BraidWord braid_gcd(const CartanDatum& cd, const BraidWord& x, const BraidWord& y);
// x <= y in the prefix order.
bool braid_prefix_le(const CartanDatum& cd, const BraidWord& x, const BraidWord& y);

struct DeltaCompletion {
  BraidWord y;
  int m = 0;
};
DeltaCompletion complete_to_delta_power(const CartanDatum& cd, const BraidWord& x);

std::vector<BraidWord> braid_move_neighbors(const CartanDatum& cd, const BraidWord& w);
// Every word reachable by braid moves (the full equivalence class).
std::vector<BraidWord> braid_move_class(const CartanDatum& cd, const BraidWord& w);

}  // namespace bosonic
