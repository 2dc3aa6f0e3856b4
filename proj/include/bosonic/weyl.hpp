#pragma once

#include <string>
#include <vector>

#include "bosonic/cartan.hpp"

namespace bosonic {

using IndexWord = std::vector<Node>;

// Weyl group element stored as the images of the simple roots.
class WeylElement {
 public:
  static WeylElement identity(const CartanDatum& cd);
  static WeylElement reflection(const CartanDatum& cd, Node i);
  static WeylElement from_word(const CartanDatum& cd, const IndexWord& word);

  RootVec apply(const RootVec& beta) const;
  WeylElement operator*(const WeylElement& o) const;  // composition, o first
  // Length via the inversion count on positive roots.
  int length(const CartanDatum& cd) const;
  bool is_identity() const;
  bool has_right_descent(Node i) const;                        // l(w s_i) < l(w)
  bool has_left_descent(const CartanDatum& cd, Node i) const;  // l(s_i w) < l(w)
  // Lexicographically smallest reduced word.
  IndexWord reduced_word(const CartanDatum& cd) const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.images_ == b.images_; }
  friend bool operator<(const WeylElement& a, const WeylElement& b) { return a.images_ < b.images_; }

 private:
  std::vector<RootVec> images_;
};

RootVec reflect(const CartanDatum& cd, Node i, const RootVec& beta);
RootVec apply_word(const CartanDatum& cd, const IndexWord& word, const RootVec& beta);
bool is_reduced(const CartanDatum& cd, const IndexWord& word);
int weyl_length(const CartanDatum& cd, const IndexWord& word);
WeylElement longest_element(const CartanDatum& cd);
IndexWord longest_word(const CartanDatum& cd);
Node dual_index(Node i, const CartanDatum& cd);
IndexWord locally_reduced_sequence(const CartanDatum& cd, const IndexWord& prefix, int length);
bool is_locally_reduced(const CartanDatum& cd, const IndexWord& word);

std::string word_to_string(const IndexWord& w);
// Parses "1,2,1"; empty string gives the empty word.
IndexWord parse_index_word(const std::string& text);

}  // namespace bosonic
