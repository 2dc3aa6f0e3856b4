#pragma once

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bosonic/cartan.hpp"
#include "bosonic/qnumbers.hpp"
#include "bosonic/ratfunc.hpp"
#include "bosonic/shuffle.hpp"

namespace bosonic {

struct Letter {
  Node i = 1;
  int p = 0;
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

// Term order: longer words first, then by (p descending, i ascending) letter by letter.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const;
};

// Finite linear combination of words with coefficients in Q(v).
// Arithmetic here is free (no relations); use Algebra for products in A-hat.
class Element {
 public:
  using Terms = std::map<Word, RatFunc, WordOrder>;

  Element() = default;
  Element(const RatFunc& c);  // NOLINT(google-explicit-constructor)
  static Element word(const Word& w, const RatFunc& c = RatFunc(1));
  static Element letter(Node i, int p) { return word({Letter{i, p}}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  RatFunc coeff(const Word& w) const;
  void add_term(const Word& w, const RatFunc& c);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element operator-() const;
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  Element scaled(const RatFunc& c) const;
  // Free product: concatenation of words.
  Element concat(const Element& o) const;
  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

  // Canonical q-spelled text, e.g. "q^2 f[1,1] f[1,0] + (1 - q^2)".
  std::string to_string() const;

 private:
  Terms terms_;
};

// A-hat weight: wt(f_{i,p}) = (-1)^p alpha_i.
RootVec word_weight(const CartanDatum& cd, const Word& w);

class GuardrailError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonHomogeneousError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Canonical basis of one weight space of U_q^-: Gram-pivot words.
struct SliceBasis {
  RootVec weight;
  std::vector<NodeWord> words;   // all words of this weight, lexicographic
  std::vector<NodeWord> pivots;  // selected basis words
  std::vector<std::vector<LaurentScalar>> gram;      // Kashiwara Gram on pivots
  std::vector<std::vector<RatFunc>> gram_inverse;
};

struct AlgebraOptions {
  int max_height = 10;
  std::string cache_dir;  // empty: no persistence
};

class Algebra {
 public:
  explicit Algebra(CartanDatum cd, AlgebraOptions opts = {});
  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;

  const CartanDatum& cartan() const { return cd_; }
  const AlgebraOptions& options() const { return opts_; }
  void set_max_height(int h) { opts_.max_height = h; }

  Element generator(Node i, int p) const;
  Element mul(const Element& x, const Element& y);
  Element pow(const Element& x, int n);
  Element normal_form(const Element& x);
  // Step 1 of the normal form only: words sorted by weakly decreasing level.
  Element block_sort(const Element& x) const;
  bool is_block_sorted(const Word& w) const;

  RootVec weight(const Element& x) const;
  // Splits x by A-hat weight.
  std::map<RootVec, Element> homogeneous_components(const Element& x) const;

  Element shift_D(const Element& x, int k) const;
  Element star(const Element& x) const;
  Element bar(const Element& x) const;
  // Letter relabelling by a diagram automorphism given as perm[i-1] = sigma(i).
  Element sigma(const Element& x, const std::vector<Node>& perm) const;

  // Derivations on a single slice, computed through the identification with U_q^-.
  Element eprime_slice(Node i, const Element& x);
  Element estar_slice(Node i, const Element& x);
  RatFunc kashiwara_form_slice(const Element& x, const Element& y);
  RatFunc lusztig_form_slice(const Element& x, const Element& y);

  // The invariant form on A-hat.
  RatFunc form(const Element& x, const Element& y);
  // kappa^{2n}/prod (1 - q_i^2)^{n_i}: per-block factor turning (.,.)_K into the form.
  LaurentScalar block_factor(const RootVec& n);

  Element adjoint_Eprime(Node i, int k, const Element& x);
  Element adjoint_Estar(Node i, int k, const Element& x);

  const SliceBasis& slice_basis(const RootVec& weight);
  // Coordinates of a slice word over the pivot basis of its weight.
  const std::vector<std::pair<NodeWord, RatFunc>>& slice_coordinates(const NodeWord& w);
  PhiTable& phi() { return phi_; }
  // Number of Kostant partitions of beta.
  long kostant_partition_count(const RootVec& beta);

 private:
  CartanDatum cd_;
  AlgebraOptions opts_;
  QuantumConstants qc_;
  PhiTable phi_;
  std::recursive_mutex mu_;
  std::map<RootVec, std::unique_ptr<SliceBasis>> bases_;
  std::map<RootVec, LaurentScalar> factor_memo_;
  std::map<NodeWord, std::vector<std::pair<NodeWord, RatFunc>>> coords_;
  std::map<std::pair<RootVec, int>, long> kostant_memo_;

  void insert_letter(const Word& sorted, const Letter& x, const LaurentScalar& c,
                     std::map<Word, LaurentScalar, WordOrder>& out) const;
  std::unique_ptr<SliceBasis> build_basis(const RootVec& weight);
  long kostant(const RootVec& beta, int from);
};

NodeWord to_node_word(const Word& w);
Word from_node_word(const NodeWord& w, int level);
std::string word_to_text(const Word& w);

}  // namespace bosonic
