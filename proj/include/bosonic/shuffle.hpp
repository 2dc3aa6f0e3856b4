#pragma once

#include <map>
#include <mutex>
#include <string>
#include <unordered_map>

#include "bosonic/cartan.hpp"
#include "bosonic/laurent.hpp"

namespace bosonic {

// A word in slice letters; each char holds a node index 1..rank.
using NodeWord = std::string;

// Sparse vector over NodeWords. For y in U_q^-, phi(y)[w] = (w, y)_K.
using ShuffleVec = std::unordered_map<NodeWord, LaurentScalar>;

RootVec node_word_weight(const CartanDatum& cd, const NodeWord& w);
std::string node_word_to_string(const NodeWord& w);

// Twisted shuffle product: phi(xy) = phi(x) * phi(y).
ShuffleVec shuffle_product(const CartanDatum& cd, const ShuffleVec& x, const ShuffleVec& y);
void add_scaled(ShuffleVec& acc, const ShuffleVec& x, const LaurentScalar& c);

// Memoized phi of single words, shared by all form computations of one datum.
class PhiTable {
 public:
  explicit PhiTable(const CartanDatum& cd) : cd_(cd) {}
  const ShuffleVec& phi(const NodeWord& w);
  // (x, y)_K for two words.
  LaurentScalar pair(const NodeWord& x, const NodeWord& y);
  void clear();

 private:
  const CartanDatum& cd_;
  std::mutex mu_;
  std::unordered_map<NodeWord, ShuffleVec> memo_;
  const ShuffleVec& phi_locked(const NodeWord& w);
};

}  // namespace bosonic
