#include "bosonic/weyl.hpp"

#include <sstream>
#include <stdexcept>

namespace bosonic {

RootVec reflect(const CartanDatum& cd, Node i, const RootVec& beta) {
  RootVec r = beta;
  r[i - 1] -= cd.coroot_pairing(i, beta);
  return r;
}

WeylElement WeylElement::identity(const CartanDatum& cd) {
  WeylElement w;
  for (Node i = 1; i <= cd.rank(); ++i) w.images_.push_back(cd.simple_root(i));
  return w;
}

WeylElement WeylElement::reflection(const CartanDatum& cd, Node i) {
  cd.check_node(i);
  WeylElement w;
  for (Node j = 1; j <= cd.rank(); ++j) w.images_.push_back(reflect(cd, i, cd.simple_root(j)));
  return w;
}

WeylElement WeylElement::from_word(const CartanDatum& cd, const IndexWord& word) {
  WeylElement w = identity(cd);
  for (Node i : word) w = w * reflection(cd, i);
  return w;
}

RootVec WeylElement::apply(const RootVec& beta) const {
  RootVec r(beta.size(), 0);
  for (std::size_t j = 0; j < beta.size(); ++j)
    if (beta[j] != 0)
      for (std::size_t k = 0; k < r.size(); ++k) r[k] += beta[j] * images_[j][k];
  return r;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  WeylElement w;
  for (const auto& img : o.images_) w.images_.push_back(apply(img));
  return w;
}

int WeylElement::length(const CartanDatum& cd) const {
  int n = 0;
  for (const auto& beta : cd.positive_roots())
    if (!is_nonneg(apply(beta))) ++n;
  return n;
}

bool WeylElement::is_identity() const {
  for (std::size_t j = 0; j < images_.size(); ++j)
    for (std::size_t k = 0; k < images_.size(); ++k)
      if (images_[j][k] != (j == k ? 1 : 0)) return false;
  return true;
}

bool WeylElement::has_right_descent(Node i) const { return !is_nonneg(images_[i - 1]); }

bool WeylElement::has_left_descent(const CartanDatum& cd, Node i) const {
  RootVec target = -1 * cd.simple_root(i);
  for (const auto& beta : cd.positive_roots())
    if (apply(beta) == target) return true;
  return false;
}

IndexWord WeylElement::reduced_word(const CartanDatum& cd) const {
  IndexWord word;
  WeylElement w = *this;
  while (!w.is_identity()) {
    Node i = 1;
    while (!w.has_left_descent(cd, i)) ++i;
    word.push_back(i);
    w = reflection(cd, i) * w;
  }
  return word;
}

RootVec apply_word(const CartanDatum& cd, const IndexWord& word, const RootVec& beta) {
  RootVec r = beta;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = reflect(cd, *it, r);
  return r;
}

bool is_reduced(const CartanDatum& cd, const IndexWord& word) {
  // l(w s_i) = l(w) + 1 iff w(alpha_i) > 0.
  WeylElement w = WeylElement::identity(cd);
  for (Node i : word) {
    cd.check_node(i);
    if (w.has_right_descent(i)) return false;
    w = w * WeylElement::reflection(cd, i);
  }
  return true;
}

int weyl_length(const CartanDatum& cd, const IndexWord& word) {
  return WeylElement::from_word(cd, word).length(cd);
}

WeylElement longest_element(const CartanDatum& cd) {
  WeylElement w = WeylElement::identity(cd);
  for (bool grew = true; grew;) {
    grew = false;
    for (Node i = 1; i <= cd.rank(); ++i)
      if (!w.has_right_descent(i)) {
        w = w * WeylElement::reflection(cd, i);
        grew = true;
      }
  }
  return w;
}

IndexWord longest_word(const CartanDatum& cd) { return longest_element(cd).reduced_word(cd); }

Node dual_index(Node i, const CartanDatum& cd) {
  RootVec img = -1 * longest_element(cd).apply(cd.simple_root(i));
  for (Node j = 1; j <= cd.rank(); ++j)
    if (img == cd.simple_root(j)) return j;
  throw std::logic_error("dual_index: -w0(alpha_i) is not simple");
}

bool is_locally_reduced(const CartanDatum& cd, const IndexWord& word) {
  std::size_t ell = longest_word(cd).size();
  if (word.size() <= ell) return is_reduced(cd, word);
  for (std::size_t k = 0; k + ell <= word.size(); ++k)
    if (!is_reduced(cd, IndexWord(word.begin() + k, word.begin() + k + ell))) return false;
  return true;
}

IndexWord locally_reduced_sequence(const CartanDatum& cd, const IndexWord& prefix, int length) {
  if (length < 0) throw std::invalid_argument("negative sequence length");
  if (!is_locally_reduced(cd, prefix))
    throw std::invalid_argument("prefix " + word_to_string(prefix) + " is not locally reduced");
  std::size_t ell = longest_word(cd).size();
  IndexWord seq = prefix;
  if (seq.size() < ell) {
    // Extend by the smallest right ascent until w0 is reached.
    WeylElement target = longest_element(cd);
    WeylElement cur = WeylElement::from_word(cd, seq);
    while (!(cur == target)) {
      Node i = 1;
      while (cur.has_right_descent(i)) ++i;
      cur = cur * WeylElement::reflection(cd, i);
      seq.push_back(i);
    }
  }
  while (seq.size() < static_cast<std::size_t>(length)) seq.push_back(dual_index(seq[seq.size() - ell], cd));
  seq.resize(static_cast<std::size_t>(length));
  return seq;
}

std::string word_to_string(const IndexWord& w) {
  std::ostringstream os;
  for (std::size_t k = 0; k < w.size(); ++k) os << (k ? "," : "") << w[k];
  return os.str();
}

IndexWord parse_index_word(const std::string& text) {
  IndexWord w;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t b = tok.find_first_not_of(" \t");
    std::size_t e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty entry in index word '" + text + "'");
    tok = tok.substr(b, e - b + 1);
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad index '" + tok + "'");
    w.push_back(v);
  }
  return w;
}

}  // namespace bosonic
