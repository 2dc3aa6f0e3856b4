#pragma once

#include <string>
#include <vector>

namespace bosonic {

// Coordinates over the simple roots, indexed 0..rank-1.
using RootVec = std::vector<int>;

// Nodes are numbered 1..rank (Bourbaki) in every public signature.
using Node = int;

class CartanDatum {
 public:
  // Accepts "A2", "B3", "G2", ... Throws std::invalid_argument otherwise.
  static CartanDatum from_name(const std::string& name);
  CartanDatum(char type, int rank);

  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const { return std::string(1, type_) + std::to_string(rank_); }

  int c(Node i, Node j) const { return cartan_[i - 1][j - 1]; }
  int d(Node i) const { return d_[i - 1]; }
  int m(Node i, Node j) const { return m_[i - 1][j - 1]; }
  int pairing_simple(Node i, Node j) const { return d(i) * c(i, j); }

  int pairing(const RootVec& a, const RootVec& b) const;
  // <h_i, beta> = 2(alpha_i, beta)/(alpha_i, alpha_i).
  int coroot_pairing(Node i, const RootVec& beta) const;

  RootVec simple_root(Node i) const;
  const std::vector<RootVec>& positive_roots() const { return positive_; }
  bool is_root(const RootVec& beta) const;
  int root_string_p(const RootVec& beta, const RootVec& alpha) const;

  void check_node(Node i) const;

  friend bool operator==(const CartanDatum& a, const CartanDatum& b) {
    return a.type_ == b.type_ && a.rank_ == b.rank_;
  }

 private:
  char type_;
  int rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> d_;
  std::vector<std::vector<int>> m_;
  std::vector<RootVec> positive_;

  void build_positive_roots();
};

int height(const RootVec& beta);
RootVec abs_vec(const RootVec& beta);
RootVec operator+(const RootVec& a, const RootVec& b);
RootVec operator-(const RootVec& a, const RootVec& b);
RootVec operator*(int k, const RootVec& a);
bool is_zero_vec(const RootVec& a);
bool is_nonneg(const RootVec& a);
std::string root_to_string(const RootVec& a);

}  // namespace bosonic
