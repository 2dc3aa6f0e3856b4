#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bosonic/algebra.hpp"
#include "bosonic/braid.hpp"

namespace bosonic {

struct PbwDatum {
  IndexWord seq;  // i_u, ..., i_v
  int xi = 0;     // base level
  int first = 1;  // u
  int last() const { return first + static_cast<int>(seq.size()) - 1; }
};

// Exponent vector d, one entry per position of the datum.
using PbwIndex = std::vector<int>;
using PbwExpansion = std::map<PbwIndex, RatFunc>;

std::string pbw_index_to_string(const PbwIndex& d);

struct GramReport {
  std::vector<PbwIndex> indices;
  std::vector<std::vector<RatFunc>> matrix;
  bool ok = true;
  std::string failure;  // first offending pair when !ok
};

class Pbw {
 public:
  Pbw(Algebra& A, PbwDatum pd);

  const PbwDatum& datum() const { return pd_; }
  std::size_t size() const { return pd_.seq.size(); }
  Algebra& algebra() { return A_; }

  // F_k for k = u..v, stored 0-based. Bar invariance is asserted.
  const std::vector<Element>& root_vectors();
  const std::vector<Element>& root_vectors_starred();
  const Element& F(int k) { return root_vectors().at(static_cast<std::size_t>(k - pd_.first)); }
  RootVec root_weight(int k);

  // F_v^{d_v} ... F_u^{d_u}, normalized.
  Element monomial(const PbwIndex& d);
  // q_{i_k}^{-t(t-1)/2} (q_{i_k}^{-1} - q_{i_k})^t [t]_{i_k}! over all k.
  LaurentScalar diagonal_formula(const PbwIndex& d) const;
  RatFunc pair_monomials(const PbwIndex& d, const PbwIndex& e);

  // All d with total exponent <= max_deg.
  std::vector<PbwIndex> indices_up_to(int max_deg) const;
  GramReport gram_matrix(const std::vector<PbwIndex>& indices);

  // F_k F_t - q^{-(wt F_k, wt F_t)} F_t F_k as a combination of PBW monomials.
  PbwExpansion straighten(int k, int t);
  // Coordinates of x over the PBW monomials, or nullopt when x is not in the span.
  // max_deg < 0 infers the search: exact level profiles for single-slice data,
  // otherwise deepening by total degree.
  std::optional<PbwExpansion> membership(const Element& x, int max_deg = -1);

  // Whether every root vector lies in one slice, with levels nondecreasing.
  bool single_slice() {
    root_vectors();
    return slice_homogeneous_;
  }
  // Positions below are 0-based and inclusive.
  // Monomials of weight `weight` and total degree exactly `deg`.
  std::vector<PbwIndex> candidates_of_degree(const RootVec& weight, int deg, int lo, int hi);
  // Monomials whose per-level weights match some term of x; single-slice data only.
  std::vector<PbwIndex> candidates_by_profile(const Element& x, int lo, int hi);

 private:
  Algebra& A_;
  PbwDatum pd_;
  std::vector<Element> F_, Fstar_;
  std::vector<RootVec> weights_;
  // Single-slice data used by the factorized pairing.
  bool slice_homogeneous_ = false;
  std::vector<int> level_;
  std::vector<LaurentScalar> den_;                   // F_k = num_k / den_k
  std::vector<std::map<NodeWord, LaurentScalar>> num_;
  std::vector<ShuffleVec> phi_num_;
  std::map<PbwIndex, ShuffleVec> phi_cache_;
  std::map<PbwIndex, Element> monomial_cache_;

  void prepare_factorized();
  RatFunc pair_factorized(const PbwIndex& d, const PbwIndex& e);
  RatFunc level_pair(const PbwIndex& d, const PbwIndex& e);
  const ShuffleVec& level_phi(const PbwIndex& d);
  Element expand(const PbwExpansion& coords);
  std::optional<PbwExpansion> project(const Element& x, int lo, int hi, int max_deg);
};

struct WellDefinedReport {
  bool ok = true;
  std::vector<std::string> lines;
};

// For each single braid-move neighbor j of i, checks that the generators of each
// datum lie in the span of the other's PBW monomials.
WellDefinedReport seq_of(Algebra& A, const BraidWord& b, int xi = 0);

}  // namespace bosonic
