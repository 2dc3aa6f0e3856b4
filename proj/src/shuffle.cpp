#include "bosonic/shuffle.hpp"

#include <vector>

namespace bosonic {

RootVec node_word_weight(const CartanDatum& cd, const NodeWord& w) {
  RootVec r(cd.rank(), 0);
  for (char c : w) r[c - 1] += 1;
  return r;
}

std::string node_word_to_string(const NodeWord& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(static_cast<int>(w[k]));
  }
  return s;
}

void add_scaled(ShuffleVec& acc, const ShuffleVec& x, const LaurentScalar& c) {
  if (c.is_zero()) return;
  for (const auto& [w, v] : x) {
    auto& slot = acc[w];
    slot += v * c;
    if (slot.is_zero()) acc.erase(w);
  }
}

namespace {

struct Shuffler {
  const NodeWord& a;
  const NodeWord& b;
  // cost[ia][ib]: (alpha_{a[ia]}, alpha_{b[0]} + ... + alpha_{b[ib-1]})
  std::vector<std::vector<int>> cost;
  NodeWord buf;
  std::map<NodeWord, std::map<int, long>> out;

  void run(std::size_t ia, std::size_t ib, int e) {
    if (ia == a.size() && ib == b.size()) {
      out[buf][-2 * e] += 1;
      return;
    }
    if (ia < a.size()) {
      buf.push_back(a[ia]);
      run(ia + 1, ib, e + cost[ia][ib]);
      buf.pop_back();
    }
    if (ib < b.size()) {
      buf.push_back(b[ib]);
      run(ia, ib + 1, e);
      buf.pop_back();
    }
  }
};

}  // namespace

ShuffleVec shuffle_product(const CartanDatum& cd, const ShuffleVec& x, const ShuffleVec& y) {
  ShuffleVec result;
  for (const auto& [a, ca] : x) {
    for (const auto& [b, cb] : y) {
      Shuffler s{a, b, {}, {}, {}};
      s.cost.assign(a.size(), std::vector<int>(b.size() + 1, 0));
      for (std::size_t ia = 0; ia < a.size(); ++ia)
        for (std::size_t ib = 0; ib < b.size(); ++ib)
          s.cost[ia][ib + 1] = s.cost[ia][ib] + cd.pairing_simple(a[ia], b[ib]);
      s.run(0, 0, 0);
      LaurentScalar cab = ca * cb;
      for (auto& [w, poly] : s.out) {
        std::vector<LaurentScalar::Term> t;
        for (auto [e, n] : poly) t.emplace_back(e, Rational(n));
        auto& slot = result[w];
        slot += cab * LaurentScalar::from_terms(std::move(t));
        if (slot.is_zero()) result.erase(w);
      }
    }
  }
  return result;
}

const ShuffleVec& PhiTable::phi(const NodeWord& w) {
  std::lock_guard<std::mutex> lock(mu_);
  return phi_locked(w);
}

const ShuffleVec& PhiTable::phi_locked(const NodeWord& w) {
  auto it = memo_.find(w);
  if (it != memo_.end()) return it->second;
  ShuffleVec r;
  if (w.empty()) {
    r.emplace(NodeWord{}, LaurentScalar(1));
  } else {
    // phi(i u)[x] = sum over positions t with x_t = i of q^{-(alpha_i, wt x_{<t})} phi(u)[x minus t]
    const char i = w[0];
    const ShuffleVec& tail = phi_locked(w.substr(1));
    for (const auto& [x, c] : tail) {
      int e = 0;
      for (std::size_t t = 0; t <= x.size(); ++t) {
        NodeWord ins = x;
        ins.insert(ins.begin() + static_cast<std::ptrdiff_t>(t), i);
        auto& slot = r[ins];
        slot += c.shifted(-2 * e);
        if (slot.is_zero()) r.erase(ins);
        if (t < x.size()) e += cd_.pairing_simple(i, x[t]);
      }
    }
  }
  return memo_.emplace(w, std::move(r)).first->second;
}

LaurentScalar PhiTable::pair(const NodeWord& x, const NodeWord& y) {
  if (x.size() != y.size()) return {};
  const ShuffleVec& p = phi(y);
  auto it = p.find(x);
  return it == p.end() ? LaurentScalar{} : it->second;
}

void PhiTable::clear() {
  std::lock_guard<std::mutex> lock(mu_);
  memo_.clear();
}

}  // namespace bosonic
