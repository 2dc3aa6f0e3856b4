#include "bosonic/pbw.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "bosonic/braidaction.hpp"

namespace bosonic {

std::string pbw_index_to_string(const PbwIndex& d) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < d.size(); ++k) os << (k ? "," : "") << d[k];
  os << ")";
  return os.str();
}

Pbw::Pbw(Algebra& A, PbwDatum pd) : A_(A), pd_(std::move(pd)) {
  if (pd_.seq.empty()) throw std::invalid_argument("PBW datum needs a nonempty sequence");
  for (Node i : pd_.seq) A_.cartan().check_node(i);
}

const std::vector<Element>& Pbw::root_vectors() {
  if (!F_.empty()) return F_;
  std::vector<Element> out;
  for (std::size_t k = 0; k < pd_.seq.size(); ++k) {
    IndexWord prefix(pd_.seq.begin(), pd_.seq.begin() + static_cast<std::ptrdiff_t>(k));
    Element f = T_word(A_, prefix, Element::letter(pd_.seq[k], pd_.xi));
    if (!(A_.normal_form(A_.bar(f)) == f))
      throw std::logic_error("root vector F_" + std::to_string(pd_.first + static_cast<int>(k)) +
                             " is not bar-invariant");
    out.push_back(std::move(f));
  }
  F_ = std::move(out);
  for (const auto& f : F_) {
    weights_.push_back(A_.weight(f));
  }
  prepare_factorized();
  return F_;
}

const std::vector<Element>& Pbw::root_vectors_starred() {
  if (!Fstar_.empty()) return Fstar_;
  for (std::size_t k = 0; k < pd_.seq.size(); ++k) {
    IndexWord prefix(pd_.seq.begin(), pd_.seq.begin() + static_cast<std::ptrdiff_t>(k));
    Fstar_.push_back(T_word(A_, prefix, Element::letter(pd_.seq[k], pd_.xi), -1));
  }
  return Fstar_;
}

RootVec Pbw::root_weight(int k) {
  root_vectors();
  return weights_.at(static_cast<std::size_t>(k - pd_.first));
}

Element Pbw::monomial(const PbwIndex& d) {
  if (d.size() != size()) throw std::invalid_argument("PBW index has wrong length");
  auto it = monomial_cache_.find(d);
  if (it != monomial_cache_.end()) return it->second;
  const auto& F = root_vectors();
  Element acc(RatFunc(1));
  for (std::size_t k = size(); k-- > 0;)
    for (int r = 0; r < d[k]; ++r) acc = A_.mul(acc, F[k]);
  monomial_cache_.emplace(d, acc);
  return acc;
}

LaurentScalar Pbw::diagonal_formula(const PbwIndex& d) const {
  const CartanDatum& cd = A_.cartan();
  LaurentScalar r(1);
  for (std::size_t k = 0; k < d.size(); ++k) {
    int t = d[k];
    if (t == 0) continue;
    Node i = pd_.seq[k];
    LaurentScalar base = qi_power(cd, i, -1) - qi_power(cd, i, 1);
    r *= qi_power(cd, i, -t * (t - 1) / 2) * base.pow(static_cast<unsigned>(t)) * qfact(t, i, cd);
  }
  return r;
}

// ---------------------------------------------------------------- factorized pairing

void Pbw::prepare_factorized() {
  slice_homogeneous_ = true;
  level_.clear();
  for (const auto& f : F_) {
    std::optional<int> lvl;
    for (const auto& [w, c] : f.terms())
      for (const auto& l : w) {
        if (lvl && *lvl != l.p) slice_homogeneous_ = false;
        lvl = l.p;
      }
    level_.push_back(lvl.value_or(pd_.xi));
  }
  for (std::size_t k = 1; k < level_.size(); ++k)
    if (level_[k] < level_[k - 1]) slice_homogeneous_ = false;
  if (!slice_homogeneous_) return;

  for (const auto& f : F_) {
    LaurentScalar den(1);
    for (const auto& [w, c] : f.terms()) {
      const LaurentScalar& d = c.den();
      if (d.is_one()) continue;
      LaurentScalar g = poly_gcd(den, d);
      den = *(den * d).exact_div(g);
    }
    std::map<NodeWord, LaurentScalar> num;
    ShuffleVec phi;
    for (const auto& [w, c] : f.terms()) {
      LaurentScalar n = (c * RatFunc(den)).as_laurent();
      NodeWord nw = to_node_word(w);
      add_scaled(phi, A_.phi().phi(nw), n);
      num.emplace(nw, std::move(n));
    }
    den_.push_back(den);
    num_.push_back(std::move(num));
    phi_num_.push_back(std::move(phi));
  }
}

const ShuffleVec& Pbw::level_phi(const PbwIndex& d) {
  auto it = phi_cache_.find(d);
  if (it != phi_cache_.end()) return it->second;
  ShuffleVec out;
  auto low = std::find_if(d.begin(), d.end(), [](int x) { return x > 0; });
  if (low == d.end()) {
    out.emplace(NodeWord{}, LaurentScalar(1));
  } else {
    // The lowest index is the rightmost factor.
    PbwIndex rest = d;
    std::size_t k = static_cast<std::size_t>(low - d.begin());
    rest[k] -= 1;
    ShuffleVec left = level_phi(rest);
    out = shuffle_product(A_.cartan(), left, phi_num_[k]);
  }
  return phi_cache_.emplace(d, std::move(out)).first->second;
}

RatFunc Pbw::level_pair(const PbwIndex& d, const PbwIndex& e) {
  // Words of the numerator product for d, paired against phi of the product for e.
  std::map<NodeWord, LaurentScalar> words{{NodeWord{}, LaurentScalar(1)}};
  for (std::size_t k = size(); k-- > 0;)
    for (int r = 0; r < d[k]; ++r) {
      std::map<NodeWord, LaurentScalar> next;
      for (const auto& [a, ca] : words)
        for (const auto& [b, cb] : num_[k]) {
          auto& slot = next[a + b];
          slot += ca * cb;
        }
      words = std::move(next);
    }
  const ShuffleVec& phi = level_phi(e);
  LaurentScalar total;
  for (const auto& [w, c] : words) {
    if (c.is_zero()) continue;
    auto it = phi.find(w);
    if (it != phi.end()) total += c * it->second;
  }
  return RatFunc(total);
}

RatFunc Pbw::pair_factorized(const PbwIndex& d, const PbwIndex& e) {
  const CartanDatum& cd = A_.cartan();
  std::map<int, std::pair<PbwIndex, PbwIndex>> by_level;
  for (std::size_t k = 0; k < size(); ++k) {
    auto& [dl, el] = by_level[level_[k]];
    if (dl.empty()) {
      dl.assign(size(), 0);
      el.assign(size(), 0);
    }
    dl[k] = d[k];
    el[k] = e[k];
  }
  RatFunc result(1);
  LaurentScalar den(1);
  for (const auto& [lvl, pair] : by_level) {
    const auto& [dl, el] = pair;
    RootVec nd(cd.rank(), 0), ne(cd.rank(), 0);
    for (std::size_t k = 0; k < size(); ++k) {
      nd = nd + dl[k] * abs_vec(weights_[k]);
      ne = ne + el[k] * abs_vec(weights_[k]);
      for (int r = 0; r < dl[k] + el[k]; ++r) den *= den_[k];
    }
    if (nd != ne) return {};
    if (is_zero_vec(nd)) continue;
    RatFunc v = level_pair(dl, el);
    if (v.is_zero()) return {};
    result *= v * RatFunc(A_.block_factor(nd));
  }
  return result / RatFunc(den);
}

RatFunc Pbw::pair_monomials(const PbwIndex& d, const PbwIndex& e) {
  root_vectors();
  RootVec wd(A_.cartan().rank(), 0), we(A_.cartan().rank(), 0);
  for (std::size_t k = 0; k < size(); ++k) {
    wd = wd + d[k] * weights_[k];
    we = we + e[k] * weights_[k];
  }
  if (wd != we) return {};
  if (slice_homogeneous_) return pair_factorized(d, e);
  return A_.form(monomial(d), monomial(e));
}

std::vector<PbwIndex> Pbw::indices_up_to(int max_deg) const {
  std::vector<PbwIndex> out;
  PbwIndex cur(size(), 0);
  auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
    if (pos == size()) {
      out.push_back(cur);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      cur[pos] = a;
      self(self, pos + 1, left - a);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, max_deg);
  return out;
}

GramReport Pbw::gram_matrix(const std::vector<PbwIndex>& indices) {
  GramReport rep;
  rep.indices = indices;
  const std::size_t n = indices.size();
  rep.matrix.assign(n, std::vector<RatFunc>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      RatFunc v = pair_monomials(indices[a], indices[b]);
      rep.matrix[a][b] = rep.matrix[b][a] = v;
      if (!rep.ok) continue;
      if (a == b) {
        LaurentScalar expect = diagonal_formula(indices[a]);
        if (!(v == RatFunc(expect))) {
          rep.ok = false;
          rep.failure = "diagonal entry at " + pbw_index_to_string(indices[a]) + " is " + v.to_q_string() +
                        ", expected " + expect.to_q_string();
        }
      } else if (!v.is_zero()) {
        rep.ok = false;
        rep.failure = "entry at (" + pbw_index_to_string(indices[a]) + ", " + pbw_index_to_string(indices[b]) +
                      ") is " + v.to_q_string() + ", expected 0";
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------- straightening and membership

std::vector<PbwIndex> Pbw::candidates_of_degree(const RootVec& weight, int deg, int lo, int hi) {
  root_vectors();
  std::vector<PbwIndex> out;
  PbwIndex cur(size(), 0);
  auto rec = [&](auto&& self, int pos, const RootVec& remaining, int left) -> void {
    if (pos > hi || left == 0) {
      if (left == 0 && is_zero_vec(remaining)) out.push_back(cur);
      return;
    }
    const std::size_t k = static_cast<std::size_t>(pos);
    RootVec rem = remaining;
    for (int a = 0; a <= left; ++a) {
      cur[k] = a;
      self(self, pos + 1, rem, left - a);
      rem = rem - weights_[k];
    }
    cur[k] = 0;
  };
  rec(rec, lo, weight, deg);
  return out;
}

std::vector<PbwIndex> Pbw::candidates_by_profile(const Element& x, int lo, int hi) {
  root_vectors();
  if (!slice_homogeneous_) throw std::logic_error("profile candidates need single-slice root vectors");
  const CartanDatum& cd = A_.cartan();
  std::map<int, std::vector<std::size_t>> at_level;
  for (int k = lo; k <= hi; ++k) at_level[level_[static_cast<std::size_t>(k)]].push_back(static_cast<std::size_t>(k));

  std::set<std::map<int, RootVec>> profiles;
  for (const auto& [w, c] : x.terms()) {
    std::map<int, RootVec> prof;
    for (const auto& l : w) {
      auto& v = prof.try_emplace(l.p, RootVec(cd.rank(), 0)).first->second;
      v[l.i - 1] += 1;
    }
    profiles.insert(prof);
  }

  std::set<PbwIndex> out;
  for (const auto& prof : profiles) {
    if (std::any_of(prof.begin(), prof.end(), [&](const auto& e) { return !at_level.count(e.first); })) continue;
    // Each level independently: exponents at that level whose |wt| adds up to the block weight.
    std::vector<std::vector<std::vector<std::pair<std::size_t, int>>>> per_level;
    for (const auto& [lvl, positions] : at_level) {
      auto it = prof.find(lvl);
      RootVec target = it == prof.end() ? RootVec(cd.rank(), 0) : it->second;
      std::vector<std::vector<std::pair<std::size_t, int>>> sols;
      std::vector<std::pair<std::size_t, int>> cur;
      auto rec = [&](auto&& self, std::size_t idx, const RootVec& rem) -> void {
        if (idx == positions.size()) {
          if (is_zero_vec(rem)) sols.push_back(cur);
          return;
        }
        const RootVec step = abs_vec(weights_[positions[idx]]);
        RootVec r = rem;
        for (int a = 0; is_nonneg(r); ++a) {
          if (a) cur.emplace_back(positions[idx], a);
          self(self, idx + 1, r);
          if (a) cur.pop_back();
          r = r - step;
        }
      };
      rec(rec, 0, target);
      if (sols.empty()) {
        per_level.clear();
        break;
      }
      per_level.push_back(std::move(sols));
    }
    if (per_level.empty() && !at_level.empty()) continue;
    PbwIndex d(size(), 0);
    auto combine = [&](auto&& self, std::size_t lvl) -> void {
      if (lvl == per_level.size()) {
        out.insert(d);
        return;
      }
      for (const auto& sol : per_level[lvl]) {
        for (auto [k, a] : sol) d[k] = a;
        self(self, lvl + 1);
        for (auto [k, a] : sol) d[k] = 0;
      }
    };
    if (at_level.empty()) {
      if (prof.empty()) out.insert(d);
    } else {
      combine(combine, 0);
    }
  }
  return {out.begin(), out.end()};
}

namespace {

int max_word_length(const Element& x) {
  int m = 0;
  for (const auto& [w, c] : x.terms()) m = std::max(m, static_cast<int>(w.size()));
  return m;
}

}  // namespace

Element Pbw::expand(const PbwExpansion& coords) {
  Element r;
  for (const auto& [d, c] : coords) r += monomial(d).scaled(c);
  return r;
}

std::optional<PbwExpansion> Pbw::project(const Element& x, int lo, int hi, int max_deg) {
  root_vectors();
  Element nx = A_.normal_form(x);
  PbwExpansion out;
  auto add = [&](const PbwIndex& c) {
    if (out.count(c)) return;
    RatFunc num = A_.form(nx, monomial(c));
    if (!num.is_zero()) out.emplace(c, num / pair_monomials(c, c));
  };
  if (max_deg < 0 && slice_homogeneous_) {
    for (const auto& c : candidates_by_profile(nx, lo, hi)) add(c);
    if (!(expand(out) == nx)) return std::nullopt;
    return out;
  }
  // Products of root vectors can shorten words, so without single-slice profiles
  // the search deepens by total degree until the projection reconstructs x.
  const bool deepen = max_deg < 0;
  const int cap = deepen ? max_word_length(nx) + std::max(0, hi - lo + 1) : max_deg;
  const auto components = A_.homogeneous_components(nx);
  for (int deg = 0; deg <= cap; ++deg) {
    for (const auto& [wt, comp] : components)
      for (const auto& c : candidates_of_degree(wt, deg, lo, hi)) add(c);
    if (deepen && expand(out) == nx) return out;
  }
  if (!(expand(out) == nx)) return std::nullopt;
  return out;
}

PbwExpansion Pbw::straighten(int k, int t) {
  if (!(pd_.first <= k && k < t && t <= pd_.last()))
    throw std::invalid_argument("straighten: need u <= k < t <= v");
  const Element& Fk = F(k);
  const Element& Ft = F(t);
  int e = A_.cartan().pairing(root_weight(k), root_weight(t));
  Element lhs = A_.normal_form(A_.mul(Fk, Ft) - A_.mul(Ft, Fk).scaled(RatFunc(LaurentScalar::v_power(-2 * e))));
  if (lhs.is_zero()) return {};
  auto out = project(lhs, k - pd_.first + 1, t - pd_.first - 1, -1);
  if (!out)
    throw std::logic_error("straighten(" + std::to_string(k) + "," + std::to_string(t) + "): " + lhs.to_string() +
                           " is not in the span of the intermediate monomials");
  return *out;
}

std::optional<PbwExpansion> Pbw::membership(const Element& x, int max_deg) {
  return project(x, 0, static_cast<int>(size()) - 1, max_deg);
}

// ---------------------------------------------------------------- well-definedness

WellDefinedReport seq_of(Algebra& A, const BraidWord& b, int xi) {
  WellDefinedReport rep;
  Pbw base(A, PbwDatum{b, xi, 1});
  for (const auto& j : braid_move_neighbors(A.cartan(), b)) {
    Pbw other(A, PbwDatum{j, xi, 1});
    bool same = true;
    auto check = [&](Pbw& from, Pbw& into, const std::string& label) {
      for (std::size_t k = 0; k < from.size(); ++k) {
        const Element& f = from.root_vectors()[k];
        bool in = into.membership(f).has_value();
        if (!in) {
          same = false;
          rep.ok = false;
          rep.lines.push_back("F_" + std::to_string(k + 1) + " of " + label + " is not in the span of " +
                              word_to_string(into.datum().seq));
        }
      }
    };
    check(base, other, word_to_string(b));
    check(other, base, word_to_string(j));
    rep.lines.push_back(word_to_string(b) + " ~ " + word_to_string(j) + (same ? ": same span" : ": MISMATCH"));
  }
  if (rep.lines.empty()) rep.lines.push_back(word_to_string(b) + ": no braid-move neighbors");
  return rep;
}

}  // namespace bosonic
