#include "bosonic/verify.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "bosonic/braid.hpp"
#include "bosonic/braidaction.hpp"
#include "bosonic/pbw.hpp"

namespace bosonic {

bool SuiteReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

class Suite {
 public:
  explicit Suite(std::string name) { rep_.suite = std::move(name); }

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    rep_.checks.push_back(Check{name, ok, detail});
  }
  void equal(const std::string& name, const Element& got, const Element& want) {
    check(name, got == want, got == want ? "" : "got " + got.to_string() + ", expected " + want.to_string());
  }
  void equal(const std::string& name, const RatFunc& got, const RatFunc& want) {
    check(name, got == want, got == want ? "" : "got " + got.to_q_string() + ", expected " + want.to_q_string());
  }
  // Runs fn, turning exceptions into a failed check.
  void guarded(const std::string& name, const std::function<void()>& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      check(name, false, std::string("exception: ") + e.what());
    }
  }
  SuiteReport finish(Clock::time_point t0) {
    rep_.seconds = since(t0);
    return std::move(rep_);
  }

 private:
  SuiteReport rep_;
};

std::vector<std::string> types_or(const VerifyOptions& o, std::vector<std::string> dflt) {
  return o.types.empty() ? dflt : o.types;
}

AlgebraOptions algebra_options(const VerifyOptions& o) { return AlgebraOptions{o.max_height, o.cache_dir}; }

RatFunc qpow(int e) { return RatFunc(LaurentScalar::q_power(e)); }
RatFunc qi(const CartanDatum& cd, Node i, int e) { return RatFunc(qi_power(cd, i, e)); }

Element f(Node i, int p) { return Element::letter(i, p); }

// [x, y]_q = xy - q^{-(wt x, wt y)} yx
Element qbracket(Algebra& A, const Element& x, const Element& y) {
  int e = A.cartan().pairing(A.weight(x), A.weight(y));
  return A.mul(x, y) - A.mul(y, x).scaled(qpow(-e));
}

std::string expansion_to_string(const PbwExpansion& e) {
  if (e.empty()) return "{}";
  std::string s;
  for (const auto& [d, c] : e) s += (s.empty() ? "" : ", ") + pbw_index_to_string(d) + ": " + c.to_q_string();
  return "{" + s + "}";
}

PbwIndex unit_index(std::size_t n, std::initializer_list<std::pair<int, int>> entries) {
  PbwIndex d(n, 0);
  for (auto [k, a] : entries) d[static_cast<std::size_t>(k - 1)] = a;
  return d;
}

// ---------------------------------------------------------------- 1: A2 worked example

SuiteReport suite_example_a2(const VerifyOptions& o) {
  Suite s("example-a2");
  auto t0 = Clock::now();
  Algebra A(CartanDatum::from_name("A2"), algebra_options(o));
  RatFunc kinv = RatFunc(kappa(1, A.cartan())).inverse();

  Element f10 = f(1, 0), f20 = f(2, 0), f11 = f(1, 1), f21 = f(2, 1);
  Element b0 = qbracket(A, f10, f20).scaled(kinv);
  Element b1 = qbracket(A, f11, f21).scaled(kinv);
  Element b2 = qbracket(A, b1, f20).scaled(kinv);

  s.guarded("root vectors of 1,2,1,2,1,2", [&] {
    Pbw P(A, PbwDatum{{1, 2, 1, 2, 1, 2}, 0, 1});
    std::vector<Element> want{f10, b0, f20, f11, b1, f21};
    for (int k = 1; k <= 6; ++k) s.equal("F_" + std::to_string(k) + " of 1,2,1,2,1,2", P.F(k), want[k - 1]);
    double t = since(t0);
    s.check("runtime under 1 s", t < 1.0, std::to_string(t) + " s");

    Pbw J(A, PbwDatum{{1, 2, 2, 1}, 0, 1});
    std::vector<Element> wantj{f10, b0, b1, b2};
    for (int k = 1; k <= 4; ++k) s.equal("F_" + std::to_string(k) + " of 1,2,2,1", J.F(k), wantj[k - 1]);

    Pbw J2(A, PbwDatum{{1, 2, 2, 1, 2, 2}, 0, 1});
    std::vector<Element> wantj2{f10, b0, b1, b2, f20, f21};
    for (int k = 1; k <= 6; ++k) s.equal("F_" + std::to_string(k) + " of 1,2,2,1,2,2", J2.F(k), wantj2[k - 1]);
    for (int k = 1; k <= 4; ++k) s.equal("1,2,2,1 and 1,2,2,1,2,2 agree at " + std::to_string(k), J.F(k), J2.F(k));
    for (int k : {1, 2, 6}) s.equal("1,2,2,1,2,2 and 1,2,1,2,1,2 agree at " + std::to_string(k), J2.F(k), P.F(k));
    s.equal("F_3 of 1,2,2,1,2,2 is F_5 of 1,2,1,2,1,2", J2.F(3), P.F(5));
    s.equal("F_5 of 1,2,2,1,2,2 is F_3 of 1,2,1,2,1,2", J2.F(5), P.F(3));
    s.check("1,2,2,1 followed by 2,2 is a word for Delta^2",
            braid_equal(A.cartan(), {1, 2, 2, 1, 2, 2}, {1, 2, 1, 2, 1, 2}));
  });
  return s.finish(t0);
}

// ---------------------------------------------------------------- 2: straightening example

SuiteReport suite_straighten_a2(const VerifyOptions& o) {
  Suite s("straighten-a2");
  auto t0 = Clock::now();
  Algebra A(CartanDatum::from_name("A2"), algebra_options(o));
  s.guarded("straighten on 1,2,2,1", [&] {
    Pbw J(A, PbwDatum{{1, 2, 2, 1}, 0, 1});
    RatFunc one_minus_q2 = qpow(0) - qpow(2);
    RatFunc c = qpow(2) * (qpow(-1) - qpow(1));
    PbwExpansion want23{{PbwIndex(4, 0), one_minus_q2}};
    PbwExpansion want14{{unit_index(4, {{2, 1}, {3, 1}}), c}, {PbwIndex(4, 0), -c}};
    for (int k = 1; k <= 4; ++k)
      for (int t = k + 1; t <= 4; ++t) {
        PbwExpansion got = J.straighten(k, t);
        PbwExpansion want;
        if (k == 2 && t == 3) want = want23;
        if (k == 1 && t == 4) want = want14;
        std::string name = "[F_" + std::to_string(k) + ", F_" + std::to_string(t) + "]_q";
        s.check(name, got == want,
                got == want ? expansion_to_string(got)
                            : "got " + expansion_to_string(got) + ", expected " + expansion_to_string(want));
      }
    // Same table through membership of the bracket.
    Element lhs = qbracket(A, J.F(1), J.F(4));
    auto mem = J.membership(lhs);
    s.check("membership of [F_1, F_4]_q", mem && *mem == want14, mem ? expansion_to_string(*mem) : "not a member");
    double t = since(t0);
    s.check("runtime under 5 s", t < 5.0, std::to_string(t) + " s");
  });
  return s.finish(t0);
}

// ---------------------------------------------------------------- 3: orthogonality

SuiteReport suite_orthogonality(const VerifyOptions& o) {
  Suite s("orthogonality");
  auto t0 = Clock::now();
  int deg = o.max_deg >= 0 ? o.max_deg : 3;
  for (const auto& ty : types_or(o, {"A2", "B2", "G2"})) {
    s.guarded(ty, [&] {
      CartanDatum cd = CartanDatum::from_name(ty);
      Algebra A(cd, algebra_options(o));
      int ell = static_cast<int>(longest_word(cd).size());
      for (Node i = 1; i <= cd.rank(); ++i) {
        IndexWord seq = locally_reduced_sequence(cd, {i}, 2 * ell);
        Pbw P(A, PbwDatum{seq, 0, 1});
        GramReport g = P.gram_matrix(P.indices_up_to(deg));
        s.check(ty + " " + word_to_string(seq) + " degree <= " + std::to_string(deg), g.ok,
                g.ok ? std::to_string(g.indices.size()) + " monomials" : g.failure);
      }
    });
  }
  double t = since(t0);
  s.check("runtime under 5 min", t < 300.0, std::to_string(t) + " s");
  return s.finish(t0);
}

// ---------------------------------------------------------------- 4: braid relations

SuiteReport suite_braid_relations(const VerifyOptions& o) {
  Suite s("braid-relations");
  auto t0 = Clock::now();
  for (const auto& ty : types_or(o, {"A2", "B2", "G2", "A3"})) {
    s.guarded(ty, [&] {
      CartanDatum cd = CartanDatum::from_name(ty);
      Algebra A(cd, algebra_options(o));
      for (Node i = 1; i <= cd.rank(); ++i)
        for (Node j = i + 1; j <= cd.rank(); ++j) {
          int m = cd.m(i, j);
          IndexWord wi, wj;
          for (int r = 0; r < m; ++r) {
            wi.push_back(r % 2 ? j : i);
            wj.push_back(r % 2 ? i : j);
          }
          int bad = 0;
          std::string first;
          for (Node k = 1; k <= cd.rank(); ++k)
            for (int p = -1; p <= 2; ++p) {
              Element x = f(k, p);
              for (int sign : {1, -1}) {
                Element a = T_word(A, wi, x, sign), b = T_word(A, wj, x, sign);
                if (!(a == b)) {
                  if (!bad++)
                    first = "on f[" + std::to_string(k) + "," + std::to_string(p) + "]: " + a.to_string() + " vs " +
                            b.to_string();
                }
              }
            }
          s.check(ty + " " + word_to_string(wi) + " = " + word_to_string(wj), bad == 0, first);
        }
      int bad = 0;
      for (Node i = 1; i <= cd.rank(); ++i)
        for (Node k = 1; k <= cd.rank(); ++k)
          for (int p = -1; p <= 2; ++p)
            if (!(T_inv(A, i, T(A, i, f(k, p))) == f(k, p))) ++bad;
      s.check(ty + " T_i^{-1} T_i = id on generators", bad == 0);
    });
  }
  return s.finish(t0);
}

// ---------------------------------------------------------------- 5: T along the longest word

SuiteReport suite_twlongest(const VerifyOptions& o) {
  Suite s("twlongest");
  auto t0 = Clock::now();
  for (const auto& ty : types_or(o, {"A3", "B2"})) {
    s.guarded(ty, [&] {
      CartanDatum cd = CartanDatum::from_name(ty);
      Algebra A(cd, algebra_options(o));
      IndexWord w0 = longest_word(cd);
      for (Node i = 1; i <= cd.rank(); ++i)
        for (int p = -1; p <= 2; ++p) {
          std::string name = ty + " f[" + std::to_string(i) + "," + std::to_string(p) + "]";
          s.equal(name, T_word(A, w0, f(i, p)), f(dual_index(i, cd), p + 1));
          s.equal(name + " inverse", T_word(A, w0, f(i, p), -1), f(dual_index(i, cd), p - 1));
        }
    });
  }
  return s.finish(t0);
}

// ---------------------------------------------------------------- 6: form invariance and adjointness

class RandomElements {
 public:
  RandomElements(const CartanDatum& cd, std::uint64_t seed) : cd_(cd), rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Word word(int len, int pmin, int pmax) {
    Word w;
    for (int k = 0; k < len; ++k) w.push_back(Letter{uniform(1, cd_.rank()), uniform(pmin, pmax)});
    return w;
  }

  // Same multiset of nodes, levels moved by even amounts: the weight is unchanged.
  Word rearranged(const Word& w, int pmin, int pmax) {
    Word r = w;
    std::shuffle(r.begin(), r.end(), rng_);
    for (auto& l : r) {
      int p = l.p + 2 * uniform(-1, 1);
      if (p >= pmin && p <= pmax) l.p = p;
    }
    return r;
  }

  RatFunc scalar() {
    int c = uniform(-2, 2);
    if (c == 0) c = 1;
    return RatFunc(LaurentScalar::monomial(c, uniform(-2, 2)));
  }

  // One to three words, all of the weight of the first.
  Element element(const Word& seed_word, int pmin, int pmax) {
    Element x = Element::word(seed_word, scalar());
    int extra = uniform(0, 2);
    for (int k = 0; k < extra; ++k) x += Element::word(rearranged(seed_word, pmin, pmax), scalar());
    return x;
  }

 private:
  const CartanDatum& cd_;
  std::mt19937_64 rng_;
};

SuiteReport suite_form_invariance(const VerifyOptions& o) {
  Suite s("form-invariance");
  auto t0 = Clock::now();
  const int samples = o.samples > 0 ? o.samples : 120;
  const int pmin = -1, pmax = 2;
  for (const auto& ty : types_or(o, {"A2", "B2"})) {
    s.guarded(ty, [&] {
      CartanDatum cd = CartanDatum::from_name(ty);
      Algebra A(cd, algebra_options(o));
      RandomElements R(cd, o.seed);
      struct Tally {
        int total = 0, nonzero = 0, bad = 0;
        std::string first;
        void record(bool ok, bool nz, const std::string& what) {
          ++total;
          if (nz) ++nonzero;
          if (!ok && !bad++) first = what;
        }
      };
      std::map<std::string, Tally> tally;
      auto compare = [&](const std::string& key, const RatFunc& a, const RatFunc& b, const std::string& ctx) {
        tally[key].record(a == b, !a.is_zero(), ctx + ": " + a.to_q_string() + " vs " + b.to_q_string());
      };
      auto compare_elem = [&](const std::string& key, const Element& a, const Element& b, const std::string& ctx) {
        tally[key].record(a == b, !a.is_zero(), ctx + ": " + a.to_string() + " vs " + b.to_string());
      };

      for (int n = 0; n < samples; ++n) {
        Word w = R.word(R.uniform(0, 4), pmin, pmax);
        Element x = R.element(w, pmin, pmax);
        Element y = R.element(R.rearranged(w, pmin, pmax), pmin, pmax);
        std::string ctx = "x = " + x.to_string() + ", y = " + y.to_string();
        RatFunc xy = A.form(x, y);
        compare("symmetry", xy, A.form(y, x), ctx);
        compare("D-invariance", A.form(A.shift_D(x, 1), A.shift_D(y, 1)), xy, ctx);
        compare("star-invariance", A.form(A.star(x), A.star(y)), xy, ctx);
        compare_elem("star D = D^-1 star", A.star(A.shift_D(x, 1)), A.shift_D(A.star(x), -1), ctx);
        for (Node i = 1; i <= cd.rank(); ++i)
          compare("T_" + std::to_string(i) + " invariance", A.form(T(A, i, x), T(A, i, y)), xy, ctx);

        Node i = R.uniform(1, cd.rank());
        int k = R.uniform(pmin, pmax);
        std::string ik = " (i=" + std::to_string(i) + ", k=" + std::to_string(k) + ")";
        {
          Word wy = w;
          wy.push_back(Letter{i, k + 1});
          Element yp = R.element(R.rearranged(wy, pmin - 1, pmax + 1), pmin - 1, pmax + 1);
          compare("E' adjoint to left multiplication", A.form(A.adjoint_Eprime(i, k, x), yp),
                  A.form(x, A.mul(f(i, k), yp)), ctx + ik + ", y' = " + yp.to_string());
        }
        {
          Word wy = w;
          wy.push_back(Letter{i, k - 1});
          Element yp = R.element(R.rearranged(wy, pmin - 1, pmax + 1), pmin - 1, pmax + 1);
          compare("E* adjoint to right multiplication", A.form(A.adjoint_Estar(i, k, x), yp),
                  A.form(x, A.mul(yp, f(i, k))), ctx + ik + ", y' = " + yp.to_string());
        }

        // Operator relations, applied to x.
        auto Ep = [&](Node a, int kk, const Element& u) { return A.adjoint_Eprime(a, kk, u); };
        auto Es = [&](Node a, int kk, const Element& u) { return A.adjoint_Estar(a, kk, u); };
        Node j = R.uniform(1, cd.rank());
        std::string ijk = ctx + " (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ", k=" +
                          std::to_string(k) + ")";
        {
          int p = k + R.uniform(2, 3);
          int sgn = (p - k) % 2 == 0 ? 1 : -1;
          compare_elem("E'_{i,m} E'_{j,p} far apart", Ep(i, k, Ep(j, p, x)),
                       Ep(j, p, Ep(i, k, x)).scaled(qi(cd, i, sgn * cd.c(i, j))), ijk);
        }
        {
          Element rhs = Ep(j, k + 1, Ep(i, k, x)).scaled(qi(cd, i, -cd.c(i, j)));
          if (i == j) rhs += x.scaled(qi(cd, i, 0) - qi(cd, i, -2));
          compare_elem("E'_{i,k} E'_{j,k+1} exchange", A.normal_form(Ep(i, k, Ep(j, k + 1, x))), A.normal_form(rhs),
                       ijk);
        }
        {
          int l = R.uniform(pmin, pmax);
          compare_elem("E' and E* commute", Ep(i, k, Es(j, l, x)), Es(j, l, Ep(i, k, x)), ijk);
        }
        if (i != j && cd.c(i, j) != 0) {
          int n = 1 - cd.c(i, j);
          Element sum;
          for (int r = 0; r <= n; ++r) {
            Element u = x;
            for (int t = 0; t < r; ++t) u = Ep(i, k, u);
            u = Ep(j, k, u);
            for (int t = 0; t < n - r; ++t) u = Ep(i, k, u);
            RatFunc c(qbinom(n, r, i, cd));
            sum += u.scaled(r % 2 ? -c : c);
          }
          compare_elem("E' Serre relation", A.normal_form(sum), Element(), ijk);
        }

        // E'_{i,k}(u v w) = E'_{i,k}(u) v w + q_i^{-(-1)^k <h_i, wt u>} (q_i^{-1} - q_i) u e'_i(v) w
        {
          Element u = Element::word(R.word(R.uniform(0, 2), pmin, pmax), R.scalar());
          Element v = Element::word(R.word(R.uniform(1, 3), k, k), R.scalar());
          Element ww = Element::word(R.word(R.uniform(0, 2), k - 3, k - 1), R.scalar());
          Element lhs = Ep(i, k, A.mul(A.mul(u, v), ww));
          int h = cd.coroot_pairing(i, A.weight(u));
          Element rhs = A.mul(A.mul(Ep(i, k, u), v), ww) +
                        A.mul(A.mul(u, A.eprime_slice(i, v)), ww)
                            .scaled(qi(cd, i, k % 2 == 0 ? -h : h) * (qi(cd, i, -1) - qi(cd, i, 1)));
          compare_elem("E' derivation property", lhs, A.normal_form(rhs),
                       "u = " + u.to_string() + ", v = " + v.to_string() + ", w = " + ww.to_string() + ik);
        }
        // E*_{i,k}(u v w) = u v E*_{i,k}(w) + q_i^{-(-1)^k <h_i, wt w>} (q_i^{-1} - q_i) u e*_i(v) w
        {
          Element u = Element::word(R.word(R.uniform(0, 2), k + 1, k + 3), R.scalar());
          Element v = Element::word(R.word(R.uniform(1, 3), k, k), R.scalar());
          Element ww = Element::word(R.word(R.uniform(0, 2), pmin, pmax), R.scalar());
          Element lhs = Es(i, k, A.mul(A.mul(u, v), ww));
          int h = cd.coroot_pairing(i, A.weight(ww));
          Element rhs = A.mul(A.mul(u, v), Es(i, k, ww)) +
                        A.mul(A.mul(u, A.estar_slice(i, v)), ww)
                            .scaled(qi(cd, i, k % 2 == 0 ? -h : h) * (qi(cd, i, -1) - qi(cd, i, 1)));
          compare_elem("E* derivation property", lhs, A.normal_form(rhs),
                       "u = " + u.to_string() + ", v = " + v.to_string() + ", w = " + ww.to_string() + ik);
        }
      }
      for (const auto& [key, t] : tally) {
        std::ostringstream os;
        os << t.total << " cases, " << t.nonzero << " nonzero";
        if (t.bad) os << ", " << t.bad << " failed; first: " << t.first;
        s.check(ty + " " + key, t.bad == 0, os.str());
      }
      const Tally& adj = tally["E' adjoint to left multiplication"];
      s.check(ty + " at least 100 pairs", adj.total >= 100, std::to_string(adj.total));
    });
  }
  return s.finish(t0);
}

// ---------------------------------------------------------------- 7: Garside

// Braid-move classes of all words up to a length, by direct BFS over the relations.
struct BruteClasses {
  std::map<BraidWord, int> cls;
  std::vector<std::vector<BraidWord>> members;
};

BruteClasses brute_classes(const CartanDatum& cd, int len) {
  BruteClasses bc;
  std::vector<BraidWord> all{{}};
  for (std::size_t at = 0; at < all.size(); ++at)
    if (static_cast<int>(all[at].size()) < len)
      for (Node i = 1; i <= cd.rank(); ++i) {
        BraidWord w = all[at];
        w.push_back(i);
        all.push_back(w);
      }
  for (const auto& w : all) {
    if (bc.cls.count(w)) continue;
    int id = static_cast<int>(bc.members.size());
    bc.members.emplace_back();
    std::deque<BraidWord> queue{w};
    bc.cls[w] = id;
    while (!queue.empty()) {
      BraidWord cur = queue.front();
      queue.pop_front();
      bc.members[static_cast<std::size_t>(id)].push_back(cur);
      for (std::size_t t = 0; t < cur.size(); ++t)
        for (Node a = 1; a <= cd.rank(); ++a)
          for (Node b = 1; b <= cd.rank(); ++b) {
            if (a == b) continue;
            std::size_t m = static_cast<std::size_t>(cd.m(a, b));
            if (t + m > cur.size()) continue;
            bool match = true;
            for (std::size_t r = 0; r < m && match; ++r) match = cur[t + r] == (r % 2 ? b : a);
            if (!match) continue;
            BraidWord nb = cur;
            for (std::size_t r = 0; r < m; ++r) nb[t + r] = r % 2 ? a : b;
            if (bc.cls.emplace(nb, id).second) queue.push_back(nb);
          }
    }
  }
  return bc;
}

SuiteReport suite_garside(const VerifyOptions& o) {
  Suite s("garside");
  auto t0 = Clock::now();
  std::vector<std::pair<std::string, int>> plan;
  if (o.types.empty()) {
    plan = {{"A2", o.len > 0 ? o.len : 6}, {"B2", o.len > 0 ? o.len : 5}};
  } else {
    for (const auto& ty : o.types) plan.emplace_back(ty, o.len > 0 ? o.len : 5);
  }
  for (const auto& [ty, len] : plan) {
    s.guarded(ty, [&, ty = ty, len = len] {
      CartanDatum cd = CartanDatum::from_name(ty);
      BruteClasses bc = brute_classes(cd, len);
      std::string tag = ty + " length <= " + std::to_string(len);

      std::map<std::string, int> by_form;
      int split = 0, merged = 0, lib_class = 0;
      std::string first;
      for (std::size_t id = 0; id < bc.members.size(); ++id) {
        const auto& mem = bc.members[id];
        std::string nf = garside_normal_form(cd, mem.front()).to_string(cd);
        for (const auto& w : mem) {
          std::string g = garside_normal_form(cd, w).to_string(cd);
          if (g != nf && !split++) first = word_to_string(w) + " gives " + g + ", class has " + nf;
        }
        auto [it, fresh] = by_form.emplace(nf, static_cast<int>(id));
        if (!fresh && !merged++) first = "classes of " + word_to_string(mem.front()) + " and " +
                                         word_to_string(bc.members[static_cast<std::size_t>(it->second)].front()) +
                                         " share " + nf;
        auto lib = braid_move_class(cd, mem.front());
        std::set<BraidWord> a(lib.begin(), lib.end()), b(mem.begin(), mem.end());
        if (a != b) ++lib_class;
      }
      s.check(tag + " normal form constant on classes", split == 0, split ? first : std::to_string(bc.members.size()) + " classes");
      s.check(tag + " normal form separates classes", merged == 0, merged ? first : "");
      s.check(tag + " braid_move_class matches brute force", lib_class == 0);

      // Prefix sets by brute force: classes of prefixes of any word in the class.
      std::vector<std::set<int>> prefixes(bc.members.size());
      for (std::size_t id = 0; id < bc.members.size(); ++id)
        for (const auto& w : bc.members[id])
          for (std::size_t n = 0; n <= w.size(); ++n) prefixes[id].insert(bc.cls.at(BraidWord(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n))));

      int gcd_bad = 0, le_bad = 0;
      std::string gcd_first;
      for (std::size_t x = 0; x < bc.members.size(); ++x)
        for (std::size_t y = 0; y < bc.members.size(); ++y) {
          const BraidWord& wx = bc.members[x].front();
          const BraidWord& wy = bc.members[y].front();
          bool le = prefixes[y].count(static_cast<int>(x)) > 0;
          if (braid_prefix_le(cd, wx, wy) != le) ++le_bad;
          if (y < x) continue;
          BraidWord g = braid_gcd(cd, wx, wy);
          std::set<int> common;
          std::set_intersection(prefixes[x].begin(), prefixes[x].end(), prefixes[y].begin(), prefixes[y].end(),
                                std::inserter(common, common.begin()));
          auto gi = bc.cls.find(g);
          bool ok = gi != bc.cls.end() && prefixes[static_cast<std::size_t>(gi->second)] == common;
          if (!ok && !gcd_bad++)
            gcd_first = "gcd(" + word_to_string(wx) + "; " + word_to_string(wy) + ") = " + word_to_string(g);
        }
      s.check(tag + " gcd universal property", gcd_bad == 0, gcd_first);
      s.check(tag + " prefix order matches brute force", le_bad == 0);

      int comp_bad = 0;
      std::string comp_first;
      IndexWord w0 = longest_word(cd);
      for (const auto& mem : bc.members) {
        DeltaCompletion dc = complete_to_delta_power(cd, mem.front());
        BraidWord lhs = mem.front();
        lhs.insert(lhs.end(), dc.y.begin(), dc.y.end());
        BraidWord rhs;
        for (int r = 0; r < dc.m; ++r) rhs.insert(rhs.end(), w0.begin(), w0.end());
        if (!braid_equal(cd, lhs, rhs) && !comp_bad++) comp_first = word_to_string(mem.front());
      }
      s.check(tag + " completion to a power of Delta", comp_bad == 0, comp_first);
    });
  }
  double t = since(t0);
  s.check("runtime under 2 min", t < 120.0, std::to_string(t) + " s");
  return s.finish(t0);
}

// ---------------------------------------------------------------- 8: well-definedness

SuiteReport suite_well_definedness(const VerifyOptions& o) {
  Suite s("well-definedness");
  auto t0 = Clock::now();
  const int len = o.len > 0 ? o.len : 4;
  for (const auto& ty : types_or(o, {"A2"})) {
    s.guarded(ty, [&] {
      CartanDatum cd = CartanDatum::from_name(ty);
      Algebra A(cd, algebra_options(o));
      std::vector<BraidWord> words{{}};
      for (std::size_t at = 0; at < words.size(); ++at)
        if (static_cast<int>(words[at].size()) < len)
          for (Node i = 1; i <= cd.rank(); ++i) {
            BraidWord w = words[at];
            w.push_back(i);
            words.push_back(w);
          }
      for (const auto& b : words) {
        if (b.empty()) continue;
        WellDefinedReport r = seq_of(A, b, 0);
        std::string lines;
        for (const auto& l : r.lines) lines += (lines.empty() ? "" : "; ") + l;
        s.check(ty + " " + word_to_string(b), r.ok, lines);
      }
    });
  }
  return s.finish(t0);
}

// ---------------------------------------------------------------- 9: LS support

SuiteReport suite_ls_support(const VerifyOptions& o) {
  Suite s("ls-support");
  auto t0 = Clock::now();
  for (const auto& ty : types_or(o, {"A2"})) {
    s.guarded(ty, [&] {
      CartanDatum cd = CartanDatum::from_name(ty);
      Algebra A(cd, algebra_options(o));
      int ell = static_cast<int>(longest_word(cd).size());
      for (Node i = 1; i <= cd.rank(); ++i) {
        IndexWord seq = locally_reduced_sequence(cd, {i}, 3 * ell);
        Pbw P(A, PbwDatum{seq, 0, 1});
        int far = 0, nonempty = 0, near = 0;
        std::string first;
        for (int k = 1; k <= P.datum().last(); ++k)
          for (int t = k + 1; t <= P.datum().last(); ++t) {
            PbwExpansion e = P.straighten(k, t);
            if (t > k + ell) {
              ++far;
              if (!e.empty() && !nonempty++)
                first = "(" + std::to_string(k) + "," + std::to_string(t) + "): " + expansion_to_string(e);
            } else {
              ++near;
            }
          }
        s.check(ty + " " + word_to_string(seq) + " empty for t > k + " + std::to_string(ell), nonempty == 0,
                nonempty ? first : std::to_string(far) + " far pairs, " + std::to_string(near) + " near pairs straightened");
      }
    });
  }
  return s.finish(t0);
}

// ---------------------------------------------------------------- 10: normal-form oracle

// Block profile of a block-sorted word: (level, slice weight) per maximal block.
using Profile = std::vector<std::pair<int, RootVec>>;

std::vector<std::pair<int, Word>> blocks_of(const Word& w) {
  std::vector<std::pair<int, Word>> out;
  for (const auto& l : w) {
    if (out.empty() || out.back().first != l.p) out.emplace_back(l.p, Word{});
    out.back().second.push_back(l);
  }
  return out;
}

// Blockwise Kashiwara pairing of x against every product of slice basis words,
// computed from the block-sorted form only.
std::map<std::pair<Profile, std::vector<NodeWord>>, RatFunc> fingerprint(Algebra& A, const Element& x) {
  const CartanDatum& cd = A.cartan();
  std::map<std::pair<Profile, std::vector<NodeWord>>, RatFunc> fp;
  const Element sorted = A.block_sort(x);
  for (const auto& [w, c] : sorted.terms()) {
    auto blocks = blocks_of(w);
    Profile prof;
    for (const auto& [lvl, bw] : blocks) prof.emplace_back(lvl, node_word_weight(cd, to_node_word(bw)));
    std::vector<NodeWord> pick(blocks.size());
    auto rec = [&](auto&& self, std::size_t b, const RatFunc& acc) -> void {
      if (acc.is_zero()) return;
      if (b == blocks.size()) {
        RatFunc& slot = fp[{prof, pick}];
        slot = slot + acc;
        return;
      }
      const auto& [lvl, bw] = blocks[b];
      for (const auto& piv : A.slice_basis(prof[b].second).pivots) {
        pick[b] = piv;
        RatFunc v = A.kashiwara_form_slice(Element::word(bw), Element::word(from_node_word(piv, lvl)));
        self(self, b + 1, acc * v);
      }
    };
    rec(rec, 0, c);
  }
  for (auto it = fp.begin(); it != fp.end();) it = it->second.is_zero() ? fp.erase(it) : std::next(it);
  return fp;
}

SuiteReport suite_normal_form_oracle(const VerifyOptions& o) {
  Suite s("normal-form-oracle");
  auto t0 = Clock::now();
  const int samples = o.samples > 0 ? o.samples : 500;
  for (const auto& ty : types_or(o, {"A2"})) {
    s.guarded(ty, [&] {
      CartanDatum cd = CartanDatum::from_name(ty);
      Algebra A(cd, algebra_options(o));
      RandomElements R(cd, o.seed);
      const int pmin = -1, pmax = 2;
      int related_bad = 0;
      std::string related_first;
      std::map<char, int> kinds;
      for (int n = 0; n < samples; ++n) {
        int kind = R.uniform(0, 2);
        Node i = R.uniform(1, cd.rank());
        Node j = R.uniform(1, cd.rank());
        Element lhs, rhs;
        int core = 2;
        if (kind == 0) {
          int m = R.uniform(pmin, pmax), p = m + R.uniform(2, 3);
          lhs = Element::word({Letter{i, m}, Letter{j, p}});
          int sgn = (p - m + 1) % 2 == 0 ? 1 : -1;
          rhs = Element::word({Letter{j, p}, Letter{i, m}}, qi(cd, i, sgn * cd.c(i, j)));
        } else if (kind == 1) {
          int k = R.uniform(pmin, pmax);
          lhs = Element::word({Letter{i, k}, Letter{j, k + 1}});
          rhs = Element::word({Letter{j, k + 1}, Letter{i, k}}, qi(cd, i, cd.c(i, j)));
          if (i == j) rhs += Element(qi(cd, i, 0) - qi(cd, i, 2));
        } else {
          if (i == j || cd.c(i, j) == 0) j = i % cd.rank() + 1;
          if (cd.c(i, j) == 0) {
            --n;
            continue;
          }
          int p = R.uniform(pmin, pmax), top = 1 - cd.c(i, j);
          core = top + 1;
          if (core > 6) {
            --n;
            continue;
          }
          // f_i^{top} f_j = -sum_{r >= 1} (-1)^r [top, r]_i f_i^{top - r} f_j f_i^r
          Word head(static_cast<std::size_t>(top), Letter{i, p});
          head.push_back(Letter{j, p});
          lhs = Element::word(head);
          for (int r = 1; r <= top; ++r) {
            Word w(static_cast<std::size_t>(top - r), Letter{i, p});
            w.push_back(Letter{j, p});
            w.insert(w.end(), static_cast<std::size_t>(r), Letter{i, p});
            RatFunc c(qbinom(top, r, i, cd));
            rhs += Element::word(w, r % 2 ? c : -c);
          }
        }
        ++kinds["bcs"[kind]];
        int room = 6 - core;
        int left = R.uniform(0, room), right = R.uniform(0, room - left);
        Element u = Element::word(R.word(left, pmin, pmax)), v = Element::word(R.word(right, pmin, pmax));
        Element a = u.concat(lhs).concat(v), b = u.concat(rhs).concat(v);
        if (R.uniform(0, 1)) std::swap(a, b);
        Element na = A.normal_form(a), nb = A.normal_form(b);
        if (!(na == nb) && !related_bad++)
          related_first = a.to_string() + " -> " + na.to_string() + " but " + b.to_string() + " -> " + nb.to_string();
      }
      std::ostringstream kd;
      kd << kinds['b'] << " far exchanges, " << kinds['c'] << " adjacent exchanges, " << kinds['s'] << " Serre";
      s.check(ty + " related pairs share a normal form", related_bad == 0,
              related_bad ? std::to_string(related_bad) + " failed; first: " + related_first : kd.str());

      int disagree = 0, equal_nf = 0;
      std::string first;
      for (int n = 0; n < samples; ++n) {
        Word w = R.word(R.uniform(1, 6), pmin, pmax);
        Element x = R.element(w, pmin, pmax);
        Element y = R.element(R.rearranged(w, pmin, pmax), pmin, pmax);
        bool same_nf = A.normal_form(x) == A.normal_form(y);
        bool same_fp = fingerprint(A, x) == fingerprint(A, y);
        if (same_nf) ++equal_nf;
        if (same_nf != same_fp && !disagree++)
          first = "x = " + x.to_string() + ", y = " + y.to_string() + (same_nf ? ": equal normal forms, different fingerprints"
                                                                             : ": fingerprints agree, normal forms differ");
      }
      s.check(ty + " fingerprint separates unrelated pairs", disagree == 0,
              disagree ? std::to_string(disagree) + " failed; first: " + first
                       : std::to_string(samples) + " pairs, " + std::to_string(equal_nf) + " coincide");
    });
  }
  return s.finish(t0);
}

using SuiteFn = SuiteReport (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"example-a2", suite_example_a2},
      {"straighten-a2", suite_straighten_a2},
      {"orthogonality", suite_orthogonality},
      {"braid-relations", suite_braid_relations},
      {"twlongest", suite_twlongest},
      {"form-invariance", suite_form_invariance},
      {"garside", suite_garside},
      {"well-definedness", suite_well_definedness},
      {"ls-support", suite_ls_support},
      {"normal-form-oracle", suite_normal_form_oracle},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& opts) {
  for (const auto& [n, fn] : registry())
    if (n == name) return fn(opts);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace bosonic
