#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "bosonic/cache.hpp"
#include "support.hpp"

using namespace testing;

namespace {

Element prod(Algebra& A, std::initializer_list<Element> xs) {
  Element r(RatFunc(1));
  for (const auto& x : xs) r = A.mul(r, x);
  return r;
}

LaurentScalar qi(const CartanDatum& cd, Node i, int n) { return qi_power(cd, i, n); }

// Exponent sign matches wt(f_{i,p}) = (-1)^p alpha_i.
int h_sign(int k) { return k % 2 == 0 ? -1 : 1; }

}  // namespace

TEST_CASE("defining relations") {
  Algebra A(CartanDatum::from_name("A2"));
  CHECK(A.mul(f(1, 0), f(1, 1)) == E("q^2 f[1,1] f[1,0] + 1 - q^2"));
  CHECK(A.mul(f(1, 0), f(2, 2)) == E("q f[2,2] f[1,0]"));
  CHECK(A.mul(f(1, 0), f(2, 1)) == E("q^-1 f[2,1] f[1,0]"));
  CHECK(A.mul(f(1, 1), f(1, 2)) == E("q^2 f[1,2] f[1,1] + 1 - q^2"));
  const Element x = E("f[2,1] f[1,0] - 3 f[1,0]");
  CHECK(A.mul(x, Element(RatFunc(1))) == A.normal_form(x));
  CHECK(A.normal_form(E("f[1,0] f[1,0] f[2,0] - (q + q^-1) f[1,0] f[2,0] f[1,0] + f[2,0] f[1,0] f[1,0]")).is_zero());
  const Element n = A.normal_form(E("f[1,0] f[2,0] f[1,0]"));
  CHECK(A.normal_form(n) == n);

  Algebra B(CartanDatum::from_name("B2"));
  const Node s = B.cartan().d(1) == 1 ? 1 : 2, l = 3 - s;
  const Element serre = E("f[" + std::to_string(s) + ",0]");
  const Element t = E("f[" + std::to_string(l) + ",0]");
  const LaurentScalar b1 = qbinom(3, 1, s, B.cartan());
  Element rel = B.pow(serre, 3).concat(t) - serre.concat(serre).concat(t).concat(serre).scaled(b1) +
                serre.concat(t).concat(serre).concat(serre).scaled(b1) - t.concat(B.pow(serre, 3));
  CHECK(B.normal_form(rel).is_zero());
}

TEST_CASE("fip fip+1 identities") {
  Algebra A(CartanDatum::from_name("B2"));
  const CartanDatum& cd = A.cartan();
  for (Node i : {1, 2})
    for (int p : {0, 1})
      for (int m = 1; m <= 3; ++m)
        for (int n = 0; n <= 2; ++n) {
          const Element a = f(i, p), b = A.pow(f(i, p + 1), m), c = A.pow(f(i, p), n);
          const LaurentScalar q2m = qi(cd, i, 2 * m);
          Element rhs = prod(A, {b, A.pow(f(i, p), n + 1)}).scaled(q2m) +
                        prod(A, {A.pow(f(i, p + 1), m - 1), c}).scaled(LaurentScalar(1) - q2m);
          CHECK(prod(A, {a, b, c}) == rhs);
          const Element d = A.pow(f(i, p - 1), m);
          rhs = prod(A, {A.pow(f(i, p), n + 1), d}).scaled(q2m) +
                prod(A, {c, A.pow(f(i, p - 1), m - 1)}).scaled(LaurentScalar(1) - q2m);
          CHECK(prod(A, {c, d, a}) == rhs);
        }
}

TEST_CASE("weights") {
  Algebra A(CartanDatum::from_name("A2"));
  CHECK(A.weight(f(1, 0)) == RootVec{1, 0});
  CHECK(A.weight(f(1, 1)) == RootVec{-1, 0});
  CHECK(A.weight(E("f[1,0] f[2,1]")) == RootVec{1, -1});
  CHECK_THROWS_AS(A.weight(E("f[1,0] + f[2,0]")), NonHomogeneousError);
  auto parts = A.homogeneous_components(E("f[1,0] + f[2,0] + q f[1,2]"));
  CHECK(parts.size() == 2);
  CHECK(parts.at({1, 0}) == E("f[1,0] + q f[1,2]"));
}

TEST_CASE("involutions and shift") {
  Algebra A(CartanDatum::from_name("A2"));
  CHECK(A.star(E("f[1,0] f[2,1]")) == E("f[2,-1] f[1,0]"));
  CHECK(A.shift_D(f(1, 0), 1) == f(1, 1));
  CHECK(A.shift_D(E("f[2,3] f[1,-1]"), -2) == E("f[2,1] f[1,-3]"));
  CHECK(A.bar(E("q f[1,0]")) == E("q^-1 f[1,0]"));
  CHECK(A.sigma(E("f[1,0] f[2,1]"), {2, 1}) == E("f[2,0] f[1,1]"));
  const Element x = E("f[1,0] f[2,1] f[1,1]"), y = E("(1 - q) f[2,0] f[1,0]");
  CHECK(A.star(A.mul(x, y)) == A.mul(A.star(y), A.star(x)));
  CHECK(A.normal_form(A.bar(A.mul(x, y))) == A.mul(A.bar(y), A.bar(x)));
  CHECK(A.bar(A.bar(x)) == x);
  CHECK(A.shift_D(A.mul(x, y), 3) == A.mul(A.shift_D(x, 3), A.shift_D(y, 3)));
}

TEST_CASE("slice derivations") {
  Algebra A(CartanDatum::from_name("A2"));
  const CartanDatum& cd = A.cartan();
  CHECK(A.eprime_slice(1, f(1, 0)) == Element(RatFunc(1)));
  CHECK(A.eprime_slice(1, E("f[1,0] f[2,0]")) == f(2, 0));
  CHECK(A.eprime_slice(2, E("f[1,0] f[2,0]")) == E("q f[1,0]"));
  CHECK(A.estar_slice(2, E("f[1,0] f[2,0]")) == f(1, 0));
  for (int m = 1; m <= 4; ++m) {
    const Element e = A.eprime_slice(1, A.pow(f(1, 0), m));
    CHECK(e == A.pow(f(1, 0), m - 1).scaled(qi(cd, 1, 1 - m) * qint(m, 1, cd)));
  }
  CHECK(A.kashiwara_form_slice(f(1, 0), f(1, 0)) == RatFunc(1));
  CHECK(A.kashiwara_form_slice(E("f[1,0] f[2,0]"), E("f[2,0] f[1,0]")) == R("q"));
  CHECK(A.lusztig_form_slice(f(1, 0), f(1, 0)) == R("1 / (1 - q^2)"));
  CHECK(A.kashiwara_form_slice(f(1, 0), f(2, 0)).is_zero());
}

TEST_CASE("invariant form") {
  for (const char* n : {"A2", "B2"}) {
    Algebra A(CartanDatum::from_name(n));
    const CartanDatum& cd = A.cartan();
    CHECK(A.form(Element(RatFunc(1)), Element(RatFunc(1))) == RatFunc(1));
    for (Node i = 1; i <= 2; ++i)
      for (int p : {-1, 0, 1, 2}) {
        const LaurentScalar c = qi(cd, i, -1) - qi(cd, i, 1);
        CHECK(A.form(f(i, p), f(i, p)) == RatFunc(c));
        const Element sq = A.pow(f(i, p), 2);
        CHECK(A.form(sq, sq) == RatFunc(qi(cd, i, -1) * c * c * qfact(2, i, cd)));
      }
    CHECK(A.form(f(1, 0), f(2, 0)).is_zero());
    CHECK(A.form(f(1, 0), f(1, 1)).is_zero());
    const Element x = E("f[1,1] f[2,0] + q f[1,0] f[2,1]"), y = E("f[2,1] f[1,0] - f[1,0] f[2,1]");
    CHECK(A.form(x, y) == A.form(y, x));
    CHECK(A.form(A.star(x), A.star(y)) == A.form(x, y));
    CHECK(A.form(A.shift_D(x, 1), A.shift_D(y, 1)) == A.form(x, y));
  }
}

TEST_CASE("adjoint operators") {
  Algebra A(CartanDatum::from_name("A2"));
  const CartanDatum& cd = A.cartan();
  for (int k : {0, 1}) {
    CHECK(A.adjoint_Eprime(1, k, Element(RatFunc(1))) == f(1, k + 1).scaled(qi(cd, 1, 1)));
    CHECK(A.adjoint_Estar(1, k, Element(RatFunc(1))) == f(1, k - 1).scaled(qi(cd, 1, 1)));
    CHECK(A.adjoint_Eprime(1, k, f(1, k)) == A.mul(f(1, k), f(1, k + 1)).scaled(qi(cd, 1, -1)));
  }
  const std::vector<Element> xs = {E("f[1,1] f[2,0]"), E("f[2,1] f[1,0] f[1,-1]"), E("f[1,0] f[2,0]"),
                                   E("f[2,2] f[1,1]")};
  for (const auto& x : xs)
    for (const auto& y : xs)
      for (Node i : {1, 2})
        for (int k : {-1, 0, 1}) {
          CHECK(A.form(A.adjoint_Eprime(i, k, x), y) == A.form(x, A.mul(f(i, k), y)));
          CHECK(A.form(A.adjoint_Estar(i, k, x), y) == A.form(x, A.mul(y, f(i, k))));
          CHECK(A.adjoint_Eprime(i, k, A.adjoint_Estar(1, k + 2, x)) ==
                A.adjoint_Estar(1, k + 2, A.adjoint_Eprime(i, k, x)));
        }
}

TEST_CASE("multiplying a slice by the next generator") {
  Algebra A(CartanDatum::from_name("B2"));
  const CartanDatum& cd = A.cartan();
  const std::vector<NodeWord> words = {{1}, {2}, {1, 2}, {2, 1, 1}, {1, 2, 2}, {2, 1, 2, 1}};
  for (int k : {0, 1, 2})
    for (const auto& nw : words)
      for (Node i : {1, 2}) {
        const Element x = Element::word(from_node_word(nw, k));
        RootVec beta = A.weight(x);
        if (k % 2 != 0)
          for (int& b : beta) b = -b;
        const int h = cd.coroot_pairing(i, beta);
        const Element rhs =
            (A.mul(f(i, k + 1), x) + A.eprime_slice(i, x).scaled(qi(cd, i, -1) * (qi(cd, i, -1) - qi(cd, i, 1))))
                .scaled(qi(cd, i, h));
        CHECK(A.mul(x, f(i, k + 1)) == rhs);
      }
}

TEST_CASE("four-part product identities") {
  Algebra A(CartanDatum::from_name("A2"));
  const CartanDatum& cd = A.cartan();
  for (int k : {0, 1})
    for (Node i : {1, 2}) {
      const Element x = Element::word(from_node_word({2}, k + 2));
      const Element y = Element::word(from_node_word(NodeWord{char(i), char(3 - i)}, k + 1));
      const Element z = Element::word(from_node_word(NodeWord{char(i), char(3 - i), char(i)}, k));
      const Element w = Element::word(from_node_word({1}, k - 1));
      const Element xyzw = prod(A, {x, y, z, w});
      const int s = h_sign(k);
      const int hxy = s * cd.coroot_pairing(i, A.weight(prod(A, {x, y})));
      const int hzw = -s * cd.coroot_pairing(i, A.weight(prod(A, {z, w})));
      const LaurentScalar c = qi(cd, i, -1) - qi(cd, i, 1);

      const Element t1 = prod(A, {x, A.estar_slice(i, y), z, w}).scaled(c);
      const Element t2 = prod(A, {x, y, A.mul(f(i, k), z), w}).scaled(qi(cd, i, 1));
      const Element t3 = prod(A, {x, y, A.eprime_slice(i, z), w}).scaled(c);
      const Element t4 = prod(A, {x, A.mul(y, f(i, k + 1)), z, w}).scaled(qi(cd, i, 1));

      CHECK(A.mul(f(i, k), xyzw) == (t1 + t2).scaled(qi(cd, i, hxy - 1)));
      CHECK(A.adjoint_Eprime(i, k, xyzw) == (t3 + t4).scaled(qi(cd, i, hxy)));
      CHECK(A.mul(xyzw, f(i, k + 1)) == (t3 + t4).scaled(qi(cd, i, hzw - 1)));
      CHECK(A.adjoint_Estar(i, k + 1, xyzw) == (t1 + t2).scaled(qi(cd, i, hzw)));
    }
}

TEST_CASE("text round trip") {
  Algebra A(CartanDatum::from_name("A2"));
  const Element x = A.normal_form(E("(q - 2/3 q^-1) f[1,1] f[2,0] f[1,0] + v^3 f[2,-1] - 1/(1 - q^2)"));
  CHECK(parse_element(x.to_string()) == x);
  CHECK(A.mul(f(1, 0), f(1, 1)).to_string() == "q^2 f[1,1] f[1,0] + (1 - q^2)");
  CHECK(Element().to_string() == "0");
  CHECK_THROWS_AS(parse_element("f[1,"), ParseError);
  CHECK_THROWS_AS(parse_element("f[1,0] / f[2,0]"), ParseError);
  CHECK_THROWS_AS(parse_element("f[3,0]", A.cartan()), std::invalid_argument);
  CHECK(parse_scalar("(1 - q^2) / (1 - q^2)") == RatFunc(1));
}

TEST_CASE("height guardrail") {
  Algebra A(CartanDatum::from_name("A2"), AlgebraOptions{2, ""});
  CHECK_NOTHROW(A.slice_basis({1, 1}));
  CHECK_THROWS_AS(A.slice_basis({2, 1}), GuardrailError);
}

TEST_CASE("slice cache") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "bosonic_cache_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const CartanDatum cd = CartanDatum::from_name("B2");
  const RootVec wt{1, 2};
  std::vector<NodeWord> pivots;
  RatFunc value;
  const Element x = E("f[1,0] f[2,0] f[2,0]"), y = E("f[2,0] f[2,0] f[1,0]");
  {
    Algebra A(cd, AlgebraOptions{10, dir.string()});
    pivots = A.slice_basis(wt).pivots;
    value = A.form(x, y);
  }
  const std::string path = slice_cache_path(dir.string(), cd, wt);
  REQUIRE(fs::exists(path));
  Algebra fresh(cd);
  const std::size_t nwords = fresh.slice_basis(wt).words.size();
  auto loaded = load_slice_pivots(dir.string(), cd, wt, nwords);
  REQUIRE(loaded);
  CHECK(*loaded == pivots);
  CHECK_FALSE(load_slice_pivots(dir.string(), cd, wt, nwords + 1));
  {
    Algebra A(cd, AlgebraOptions{10, dir.string()});
    CHECK(A.form(x, y) == value);
  }
  std::ofstream(path) << "{ not json";
  CHECK_FALSE(load_slice_pivots(dir.string(), cd, wt, nwords));
  {
    Algebra A(cd, AlgebraOptions{10, dir.string()});
    CHECK(A.form(x, y) == value);
  }
  fs::remove_all(dir);
}
