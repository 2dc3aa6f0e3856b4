#include <random>

#include "doctest.h"
#include "bosonic/qnumbers.hpp"
#include "bosonic/ratfunc.hpp"
#include "support.hpp"

using namespace testing;

namespace {

LaurentScalar random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> e(-6, 6), c(-3, 3), n(0, 4);
  LaurentScalar s;
  for (int k = n(rng); k > 0; --k) s += LaurentScalar::monomial(c(rng), e(rng));
  return s;
}

}  // namespace

TEST_CASE("quantum integers") {
  const CartanDatum a2 = CartanDatum::from_name("A2");
  CHECK(qint(0, 1, a2).is_zero());
  CHECK(qint(1, 1, a2) == LaurentScalar(1));
  CHECK(qint(2, 1, a2) == L("q + q^-1"));
  CHECK(qint(3, 1, a2) == L("q^2 + 1 + q^-2"));
  CHECK(qfact(2, 1, a2) == L("q + q^-1"));
  CHECK(qbinom(2, 1, 1, a2) == L("q + q^-1"));
  CHECK(qbinom(5, 0, 1, a2) == LaurentScalar(1));
  CHECK(qbinom(4, 2, 1, a2) == L("q^4 + q^2 + 2 + q^-2 + q^-4"));

  const CartanDatum b2 = CartanDatum::from_name("B2");
  const Node longer = b2.d(1) == 2 ? 1 : 2;
  CHECK(qint(2, longer, b2) == L("q^2 + q^-2"));
}

TEST_CASE("bar involution") {
  CHECK(bar(L("q")) == L("q^-1"));
  CHECK(bar(L("1 - q^2")) == L("1 - q^-2"));
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    LaurentScalar s = random_laurent(rng), u = random_laurent(rng);
    CHECK(bar(bar(s)) == s);
    CHECK(bar(s * u) == bar(s) * bar(u));
  }
}

TEST_CASE("kappa") {
  const CartanDatum a2 = CartanDatum::from_name("A2");
  const LaurentScalar k = kappa(1, a2);
  CHECK(k == L("v^-1 - v^3"));
  CHECK(kappa_power({0, 0}, a2) == LaurentScalar(1));
  CHECK(kappa_power({1, 1}, a2) == k * k);
}

TEST_CASE("laurent ring axioms") {
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    LaurentScalar a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    if (!b.is_zero()) {
      auto back = (a * b).exact_div(b);
      REQUIRE(back);
      CHECK(*back == a);
    }
  }
}

TEST_CASE("rational functions") {
  const RatFunc r = RatFunc(1) / RatFunc(L("1 - q^2"));
  CHECK_FALSE(r.is_laurent());
  CHECK(r * RatFunc(L("1 - q^2")) == RatFunc(1));
  CHECK(r.inverse() == RatFunc(L("1 - q^2")));
  CHECK(RatFunc(L("1 - q^4")) / RatFunc(L("1 - q^2")) == RatFunc(L("1 + q^2")));
  CHECK(r.bar().bar() == r);
  CHECK(RatFunc(L("q")).pow(-2) == RatFunc(L("q^-2")));
  CHECK_THROWS(r.as_laurent());
}

TEST_CASE("printing") {
  CHECK(L("q^-1 - q").to_q_string() == "q^-1 - q");
  CHECK(L("v^-1 - v^3").to_q_string().find('v') != std::string::npos);
}
