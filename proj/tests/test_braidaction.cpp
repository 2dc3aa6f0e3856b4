#include "doctest.h"
#include "bosonic/braidaction.hpp"
#include "support.hpp"

using namespace testing;

namespace {

Element qbracket(Algebra& A, const Element& x, const Element& y) {
  const int e = A.cartan().pairing(A.weight(x), A.weight(y));
  return A.mul(x, y) - A.mul(y, x).scaled(LaurentScalar::q_power(-e));
}

}  // namespace

TEST_CASE("generators") {
  Algebra A(CartanDatum::from_name("A2"));
  const RatFunc kinv = RatFunc(kappa(1, A.cartan())).inverse();
  CHECK(T(A, 1, f(1, 0)) == f(1, 1));
  CHECK(T_inv(A, 1, f(1, 0)) == f(1, -1));
  CHECK(T(A, 1, f(2, 0)) == (A.mul(f(1, 0), f(2, 0)) - A.mul(f(2, 0), f(1, 0)).scaled(L("q"))).scaled(kinv));
  CHECK(T(A, 1, f(2, 0)) == qbracket(A, f(1, 0), f(2, 0)).scaled(kinv));
  CHECK(T(A, 1, T(A, 2, f(1, 0))) == f(2, 0));
  CHECK(T_letter(A, 2, Letter{1, 3}) == T(A, 2, f(1, 3)));
  CHECK(T_inv_letter(A, 2, Letter{1, 3}) == T_inv(A, 2, f(1, 3)));
}

TEST_CASE("longest word") {
  for (const char* n : {"A2", "B2", "A3"}) {
    Algebra A(CartanDatum::from_name(n));
    const CartanDatum& cd = A.cartan();
    const IndexWord w0 = longest_word(cd);
    for (Node i = 1; i <= cd.rank(); ++i)
      for (int p : {0, 1}) {
        CHECK(T_word(A, w0, f(i, p)) == f(dual_index(i, cd), p + 1));
        CHECK(T_word(A, w0, f(i, p), -1) == f(dual_index(i, cd), p - 1));
      }
  }
  Algebra A(CartanDatum::from_name("A2"));
  const Element x = E("f[1,0] f[2,1] - q f[2,2]");
  CHECK(T_word(A, {}, x) == A.normal_form(x));
}

TEST_CASE("automorphism properties") {
  Algebra A(CartanDatum::from_name("B2"));
  const std::vector<Element> xs = {E("f[1,0]"), E("f[2,1] f[1,0]"), E("f[1,1] f[2,0] f[2,0]"),
                                   E("q f[2,0] f[1,-1] + f[1,0] f[2,-1]")};
  for (const auto& x0 : xs) {
    const Element x = A.normal_form(x0);
    for (Node i : {1, 2}) {
      const Element tx = T(A, i, x);
      CHECK(T_inv(A, i, tx) == x);
      CHECK(T(A, i, T_inv(A, i, x)) == x);
      CHECK(T_inv(A, i, x) == A.normal_form(A.star(T(A, i, A.star(x)))));
      CHECK(T(A, i, A.shift_D(x, 1)) == A.shift_D(tx, 1));
      CHECK(T(A, i, A.bar(x)) == A.normal_form(A.bar(tx)));
      for (const auto& y : xs) CHECK(T(A, i, A.mul(x, y)) == A.mul(tx, T(A, i, y)));
    }
    CHECK(T_word(A, {1, 2, 1, 2}, x) == T_word(A, {2, 1, 2, 1}, x));
  }
  const Element x = E("f[2,1] f[1,0]"), y = E("f[1,0] f[2,1]");
  CHECK(A.form(T(A, 1, x), T(A, 1, y)) == A.form(x, y));
}
