#pragma once

#include <string>

#include "bosonic/laurent.hpp"

namespace bosonic {

// Element of Q(v) kept as num/den in lowest terms.
// Canonical shape: den is a monic polynomial with nonzero constant term;
// den == 1 whenever the value is a Laurent polynomial.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const LaurentScalar& n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const LaurentScalar& n, const LaurentScalar& d);

  const LaurentScalar& num() const { return num_; }
  const LaurentScalar& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  RatFunc operator-() const;
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFunc inverse() const;
  RatFunc bar() const;
  RatFunc pow(int n) const;
  LaurentScalar as_laurent() const;  // throws unless is_laurent()

  std::string to_string() const;    // v spelling
  std::string to_q_string() const;  // q spelling where possible

 private:
  LaurentScalar num_;
  LaurentScalar den_{1};
  void normalize();
};

// Monic gcd of two Laurent polynomials viewed in Q[v] after removing v-powers.
LaurentScalar poly_gcd(const LaurentScalar& a, const LaurentScalar& b);

}  // namespace bosonic
