#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bosonic {

using Rational = mpq_class;

// Laurent polynomial in v = q^{1/2} with rational coefficients.
// Terms are kept sorted by exponent with no zero coefficients.
class LaurentScalar {
 public:
  using Term = std::pair<int, Rational>;

  LaurentScalar() = default;
  LaurentScalar(long c);  // NOLINT(google-explicit-constructor)
  explicit LaurentScalar(const Rational& c);

  static LaurentScalar monomial(const Rational& c, int vexp);
  static LaurentScalar v_power(int vexp) { return monomial(1, vexp); }
  static LaurentScalar q_power(int qexp) { return monomial(1, 2 * qexp); }
  static LaurentScalar from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;
  int min_exp() const { return terms_.front().first; }
  int max_exp() const { return terms_.back().first; }
  Rational coeff(int vexp) const;
  const Rational& lead_coeff() const { return terms_.back().second; }

  LaurentScalar& operator+=(const LaurentScalar& o);
  LaurentScalar& operator-=(const LaurentScalar& o);
  LaurentScalar& operator*=(const LaurentScalar& o);
  LaurentScalar operator-() const;
  friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { return a += b; }
  friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) { return a -= b; }
  friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b);
  friend bool operator==(const LaurentScalar& a, const LaurentScalar& b) { return a.terms_ == b.terms_; }

  LaurentScalar shifted(int vexp) const;
  LaurentScalar scaled(const Rational& c) const;
  LaurentScalar pow(unsigned n) const;
  LaurentScalar bar() const;

  // Quotient when `d` divides this exactly in Q[v, v^-1].
  std::optional<LaurentScalar> exact_div(const LaurentScalar& d) const;

  // Canonical text: `c*v^k` terms by ascending exponent.
  std::string to_string() const;
  // Same value spelled with q^{k/2} for even k (odd k stay in v).
  std::string to_q_string() const;

 private:
  std::vector<Term> terms_;
  void add_term(int e, const Rational& c);
};

LaurentScalar bar(const LaurentScalar& s);

}  // namespace bosonic
