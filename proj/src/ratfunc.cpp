#include "bosonic/ratfunc.hpp"

#include <stdexcept>
#include <vector>

namespace bosonic {

namespace {

using Poly = std::vector<Rational>;  // dense, index = degree

Poly to_poly(const LaurentScalar& s) {
  Poly p(s.max_exp() - s.min_exp() + 1);
  for (const auto& [e, c] : s.terms()) p[e - s.min_exp()] = c;
  return p;
}

LaurentScalar from_poly(const Poly& p) {
  std::vector<LaurentScalar::Term> t;
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k] != 0) t.emplace_back(static_cast<int>(k), p[k]);
  return LaurentScalar::from_terms(std::move(t));
}

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// a mod b, b nonzero and trimmed.
Poly poly_mod(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size()) {
    Rational c = a.back() / b.back();
    std::size_t off = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[off + k] -= c * b[k];
    trim(a);
  }
  return a;
}

}  // namespace

LaurentScalar poly_gcd(const LaurentScalar& a, const LaurentScalar& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero() || b.is_zero()) {
    const LaurentScalar& n = a.is_zero() ? b : a;
    return n.shifted(-n.min_exp()).scaled(1 / n.lead_coeff());
  }
  Poly x = to_poly(a), y = to_poly(b);
  trim(x);
  trim(y);
  while (!y.empty()) {
    Poly r = poly_mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  Rational lead = x.back();
  for (auto& c : x) c /= lead;
  return from_poly(x);
}

RatFunc::RatFunc(const LaurentScalar& n, const LaurentScalar& d) : num_(n), den_(d) {
  if (d.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentScalar(1);
    return;
  }
  if (den_.is_monomial()) {
    const auto& [e, c] = den_.terms()[0];
    num_ = num_.scaled(1 / c).shifted(-e);
    den_ = LaurentScalar(1);
    return;
  }
  int shift = den_.min_exp();
  if (shift != 0) {
    den_ = den_.shifted(-shift);
    num_ = num_.shifted(-shift);
  }
  LaurentScalar g = poly_gcd(num_, den_);
  if (!g.is_one()) {
    num_ = *num_.exact_div(g);
    den_ = *den_.exact_div(g);
  }
  Rational lead = den_.lead_coeff();
  if (lead != 1) {
    num_ = num_.scaled(1 / lead);
    den_ = den_.scaled(1 / lead);
  }
  if (den_.is_monomial()) normalize();
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) normalize();
    else if (num_.is_zero()) den_ = LaurentScalar(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  num_ *= o.num_;
  if (den_.is_one() && o.den_.is_one()) return *this;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("RatFunc: division by zero");
  return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::bar() const { return RatFunc(num_.bar(), den_.bar()); }

RatFunc RatFunc::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  return RatFunc(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)));
}

LaurentScalar RatFunc::as_laurent() const {
  if (!is_laurent()) throw std::domain_error("RatFunc: not a Laurent polynomial: " + to_string());
  return num_;
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::string RatFunc::to_q_string() const {
  if (den_.is_one()) return num_.to_q_string();
  return "(" + num_.to_q_string() + ")/(" + den_.to_q_string() + ")";
}

}  // namespace bosonic
