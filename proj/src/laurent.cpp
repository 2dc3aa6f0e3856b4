#include "bosonic/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace bosonic {

LaurentScalar::LaurentScalar(long c) {
  if (c != 0) terms_.emplace_back(0, Rational(c));
}

LaurentScalar::LaurentScalar(const Rational& c) {
  if (c != 0) terms_.emplace_back(0, c);
}

LaurentScalar LaurentScalar::monomial(const Rational& c, int vexp) {
  LaurentScalar s;
  if (c != 0) s.terms_.emplace_back(vexp, c);
  return s;
}

LaurentScalar LaurentScalar::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentScalar s;
  for (auto& [e, c] : terms) s.add_term(e, c);
  return s;
}

void LaurentScalar::add_term(int e, const Rational& c) {
  if (c == 0) return;
  if (!terms_.empty() && terms_.back().first == e) {
    terms_.back().second += c;
    if (terms_.back().second == 0) terms_.pop_back();
    return;
  }
  terms_.emplace_back(e, c);
}

bool LaurentScalar::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

bool LaurentScalar::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

Rational LaurentScalar::coeff(int vexp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), vexp,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == vexp) return it->second;
  return 0;
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = o.terms_;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (c != 0) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& o) { return *this += -o; }

LaurentScalar LaurentScalar::operator-() const {
  LaurentScalar r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_monomial()) return a.scaled(b.terms_[0].second).shifted(b.terms_[0].first);
  if (a.is_monomial()) return b.scaled(a.terms_[0].second).shifted(a.terms_[0].first);
  int lo = a.min_exp() + b.min_exp();
  std::vector<Rational> dense(a.max_exp() + b.max_exp() - lo + 1);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) dense[ea + eb - lo] += ca * cb;
  LaurentScalar r;
  for (std::size_t k = 0; k < dense.size(); ++k)
    if (dense[k] != 0) r.terms_.emplace_back(lo + static_cast<int>(k), std::move(dense[k]));
  return r;
}

LaurentScalar& LaurentScalar::operator*=(const LaurentScalar& o) { return *this = *this * o; }

LaurentScalar LaurentScalar::shifted(int vexp) const {
  LaurentScalar r = *this;
  for (auto& t : r.terms_) t.first += vexp;
  return r;
}

LaurentScalar LaurentScalar::scaled(const Rational& c) const {
  if (c == 0) return {};
  LaurentScalar r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

LaurentScalar LaurentScalar::pow(unsigned n) const {
  LaurentScalar r(1), base = *this;
  while (n) {
    if (n & 1u) r *= base;
    n >>= 1u;
    if (n) base *= base;
  }
  return r;
}

LaurentScalar LaurentScalar::bar() const {
  LaurentScalar r;
  r.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.emplace_back(-it->first, it->second);
  return r;
}

LaurentScalar bar(const LaurentScalar& s) { return s.bar(); }

std::optional<LaurentScalar> LaurentScalar::exact_div(const LaurentScalar& d) const {
  if (d.is_zero()) return std::nullopt;
  if (is_zero()) return LaurentScalar{};
  if (d.is_monomial()) return scaled(1 / d.terms_[0].second).shifted(-d.terms_[0].first);
  // Long division from the top degree down.
  std::map<int, Rational> rem;
  for (const auto& [e, c] : terms_) rem[e] = c;
  std::vector<Term> quot;
  const int dtop = d.max_exp(), dlow = d.min_exp();
  const Rational& dlead = d.lead_coeff();
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    int shift = top->first - dtop;
    if (shift < min_exp() - dlow) return std::nullopt;
    Rational c = top->second / dlead;
    quot.emplace_back(shift, c);
    for (const auto& [e, dc] : d.terms_) {
      auto& slot = rem[e + shift];
      slot -= c * dc;
      if (slot == 0) rem.erase(e + shift);
    }
  }
  return from_terms(std::move(quot));
}

namespace {

void append_term(std::ostringstream& os, bool first, const Rational& c, int e, bool q_style) {
  bool neg = c < 0;
  Rational mag = neg ? Rational(-c) : c;
  if (first) {
    if (neg) os << "-";
  } else {
    os << (neg ? " - " : " + ");
  }
  std::string var;
  int shown = e;
  if (q_style && e % 2 == 0) {
    var = "q";
    shown = e / 2;
  } else {
    var = "v";
  }
  if (e == 0) {
    os << mag.get_str();
    return;
  }
  if (mag != 1) os << mag.get_str() << "*";
  os << var;
  if (shown != 1) os << "^" << shown;
}

}  // namespace

std::string LaurentScalar::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    append_term(os, first, c, e, false);
    first = false;
  }
  return os.str();
}

std::string LaurentScalar::to_q_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    append_term(os, first, c, e, true);
    first = false;
  }
  return os.str();
}

}  // namespace bosonic
