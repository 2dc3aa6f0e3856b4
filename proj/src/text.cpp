#include "bosonic/text.hpp"

#include <cctype>

namespace bosonic {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Element parse_all() {
    Element e = element();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool at_factor_start() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'q' || c == 'v' || c == 'f' || c == '(';
  }

  long integer(bool allow_sign) {
    skip();
    bool neg = false;
    if (allow_sign && pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
      skip();
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 9) fail("integer too large");
    long v = std::stol(s_.substr(start, pos_ - start));
    return neg ? -v : v;
  }

  long exponent() {
    skip();
    if (peek('{') || peek('(')) {
      char close = s_[pos_] == '{' ? '}' : ')';
      ++pos_;
      long e = integer(true);
      expect(close);
      return e;
    }
    return integer(true);
  }

  Element element() {
    Element total;
    bool neg = false;
    skip();
    if (peek('-')) {
      neg = true;
      ++pos_;
    } else if (peek('+')) {
      ++pos_;
    }
    for (;;) {
      Element t = term();
      total += neg ? -t : t;
      if (peek('+')) {
        neg = false;
        ++pos_;
      } else if (peek('-')) {
        neg = true;
        ++pos_;
      } else {
        return total;
      }
    }
  }

  // A term is scalar * word; letters multiply in order, scalars commute.
  Element term() {
    RatFunc coeff(1);
    Word word;
    bool any = false;
    for (;;) {
      bool divide = false;
      if (any) {
        if (peek('*')) {
          ++pos_;
        } else if (peek('/')) {
          ++pos_;
          divide = true;
        } else if (!at_factor_start()) {
          break;
        }
      }
      if (!at_factor_start()) fail("expected a factor");
      Element f = factor();
      any = true;
      if (f.size() == 1 && f.terms().begin()->first.empty()) {
        RatFunc c = f.terms().begin()->second;
        coeff = divide ? coeff / c : coeff * c;
      } else if (f.size() == 1 && !divide && f.terms().begin()->second.is_one()) {
        const Word& w = f.terms().begin()->first;
        word.insert(word.end(), w.begin(), w.end());
      } else if (f.is_zero()) {
        if (divide) fail("division by zero");
        coeff = RatFunc();
      } else {
        if (divide) fail("division by a non-scalar");
        // Parenthesized sum containing letters: distribute.
        Element acc = Element::word(word, coeff).concat(f);
        return acc.concat(rest_of_term());
      }
    }
    return Element::word(word, coeff);
  }

  Element rest_of_term() {
    Element tail(RatFunc(1));
    while (peek('*') || at_factor_start()) {
      if (peek('*')) ++pos_;
      tail = tail.concat(factor());
    }
    return tail;
  }

  Element factor() {
    skip();
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Element(RatFunc(LaurentScalar(Rational(s_.substr(start, pos_ - start)))));
    }
    if (c == 'q' || c == 'v') {
      ++pos_;
      long e = 1;
      if (peek('^')) {
        ++pos_;
        e = exponent();
      }
      if (e > 100000 || e < -100000) fail("exponent out of range");
      int ve = static_cast<int>(c == 'q' ? 2 * e : e);
      return Element(RatFunc(LaurentScalar::v_power(ve)));
    }
    if (c == 'f') {
      ++pos_;
      expect('[');
      long i = integer(false);
      expect(',');
      long p = integer(true);
      expect(']');
      if (i < 1 || i > 64) fail("node index out of range");
      return Element::letter(static_cast<Node>(i), static_cast<int>(p));
    }
    if (c == '(') {
      ++pos_;
      Element e = element();
      expect(')');
      return e;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace

Element parse_element(const std::string& text) { return Parser(text).parse_all(); }

Element parse_element(const std::string& text, const CartanDatum& cd) {
  Element e = parse_element(text);
  for (const auto& [w, c] : e.terms())
    for (const auto& l : w)
      if (l.i > cd.rank())
        throw ParseError("node index " + std::to_string(l.i) + " exceeds rank of " + cd.name(), 0);
  return e;
}

RatFunc parse_scalar(const std::string& text) {
  Element e = parse_element(text);
  if (e.is_zero()) return {};
  if (e.size() != 1 || !e.terms().begin()->first.empty()) throw ParseError("expected a scalar", 0);
  return e.terms().begin()->second;
}

LaurentScalar parse_laurent(const std::string& text) {
  RatFunc r = parse_scalar(text);
  if (!r.is_laurent()) throw ParseError("expected a Laurent polynomial", 0);
  return r.num();
}

}  // namespace bosonic
