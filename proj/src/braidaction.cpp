#include "bosonic/braidaction.hpp"

#include <stdexcept>

namespace bosonic {

namespace {

// sum_{r+s=n} (-1)^r q_i^r f^{(s)} f_j f^{(r)} (or with r, s swapped in the outer
// positions when `inverse`), times kappa_i^{-n}.
Element serre_image(Algebra& A, Node i, const Letter& l, bool inverse) {
  const CartanDatum& cd = A.cartan();
  const int n = -cd.c(i, l.i);
  Element sum;
  for (int r = 0; r <= n; ++r) {
    int s = n - r;
    int left = inverse ? r : s, right = inverse ? s : r;
    Word w(static_cast<std::size_t>(left), Letter{i, l.p});
    w.push_back(l);
    w.insert(w.end(), static_cast<std::size_t>(right), Letter{i, l.p});
    LaurentScalar c = qi_power(cd, i, r);
    if (r % 2) c = -c;
    LaurentScalar den = qfact(left, i, cd) * qfact(right, i, cd);
    auto exact = c.exact_div(den);
    RatFunc coef = exact ? RatFunc(*exact) : RatFunc(c, den);
    sum.add_term(w, coef);
  }
  return sum.scaled(RatFunc(kappa(i, cd)).pow(-n));
}

template <class LetterMap>
Element apply_hom(Algebra& A, const Element& x, LetterMap&& image) {
  Element result;
  for (const auto& [w, c] : x.terms()) {
    Element acc(c);
    for (const auto& l : w) acc = A.normal_form(acc.concat(image(l)));
    result += acc;
  }
  return result;
}

}  // namespace

Element T_letter(Algebra& A, Node i, const Letter& l) {
  const CartanDatum& cd = A.cartan();
  cd.check_node(i);
  if (l.i == i) return Element::letter(i, l.p + 1);
  if (cd.c(i, l.i) == 0) return Element::letter(l.i, l.p);
  return serre_image(A, i, l, false);
}

Element T_inv_letter(Algebra& A, Node i, const Letter& l) {
  const CartanDatum& cd = A.cartan();
  cd.check_node(i);
  if (l.i == i) return Element::letter(i, l.p - 1);
  if (cd.c(i, l.i) == 0) return Element::letter(l.i, l.p);
  return serre_image(A, i, l, true);
}

Element T(Algebra& A, Node i, const Element& x) {
  return apply_hom(A, x, [&](const Letter& l) { return T_letter(A, i, l); });
}

Element T_inv(Algebra& A, Node i, const Element& x) {
  return apply_hom(A, x, [&](const Letter& l) { return T_inv_letter(A, i, l); });
}

Element T_word(Algebra& A, const IndexWord& word, const Element& x, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("T_word: sign must be +1 or -1");
  Element r = A.normal_form(x);
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = sign > 0 ? T(A, *it, r) : T_inv(A, *it, r);
  return r;
}

}  // namespace bosonic
