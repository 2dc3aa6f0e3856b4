#include "bosonic/braid.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bosonic {

namespace {

WeylElement inverse(const CartanDatum& cd, const WeylElement& w) {
  IndexWord word = w.reduced_word(cd);
  std::reverse(word.begin(), word.end());
  return WeylElement::from_word(cd, word);
}

// Move letters from the left of y into x until D_L(y) is inside D_R(x).
bool left_weight(const CartanDatum& cd, WeylElement& x, WeylElement& y) {
  bool changed = false;
  for (bool again = true; again;) {
    again = false;
    for (Node t = 1; t <= cd.rank(); ++t) {
      if (!x.has_right_descent(t) && y.has_left_descent(cd, t)) {
        x = x * WeylElement::reflection(cd, t);
        y = WeylElement::reflection(cd, t) * y;
        again = changed = true;
      }
    }
  }
  return changed;
}

}  // namespace

std::vector<IndexWord> GarsideForm::factor_words(const CartanDatum& cd) const {
  std::vector<IndexWord> out;
  for (const auto& f : factors) out.push_back(f.reduced_word(cd));
  return out;
}

BraidWord GarsideForm::to_word(const CartanDatum& cd) const {
  BraidWord w;
  IndexWord delta = longest_word(cd);
  for (int r = 0; r < delta_power; ++r) w.insert(w.end(), delta.begin(), delta.end());
  for (const auto& f : factor_words(cd)) w.insert(w.end(), f.begin(), f.end());
  return w;
}

std::string GarsideForm::to_string(const CartanDatum& cd) const {
  std::ostringstream os;
  os << "Delta^" << delta_power;
  for (const auto& f : factor_words(cd)) os << " | " << word_to_string(f);
  return os.str();
}

WeylElement weyl_image(const CartanDatum& cd, const BraidWord& w) { return WeylElement::from_word(cd, w); }

bool is_permutation_braid(const CartanDatum& cd, const BraidWord& w) { return is_reduced(cd, w); }

GarsideForm garside_normal_form(const CartanDatum& cd, const BraidWord& w) {
  std::vector<WeylElement> f;
  for (Node i : w) f.push_back(WeylElement::reflection(cd, i));
  // Left-weight adjacent pairs until stable; each step moves length leftward.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t j = 0; j + 1 < f.size(); ++j) changed |= left_weight(cd, f[j], f[j + 1]);
    auto end = std::remove_if(f.begin(), f.end(), [](const WeylElement& x) { return x.is_identity(); });
    if (end != f.end()) {
      f.erase(end, f.end());
      changed = true;
    }
  }
  GarsideForm g;
  WeylElement w0 = longest_element(cd);
  std::size_t k = 0;
  while (k < f.size() && f[k] == w0) ++k;
  g.delta_power = static_cast<int>(k);
  g.factors.assign(f.begin() + static_cast<std::ptrdiff_t>(k), f.end());
  return g;
}

bool braid_equal(const CartanDatum& cd, const BraidWord& x, const BraidWord& y) {
  return x.size() == y.size() && garside_normal_form(cd, x) == garside_normal_form(cd, y);
}

bool left_divisible(const CartanDatum& cd, const BraidWord& z, Node i) {
  GarsideForm g = garside_normal_form(cd, z);
  if (g.delta_power > 0) return true;
  return !g.factors.empty() && g.factors[0].has_left_descent(cd, i);
}

BraidWord left_quotient(const CartanDatum& cd, const BraidWord& z, Node i) {
  GarsideForm g = garside_normal_form(cd, z);
  WeylElement si = WeylElement::reflection(cd, i);
  BraidWord out;
  IndexWord delta = longest_word(cd);
  auto append = [&](const WeylElement& w) {
    IndexWord fw = w.reduced_word(cd);
    out.insert(out.end(), fw.begin(), fw.end());
  };
  if (g.delta_power > 0) {
    // Delta^r x = r_i (r_i w0) Delta^{r-1} x
    append(si * longest_element(cd));
    g.delta_power -= 1;
  } else if (!g.factors.empty() && g.factors[0].has_left_descent(cd, i)) {
    g.factors[0] = si * g.factors[0];
  } else {
    throw std::invalid_argument("left_quotient: r_" + std::to_string(i) + " does not divide the braid");
  }
  for (int r = 0; r < g.delta_power; ++r) out.insert(out.end(), delta.begin(), delta.end());
  for (const auto& f : g.factors) append(f);
  return out;
}

BraidWord braid_gcd(const CartanDatum& cd, const BraidWord& x, const BraidWord& y) {
  BraidWord d, rx = x, ry = y;
  for (bool grew = true; grew;) {
    grew = false;
    for (Node i = 1; i <= cd.rank(); ++i) {
      if (left_divisible(cd, rx, i) && left_divisible(cd, ry, i)) {
        d.push_back(i);
        rx = left_quotient(cd, rx, i);
        ry = left_quotient(cd, ry, i);
        grew = true;
        break;
      }
    }
  }
  return d;
}

bool braid_prefix_le(const CartanDatum& cd, const BraidWord& x, const BraidWord& y) {
  BraidWord ry = y;
  for (Node i : x) {
    if (!left_divisible(cd, ry, i)) return false;
    ry = left_quotient(cd, ry, i);
  }
  return true;
}

DeltaCompletion complete_to_delta_power(const CartanDatum& cd, const BraidWord& x) {
  GarsideForm g = garside_normal_form(cd, x);
  WeylElement w0 = longest_element(cd);
  IndexWord delta = longest_word(cd);
  DeltaCompletion out;
  const int k = static_cast<int>(g.factors.size());
  if (k == 1) {
    out.y = (inverse(cd, g.factors[0]) * w0).reduced_word(cd);
    out.m = g.delta_power + 1;
  } else {
    for (int j = k - 1; j >= 0; --j) {
      IndexWord yj = (inverse(cd, g.factors[j]) * w0).reduced_word(cd);
      out.y.insert(out.y.end(), yj.begin(), yj.end());
      out.y.insert(out.y.end(), delta.begin(), delta.end());
    }
    out.m = g.delta_power + 2 * k;
  }
  BraidWord xy = x;
  xy.insert(xy.end(), out.y.begin(), out.y.end());
  GarsideForm check = garside_normal_form(cd, xy);
  if (check.delta_power != out.m || !check.factors.empty())
    throw std::logic_error("complete_to_delta_power: product is not a power of Delta");
  return out;
}

std::vector<BraidWord> braid_move_neighbors(const CartanDatum& cd, const BraidWord& w) {
  std::vector<BraidWord> out;
  for (std::size_t c = 0; c + 1 < w.size(); ++c) {
    Node i = w[c], j = w[c + 1];
    if (i == j) continue;
    auto m = static_cast<std::size_t>(cd.m(i, j));
    if (c + m > w.size()) continue;
    bool alternating = true;
    for (std::size_t t = 0; t < m && alternating; ++t) alternating = w[c + t] == (t % 2 == 0 ? i : j);
    if (!alternating) continue;
    BraidWord n = w;
    for (std::size_t t = 0; t < m; ++t) n[c + t] = t % 2 == 0 ? j : i;
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(std::move(n));
  }
  return out;
}

std::vector<BraidWord> braid_move_class(const CartanDatum& cd, const BraidWord& w) {
  std::set<BraidWord> seen{w};
  std::deque<BraidWord> todo{w};
  while (!todo.empty()) {
    BraidWord cur = std::move(todo.front());
    todo.pop_front();
    for (auto& n : braid_move_neighbors(cd, cur))
      if (seen.insert(n).second) todo.push_back(n);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace bosonic
