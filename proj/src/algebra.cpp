#include "bosonic/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "bosonic/cache.hpp"

namespace bosonic {

// ---------------------------------------------------------------- words

bool WordOrder::operator()(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() > b.size();
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].p != b[k].p) return a[k].p > b[k].p;
    if (a[k].i != b[k].i) return a[k].i < b[k].i;
  }
  return false;
}

RootVec word_weight(const CartanDatum& cd, const Word& w) {
  RootVec r(cd.rank(), 0);
  for (const auto& l : w) r[l.i - 1] += (l.p % 2 == 0) ? 1 : -1;
  return r;
}

NodeWord to_node_word(const Word& w) {
  NodeWord s;
  for (const auto& l : w) s.push_back(static_cast<char>(l.i));
  return s;
}

Word from_node_word(const NodeWord& w, int level) {
  Word r;
  for (char c : w) r.push_back(Letter{c, level});
  return r;
}

std::string word_to_text(const Word& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += " ";
    s += "f[" + std::to_string(w[k].i) + "," + std::to_string(w[k].p) + "]";
  }
  return s;
}

// ---------------------------------------------------------------- Element

Element::Element(const RatFunc& c) {
  if (!c.is_zero()) terms_.emplace(Word{}, c);
}

Element Element::word(const Word& w, const RatFunc& c) {
  Element e;
  e.add_term(w, c);
  return e;
}

RatFunc Element::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? RatFunc() : it->second;
}

void Element::add_term(const Word& w, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

Element Element::scaled(const RatFunc& c) const {
  if (c.is_zero()) return {};
  Element r = *this;
  for (auto& [w, x] : r.terms_) x *= c;
  return r;
}

Element Element::concat(const Element& o) const {
  Element r;
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      Word w = a;
      w.insert(w.end(), b.begin(), b.end());
      r.add_term(w, ca * cb);
    }
  return r;
}

namespace {

// Sign and printable body of a coefficient placed before a word.
struct CoeffText {
  bool negative = false;
  std::string body;
};

CoeffText coeff_text(const RatFunc& c) {
  CoeffText t;
  if (c.is_laurent() && c.num().is_monomial()) {
    const auto& [e, r] = c.num().terms()[0];
    t.negative = r < 0;
    LaurentScalar mag = LaurentScalar::monomial(t.negative ? Rational(-r) : r, e);
    t.body = mag.is_one() ? "" : mag.to_q_string();
    return t;
  }
  t.body = c.is_laurent() ? "(" + c.num().to_q_string() + ")" : c.to_q_string();
  return t;
}

}  // namespace

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    CoeffText t = coeff_text(c);
    if (first) {
      if (t.negative) os << "-";
    } else {
      os << (t.negative ? " - " : " + ");
    }
    std::string letters = word_to_text(w);
    if (t.body.empty()) {
      os << (letters.empty() ? "1" : letters);
    } else {
      os << t.body;
      if (!letters.empty()) os << " " << letters;
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- Algebra

Algebra::Algebra(CartanDatum cd, AlgebraOptions opts)
    : cd_(std::move(cd)), opts_(std::move(opts)), qc_(cd_), phi_(cd_) {}

Element Algebra::generator(Node i, int p) const {
  cd_.check_node(i);
  return Element::letter(i, p);
}

bool Algebra::is_block_sorted(const Word& w) const {
  for (std::size_t k = 1; k < w.size(); ++k)
    if (w[k - 1].p < w[k].p) return false;
  return true;
}

namespace {

using LaurentTerms = std::map<Word, LaurentScalar, WordOrder>;

void accumulate(LaurentTerms& out, Word w, const LaurentScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = out.emplace(std::move(w), c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) out.erase(it);
}

}  // namespace

// Appends x to the sorted word and moves it left past lower-level letters using
// f_{i,m} f_{j,p} = q_i^{(-1)^{p-m+1} c_ij} f_{j,p} f_{i,m}          (p > m+1)
// f_{i,m} f_{j,m+1} = q_i^{c_ij} f_{j,m+1} f_{i,m} + delta_ij (1 - q_i^2).
void Algebra::insert_letter(const Word& sorted, const Letter& x, const LaurentScalar& c, LaurentTerms& out) const {
  std::size_t n = sorted.size();
  Word suffix;
  LaurentScalar coef = c;
  while (n > 0 && sorted[n - 1].p < x.p) {
    const Letter& y = sorted[n - 1];
    const int d = cd_.d(y.i), cij = cd_.c(y.i, x.i);
    if (x.p > y.p + 1) {
      int e = ((x.p - y.p + 1) % 2 == 0) ? cij : -cij;
      coef = coef.shifted(2 * d * e);
    } else {
      if (y.i == x.i) {
        Word w(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(n - 1));
        w.insert(w.end(), suffix.begin(), suffix.end());
        accumulate(out, std::move(w), coef * LaurentScalar::from_terms({{0, 1}, {4 * d, -1}}));
      }
      coef = coef.shifted(2 * d * cij);
    }
    suffix.insert(suffix.begin(), y);
    --n;
  }
  Word w(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(n));
  w.push_back(x);
  w.insert(w.end(), suffix.begin(), suffix.end());
  accumulate(out, std::move(w), coef);
}

Element Algebra::block_sort(const Element& x) const {
  Element result;
  for (const auto& [w, c] : x.terms()) {
    if (is_block_sorted(w)) {
      result.add_term(w, c);
      continue;
    }
    LaurentTerms cur;
    cur.emplace(Word{}, LaurentScalar(1));
    for (const auto& l : w) {
      LaurentTerms next;
      for (const auto& [sw, sc] : cur) insert_letter(sw, l, sc, next);
      cur = std::move(next);
    }
    for (const auto& [sw, sc] : cur) result.add_term(sw, c * RatFunc(sc));
  }
  return result;
}

Element Algebra::normal_form(const Element& x) {
  Element sorted = block_sort(x);
  Element result;
  for (const auto& [w, c] : sorted.terms()) {
    // Expand block by block; partial holds (word so far, coefficient).
    std::vector<std::pair<Word, RatFunc>> partial{{Word{}, c}};
    std::size_t start = 0;
    while (start < w.size() && !partial.empty()) {
      std::size_t end = start;
      while (end < w.size() && w[end].p == w[start].p) ++end;
      const int level = w[start].p;
      NodeWord block;
      for (std::size_t k = start; k < end; ++k) block.push_back(static_cast<char>(w[k].i));
      const auto& coords = slice_coordinates(block);
      std::vector<std::pair<Word, RatFunc>> next;
      next.reserve(partial.size() * coords.size());
      for (const auto& [pw, pc] : partial)
        for (const auto& [nw, nc] : coords) {
          Word ext = pw;
          for (char ch : nw) ext.push_back(Letter{ch, level});
          next.emplace_back(std::move(ext), pc * nc);
        }
      partial = std::move(next);
      start = end;
    }
    for (const auto& [pw, pc] : partial) result.add_term(pw, pc);
  }
  return result;
}

Element Algebra::mul(const Element& x, const Element& y) { return normal_form(x.concat(y)); }

Element Algebra::pow(const Element& x, int n) {
  Element r(RatFunc(1));
  for (int k = 0; k < n; ++k) r = mul(r, x);
  return r;
}

RootVec Algebra::weight(const Element& x) const {
  if (x.is_zero()) return RootVec(cd_.rank(), 0);
  RootVec first = word_weight(cd_, x.terms().begin()->first);
  for (const auto& [w, c] : x.terms()) {
    RootVec wt = word_weight(cd_, w);
    if (wt != first)
      throw NonHomogeneousError("element is not weight-homogeneous: weights " + root_to_string(first) + " and " +
                                root_to_string(wt));
  }
  return first;
}

std::map<RootVec, Element> Algebra::homogeneous_components(const Element& x) const {
  std::map<RootVec, Element> out;
  for (const auto& [w, c] : x.terms()) out[word_weight(cd_, w)].add_term(w, c);
  return out;
}

Element Algebra::shift_D(const Element& x, int k) const {
  Element r;
  for (const auto& [w, c] : x.terms()) {
    Word s = w;
    for (auto& l : s) l.p += k;
    r.add_term(s, c);
  }
  return r;
}

Element Algebra::star(const Element& x) const {
  Element r;
  for (const auto& [w, c] : x.terms()) {
    Word s(w.rbegin(), w.rend());
    for (auto& l : s) l.p = -l.p;
    r.add_term(s, c);
  }
  return r;
}

Element Algebra::bar(const Element& x) const {
  Element r;
  for (const auto& [w, c] : x.terms()) r.add_term(Word(w.rbegin(), w.rend()), c.bar());
  return r;
}

Element Algebra::sigma(const Element& x, const std::vector<Node>& perm) const {
  Element r;
  for (const auto& [w, c] : x.terms()) {
    Word s = w;
    for (auto& l : s) l.i = perm.at(l.i - 1);
    r.add_term(s, c);
  }
  return r;
}

// ---------------------------------------------------------------- slices

namespace {

int single_level(const Element& x, const char* what) {
  std::optional<int> level;
  for (const auto& [w, c] : x.terms())
    for (const auto& l : w) {
      if (level && *level != l.p)
        throw std::invalid_argument(std::string(what) + ": element is not supported in a single slice");
      level = l.p;
    }
  return level.value_or(0);
}

}  // namespace

Element Algebra::eprime_slice(Node i, const Element& x) {
  single_level(x, "eprime_slice");
  Element r;
  for (const auto& [w, c] : x.terms()) {
    int e = 0;  // (alpha_i, weight of the prefix)
    for (std::size_t t = 0; t < w.size(); ++t) {
      if (w[t].i == i) {
        Word rest = w;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(t));
        r.add_term(rest, c * RatFunc(LaurentScalar::v_power(-2 * e)));
      }
      e += cd_.pairing_simple(i, w[t].i);
    }
  }
  return normal_form(r);
}

Element Algebra::estar_slice(Node i, const Element& x) {
  single_level(x, "estar_slice");
  Element r;
  for (const auto& [w, c] : x.terms()) {
    int e = 0;
    for (std::size_t t = w.size(); t-- > 0;) {
      if (w[t].i == i) {
        Word rest = w;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(t));
        r.add_term(rest, c * RatFunc(LaurentScalar::v_power(-2 * e)));
      }
      e += cd_.pairing_simple(i, w[t].i);
    }
  }
  return normal_form(r);
}

RatFunc Algebra::kashiwara_form_slice(const Element& x, const Element& y) {
  int lx = single_level(x, "kashiwara_form_slice");
  int ly = single_level(y, "kashiwara_form_slice");
  RatFunc total;
  for (const auto& [wx, cx] : x.terms())
    for (const auto& [wy, cy] : y.terms()) {
      if (wx.size() != wy.size()) continue;
      if (!wx.empty() && lx != ly) continue;
      LaurentScalar k = phi_.pair(to_node_word(wx), to_node_word(wy));
      if (!k.is_zero()) total += cx * cy * RatFunc(k);
    }
  return total;
}

RatFunc Algebra::lusztig_form_slice(const Element& x, const Element& y) {
  int lx = single_level(x, "lusztig_form_slice");
  int ly = single_level(y, "lusztig_form_slice");
  RatFunc total;
  for (const auto& [wx, cx] : x.terms())
    for (const auto& [wy, cy] : y.terms()) {
      if (wx.size() != wy.size()) continue;
      if (!wx.empty() && lx != ly) continue;
      NodeWord nx = to_node_word(wx);
      LaurentScalar k = phi_.pair(nx, to_node_word(wy));
      if (k.is_zero()) continue;
      LaurentScalar den(1);
      for (char ch : nx) den *= LaurentScalar::from_terms({{0, 1}, {4 * cd_.d(ch), -1}});
      total += cx * cy * RatFunc(k, den);
    }
  return total;
}

LaurentScalar Algebra::block_factor(const RootVec& n) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = factor_memo_.find(n);
  if (it != factor_memo_.end()) return it->second;
  LaurentScalar num(1), den(1);
  for (Node i = 1; i <= cd_.rank(); ++i) {
    unsigned k = static_cast<unsigned>(n[i - 1]);
    if (k == 0) continue;
    num *= qc_.kappa[i - 1].pow(2 * k);
    den *= LaurentScalar::from_terms({{0, 1}, {4 * cd_.d(i), -1}}).pow(k);
  }
  auto q = num.exact_div(den);
  if (!q) throw std::logic_error("form: kappa power does not clear the (1 - q_i^2) denominators");
  factor_memo_.emplace(n, *q);
  return *q;
}

namespace {

struct Block {
  int level;
  NodeWord word;
  friend bool operator==(const Block&, const Block&) = default;
};

std::vector<Block> split_blocks(const Word& w) {
  std::vector<Block> out;
  for (const auto& l : w) {
    if (out.empty() || out.back().level != l.p) out.push_back(Block{l.p, {}});
    out.back().word.push_back(static_cast<char>(l.i));
  }
  return out;
}

// Levels and per-block letter multisets; the form vanishes unless these agree.
std::vector<std::pair<int, NodeWord>> profile_of(const std::vector<Block>& blocks) {
  std::vector<std::pair<int, NodeWord>> p;
  for (const auto& b : blocks) {
    NodeWord s = b.word;
    std::sort(s.begin(), s.end());
    p.emplace_back(b.level, std::move(s));
  }
  return p;
}

}  // namespace

RatFunc Algebra::form(const Element& x, const Element& y) {
  Element xs = block_sort(x), ys = block_sort(y);
  using Profile = std::vector<std::pair<int, NodeWord>>;
  std::map<Profile, std::vector<std::pair<std::vector<Block>, RatFunc>>> ygroups;
  for (const auto& [w, c] : ys.terms()) {
    auto blocks = split_blocks(w);
    ygroups[profile_of(blocks)].emplace_back(std::move(blocks), c);
  }
  RatFunc total;
  for (const auto& [w, cx] : xs.terms()) {
    auto xb = split_blocks(w);
    Profile prof = profile_of(xb);
    auto it = ygroups.find(prof);
    if (it == ygroups.end()) continue;
    LaurentScalar factor(1);
    for (const auto& [lvl, letters] : prof) factor *= block_factor(node_word_weight(cd_, letters));
    LaurentScalar acc;
    RatFunc racc;
    for (const auto& [yb, cy] : it->second) {
      LaurentScalar prod(1);
      for (std::size_t k = 0; k < xb.size() && !prod.is_zero(); ++k) prod *= phi_.pair(xb[k].word, yb[k].word);
      if (prod.is_zero()) continue;
      if (cy.is_laurent()) acc += prod * cy.num();
      else racc += cy * RatFunc(prod);
    }
    racc += RatFunc(acc);
    if (!racc.is_zero()) total += cx * racc * RatFunc(factor);
  }
  return total;
}

Element Algebra::adjoint_Eprime(Node i, int k, const Element& x) {
  Element r;
  for (const auto& [w, c] : x.terms()) {
    int h = cd_.coroot_pairing(i, word_weight(cd_, w));
    int e = (k % 2 == 0 ? -h : h) + 1;
    Word s = w;
    s.push_back(Letter{i, k + 1});
    r.add_term(s, c * RatFunc(qi_power(cd_, i, e)));
  }
  return normal_form(r);
}

Element Algebra::adjoint_Estar(Node i, int k, const Element& x) {
  Element r;
  for (const auto& [w, c] : x.terms()) {
    int h = cd_.coroot_pairing(i, word_weight(cd_, w));
    int e = (k % 2 == 0 ? -h : h) + 1;
    Word s{Letter{i, k - 1}};
    s.insert(s.end(), w.begin(), w.end());
    r.add_term(s, c * RatFunc(qi_power(cd_, i, e)));
  }
  return normal_form(r);
}

// ---------------------------------------------------------------- slice bases

long Algebra::kostant(const RootVec& beta, int from) {
  if (is_zero_vec(beta)) return 1;
  const auto& roots = cd_.positive_roots();
  if (from >= static_cast<int>(roots.size())) return 0;
  auto key = std::make_pair(beta, from);
  auto it = kostant_memo_.find(key);
  if (it != kostant_memo_.end()) return it->second;
  long total = kostant(beta, from + 1);
  RootVec rest = beta - roots[from];
  if (is_nonneg(rest)) total += kostant(rest, from);
  kostant_memo_.emplace(key, total);
  return total;
}

long Algebra::kostant_partition_count(const RootVec& beta) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  return kostant(beta, 0);
}

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;
constexpr std::uint64_t kEvalPoint = 1234577;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a) { return powmod(a, kPrime - 2); }

std::uint64_t mpz_mod(const mpz_class& z) {
  static const mpz_class p(static_cast<unsigned long>(kPrime));
  mpz_class m;
  mpz_fdiv_r(m.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t());
  return m.get_ui();
}

std::uint64_t eval_mod(const LaurentScalar& s) {
  static const std::uint64_t vinv = invmod(kEvalPoint);
  std::uint64_t acc = 0;
  for (const auto& [e, c] : s.terms()) {
    std::uint64_t val = mulmod(mpz_mod(c.get_num()), invmod(mpz_mod(c.get_den())));
    std::uint64_t pw = e >= 0 ? powmod(kEvalPoint, static_cast<std::uint64_t>(e))
                              : powmod(vinv, static_cast<std::uint64_t>(-e));
    acc = (acc + mulmod(val, pw)) % kPrime;
  }
  return acc;
}

// Gauss-Jordan inverse over Q(v); nullopt when singular.
std::optional<std::vector<std::vector<RatFunc>>> invert(std::vector<std::vector<RatFunc>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<RatFunc>> inv(n, std::vector<RatFunc>(n));
  for (std::size_t k = 0; k < n; ++k) inv[k][k] = RatFunc(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    RatFunc s = a[col][col].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      if (!a[col][j].is_zero()) a[col][j] *= s;
      if (!inv[col][j].is_zero()) inv[col][j] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      RatFunc f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        if (!a[col][j].is_zero()) a[r][j] -= f * a[col][j];
        if (!inv[col][j].is_zero()) inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

std::vector<NodeWord> all_words(const RootVec& n) {
  NodeWord w;
  for (std::size_t i = 0; i < n.size(); ++i) w.append(static_cast<std::size_t>(n[i]), static_cast<char>(i + 1));
  std::vector<NodeWord> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace

std::unique_ptr<SliceBasis> Algebra::build_basis(const RootVec& weight) {
  if (height(weight) > opts_.max_height)
    throw GuardrailError("slice weight " + root_to_string(weight) + " has height " +
                         std::to_string(height(weight)) + " above the cap " + std::to_string(opts_.max_height));
  auto b = std::make_unique<SliceBasis>();
  b->weight = weight;
  b->words = all_words(weight);
  const std::size_t dim = static_cast<std::size_t>(kostant(weight, 0));

  std::vector<NodeWord> chosen;
  if (auto cached = load_slice_pivots(opts_.cache_dir, cd_, weight, b->words.size());
      cached && cached->size() == dim) {
    chosen = *cached;
  } else {
    // Screen candidates modulo a prime; the exact inverse below confirms the choice.
    std::map<NodeWord, std::size_t> index;
    for (std::size_t k = 0; k < b->words.size(); ++k) index[b->words[k]] = k;
    std::vector<std::vector<std::uint64_t>> rows;
    std::vector<std::size_t> lead;
    for (const auto& w : b->words) {
      if (chosen.size() == dim) break;
      std::vector<std::uint64_t> r(b->words.size(), 0);
      for (const auto& [x, c] : phi_.phi(w)) r[index.at(x)] = eval_mod(c);
      for (std::size_t t = 0; t < rows.size(); ++t) {
        std::uint64_t f = r[lead[t]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < r.size(); ++j)
          if (rows[t][j]) r[j] = (r[j] + kPrime - mulmod(f, rows[t][j])) % kPrime;
      }
      auto nz = std::find_if(r.begin(), r.end(), [](std::uint64_t v) { return v != 0; });
      if (nz == r.end()) continue;
      std::size_t l = static_cast<std::size_t>(nz - r.begin());
      std::uint64_t s = invmod(r[l]);
      for (auto& v : r) v = mulmod(v, s);
      rows.push_back(std::move(r));
      lead.push_back(l);
      chosen.push_back(w);
    }
  }
  if (chosen.size() != dim)
    throw std::logic_error("slice basis for " + root_to_string(weight) + ": found " + std::to_string(chosen.size()) +
                           " pivots, expected " + std::to_string(dim));
  b->pivots = chosen;
  std::vector<std::vector<RatFunc>> g(dim, std::vector<RatFunc>(dim));
  b->gram.assign(dim, std::vector<LaurentScalar>(dim));
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      b->gram[r][c] = phi_.pair(chosen[r], chosen[c]);
      g[r][c] = RatFunc(b->gram[r][c]);
    }
  auto inv = invert(std::move(g));
  if (!inv) throw std::logic_error("slice basis for " + root_to_string(weight) + ": pivot Gram matrix is singular");
  b->gram_inverse = std::move(*inv);
  save_slice_basis(opts_.cache_dir, cd_, *b);
  return b;
}

const SliceBasis& Algebra::slice_basis(const RootVec& weight) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = bases_.find(weight);
  if (it != bases_.end()) return *it->second;
  auto b = build_basis(weight);
  return *bases_.emplace(weight, std::move(b)).first->second;
}

const std::vector<std::pair<NodeWord, RatFunc>>& Algebra::slice_coordinates(const NodeWord& w) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = coords_.find(w);
  if (it != coords_.end()) return it->second;
  std::vector<std::pair<NodeWord, RatFunc>> out;
  if (w.size() <= 1) {
    out.emplace_back(w, RatFunc(1));
  } else {
    const SliceBasis& b = slice_basis(node_word_weight(cd_, w));
    auto pos = std::find(b.pivots.begin(), b.pivots.end(), w);
    if (pos != b.pivots.end()) {
      out.emplace_back(w, RatFunc(1));
    } else {
      const std::size_t dim = b.pivots.size();
      std::vector<LaurentScalar> rhs(dim);
      for (std::size_t k = 0; k < dim; ++k) rhs[k] = phi_.pair(b.pivots[k], w);
      for (std::size_t r = 0; r < dim; ++r) {
        RatFunc c;
        for (std::size_t k = 0; k < dim; ++k)
          if (!rhs[k].is_zero() && !b.gram_inverse[r][k].is_zero()) c += b.gram_inverse[r][k] * RatFunc(rhs[k]);
        if (!c.is_zero()) out.emplace_back(b.pivots[r], c);
      }
    }
  }
  return coords_.emplace(w, std::move(out)).first->second;
}

}  // namespace bosonic
