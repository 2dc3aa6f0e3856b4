#include "bosonic/cartan.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bosonic {

namespace {

// Gram matrix of the simple roots, normalized so the short roots have square length 2.
std::vector<std::vector<int>> symmetric_form(char type, int n) {
  std::vector<std::vector<int>> b(n, std::vector<int>(n, 0));
  auto link = [&](int i, int j, int v) { b[i - 1][j - 1] = b[j - 1][i - 1] = v; };
  for (int i = 0; i < n; ++i) b[i][i] = 2;
  switch (type) {
    case 'A':
      for (int i = 1; i < n; ++i) link(i, i + 1, -1);
      break;
    case 'B':
      for (int i = 0; i < n - 1; ++i) b[i][i] = 4;
      for (int i = 1; i < n; ++i) link(i, i + 1, -2);
      break;
    case 'C':
      b[n - 1][n - 1] = 4;
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1);
      link(n - 1, n, -2);
      break;
    case 'D':
      for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1);
      link(n - 2, n, -1);
      break;
    case 'E':
      link(1, 3, -1);
      link(2, 4, -1);
      for (int i = 3; i < n; ++i) link(i, i + 1, -1);
      break;
    case 'F':
      b[0][0] = b[1][1] = 4;
      link(1, 2, -2);
      link(2, 3, -2);
      link(3, 4, -1);
      break;
    case 'G':
      b[1][1] = 6;
      link(1, 2, -3);
      break;
    default:
      break;
  }
  return b;
}

bool valid_type(char type, int n) {
  switch (type) {
    case 'A': return n >= 1;
    case 'B':
    case 'C': return n >= 2;
    case 'D': return n >= 4;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
  }
}

}  // namespace

CartanDatum CartanDatum::from_name(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("invalid Cartan type '" + name + "'");
  char t = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  int n = 0;
  for (std::size_t k = 1; k < name.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(name[k])) || n > 100)
      throw std::invalid_argument("invalid Cartan type '" + name + "'");
    n = 10 * n + (name[k] - '0');
  }
  return CartanDatum(t, n);
}

CartanDatum::CartanDatum(char type, int rank) : type_(type), rank_(rank) {
  if (!valid_type(type, rank))
    throw std::invalid_argument("invalid Cartan type " + std::string(1, type) + std::to_string(rank));
  auto b = symmetric_form(type, rank);
  cartan_.assign(rank, std::vector<int>(rank));
  d_.resize(rank);
  m_.assign(rank, std::vector<int>(rank, 1));
  for (int i = 0; i < rank; ++i) {
    d_[i] = b[i][i] / 2;
    for (int j = 0; j < rank; ++j) cartan_[i][j] = 2 * b[i][j] / b[i][i];
  }
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      if (i == j) continue;
      int prod = cartan_[i][j] * cartan_[j][i];
      m_[i][j] = prod <= 2 ? prod + 2 : 6;
    }
  build_positive_roots();
}

void CartanDatum::check_node(Node i) const {
  if (i < 1 || i > rank_)
    throw std::out_of_range("node index " + std::to_string(i) + " outside 1.." + std::to_string(rank_));
}

int CartanDatum::pairing(const RootVec& a, const RootVec& b) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) s += a[i] * b[j] * d_[i] * cartan_[i][j];
  }
  return s;
}

int CartanDatum::coroot_pairing(Node i, const RootVec& beta) const {
  int s = 0;
  for (int j = 0; j < rank_; ++j) s += cartan_[i - 1][j] * beta[j];
  return s;
}

RootVec CartanDatum::simple_root(Node i) const {
  RootVec r(rank_, 0);
  r[i - 1] = 1;
  return r;
}

void CartanDatum::build_positive_roots() {
  // Grow by height: beta + alpha_i is a root iff the alpha_i-string through beta extends upward.
  std::set<RootVec> known;
  std::vector<RootVec> layer;
  for (Node i = 1; i <= rank_; ++i) {
    layer.push_back(simple_root(i));
    known.insert(layer.back());
  }
  positive_ = layer;
  while (!layer.empty()) {
    std::vector<RootVec> next;
    for (const auto& beta : layer) {
      for (Node i = 1; i <= rank_; ++i) {
        RootVec a = simple_root(i);
        int p = 0;
        while (known.count(beta - (p + 1) * a)) ++p;
        if (p - coroot_pairing(i, beta) > 0) {
          RootVec up = beta + a;
          if (known.insert(up).second) next.push_back(up);
        }
      }
    }
    std::sort(next.begin(), next.end());
    positive_.insert(positive_.end(), next.begin(), next.end());
    layer = std::move(next);
  }
}

bool CartanDatum::is_root(const RootVec& beta) const {
  RootVec a = is_nonneg(beta) ? beta : -1 * beta;
  return std::find(positive_.begin(), positive_.end(), a) != positive_.end();
}

int CartanDatum::root_string_p(const RootVec& beta, const RootVec& alpha) const {
  if (!is_root(beta) || !is_root(alpha)) throw std::invalid_argument("root_string_p: argument is not a root");
  int p = 0;
  while (is_root(beta - (p + 1) * alpha)) ++p;
  return p;
}

int height(const RootVec& beta) {
  int h = 0;
  for (int a : beta) h += a < 0 ? -a : a;
  return h;
}

RootVec abs_vec(const RootVec& beta) {
  RootVec r = beta;
  for (int& a : r) a = a < 0 ? -a : a;
  return r;
}

RootVec operator+(const RootVec& a, const RootVec& b) {
  RootVec r = a;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
  return r;
}

RootVec operator-(const RootVec& a, const RootVec& b) {
  RootVec r = a;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] -= b[k];
  return r;
}

RootVec operator*(int k, const RootVec& a) {
  RootVec r = a;
  for (int& x : r) x *= k;
  return r;
}

bool is_zero_vec(const RootVec& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

bool is_nonneg(const RootVec& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; });
}

std::string root_to_string(const RootVec& a) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] == 0) continue;
    int c = a[k];
    if (c < 0) os << (first ? "-" : " - ");
    else if (!first) os << " + ";
    int mag = c < 0 ? -c : c;
    if (mag != 1) os << mag;
    os << "a" << k + 1;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace bosonic
