#include "bosonic/qnumbers.hpp"

#include <stdexcept>

namespace bosonic {

LaurentScalar qint(int n, Node i, const CartanDatum& cd) {
  if (n < 0) throw std::invalid_argument("qint: negative argument");
  // q_i^{-(n-1)} + q_i^{-(n-3)} + ... + q_i^{n-1}
  std::vector<LaurentScalar::Term> t;
  for (int k = 0; k < n; ++k) t.emplace_back(2 * cd.d(i) * (2 * k - n + 1), 1);
  return LaurentScalar::from_terms(std::move(t));
}

LaurentScalar qfact(int n, Node i, const CartanDatum& cd) {
  LaurentScalar r(1);
  for (int k = 2; k <= n; ++k) r *= qint(k, i, cd);
  return r;
}

LaurentScalar qbinom(int n, int m, Node i, const CartanDatum& cd) {
  if (m < 0 || m > n) throw std::invalid_argument("qbinom: requires 0 <= m <= n");
  auto r = qfact(n, i, cd).exact_div(qfact(m, i, cd) * qfact(n - m, i, cd));
  return *r;
}

LaurentScalar kappa(Node i, const CartanDatum& cd) {
  int d = cd.d(i);
  return LaurentScalar::from_terms({{-d, 1}, {3 * d, -1}});
}

LaurentScalar kappa_power(const RootVec& beta, const CartanDatum& cd) {
  LaurentScalar r(1);
  for (int k = 0; k < cd.rank(); ++k) {
    if (beta[k] < 0) throw std::invalid_argument("kappa_power: negative coordinate");
    if (beta[k] > 0) r *= kappa(k + 1, cd).pow(static_cast<unsigned>(beta[k]));
  }
  return r;
}

QuantumConstants::QuantumConstants(const CartanDatum& cd) {
  for (Node i = 1; i <= cd.rank(); ++i) {
    q.push_back(qi_power(cd, i, 1));
    kappa.push_back(bosonic::kappa(i, cd));
  }
}

}  // namespace bosonic
