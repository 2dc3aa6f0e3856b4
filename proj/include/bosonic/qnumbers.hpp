#pragma once

#include "bosonic/cartan.hpp"
#include "bosonic/laurent.hpp"

namespace bosonic {

// q_i^n as a power of v.
inline LaurentScalar qi_power(const CartanDatum& cd, Node i, int n) {
  return LaurentScalar::v_power(2 * cd.d(i) * n);
}

LaurentScalar qint(int n, Node i, const CartanDatum& cd);
LaurentScalar qfact(int n, Node i, const CartanDatum& cd);
LaurentScalar qbinom(int n, int m, Node i, const CartanDatum& cd);

// kappa_i = q_i^{1/2}(q_i^{-1} - q_i).
LaurentScalar kappa(Node i, const CartanDatum& cd);
LaurentScalar kappa_power(const RootVec& beta, const CartanDatum& cd);

// Per-node q_i and kappa_i.
struct QuantumConstants {
  std::vector<LaurentScalar> q;
  std::vector<LaurentScalar> kappa;
  explicit QuantumConstants(const CartanDatum& cd);
};

}  // namespace bosonic
