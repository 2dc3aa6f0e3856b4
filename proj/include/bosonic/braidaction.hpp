#pragma once

#include "bosonic/algebra.hpp"
#include "bosonic/weyl.hpp"

namespace bosonic {

// Images of single generators under T_i and T_i^{-1}, unnormalized.
Element T_letter(Algebra& A, Node i, const Letter& l);
Element T_inv_letter(Algebra& A, Node i, const Letter& l);

Element T(Algebra& A, Node i, const Element& x);
Element T_inv(Algebra& A, Node i, const Element& x);
// T_{i_1} T_{i_2} ... T_{i_n}(x) for sign = +1, with inverses for sign = -1.
Element T_word(Algebra& A, const IndexWord& word, const Element& x, int sign = 1);

}  // namespace bosonic
