#pragma once

#include <string>

#include "bosonic/algebra.hpp"
#include "bosonic/text.hpp"

namespace testing {

using namespace bosonic;

inline LaurentScalar L(const std::string& s) { return parse_laurent(s); }
inline RatFunc R(const std::string& s) { return parse_scalar(s); }
inline Element E(const std::string& s) { return parse_element(s); }
inline Element f(Node i, int p) { return Element::letter(i, p); }

}  // namespace testing
