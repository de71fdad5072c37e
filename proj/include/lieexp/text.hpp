#ifndef LIEEXP_TEXT_HPP
#define LIEEXP_TEXT_HPP

#include <string>

#include "lieexp/element.hpp"

namespace lieexp {

/// Concrete syntax, e.g. "e^{2*x1}*x1^3 D1", "-12*y1 - 2", "1/2*x1*y1^2".
///
///   element  := ["+"|"-"] term (("+"|"-") term)*  |  "0"
///   term     := rational | [rational "*"] factor ("*" factor)* ["D" index]
///   factor   := "e^{" integer "*" var ["^" power] "}" | var ["^" integer]
///   var      := ("x"|"y") index
///   rational := integer ["/" positive-integer]
///
/// Whitespace is insignificant.
Element parseElement(const std::string& src, SigPtr sig);

/// Canonical text; round-trips through parseElement.
std::string printElement(const Element& e);

std::string printMonomial(const Monomial& m, const AlgebraSignature& sig);

} // namespace lieexp

#endif
