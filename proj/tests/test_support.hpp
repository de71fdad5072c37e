#ifndef LIEEXP_TEST_SUPPORT_HPP
#define LIEEXP_TEST_SUPPORT_HPP

#include <random>

#include "lieexp/bracket.hpp"
#include "lieexp/text.hpp"
#include "lieexp/window.hpp"

namespace lieexp::test {

inline Element parse(const std::string& src, const SigPtr& sig) {
  return parseElement(src, sig);
}

inline SigPtr sigOf(const std::string& name) { return AlgebraSignature::parse(name); }

/// Random element with terms drawn from a cap window, coefficients in
/// [-4,4]\{0}; may normalize to zero.
inline Element randomElement(const Window& window, std::mt19937_64& rng,
                             size_t maxTerms = 3) {
  std::uniform_int_distribution<size_t> pickCount(1, maxTerms);
  std::uniform_int_distribution<size_t> pickBasis(0, window.size() - 1);
  std::uniform_int_distribution<int> pickCoeff(1, 8);
  std::vector<Monomial> raw;
  size_t count = pickCount(rng);
  for (size_t i = 0; i < count; ++i) {
    Monomial m = window.basis()[pickBasis(rng)];
    int c = pickCoeff(rng);
    m.coeff = c <= 4 ? c : 4 - c;
    raw.push_back(std::move(m));
  }
  return normalize(std::move(raw), window.signature());
}

inline Element randomNonzero(const Window& window, std::mt19937_64& rng,
                             size_t maxTerms = 3) {
  Element e;
  do {
    e = randomElement(window, rng, maxTerms);
  } while (e.isZero());
  return e;
}

} // namespace lieexp::test

#endif
