#ifndef LIEEXP_ELEMENT_HPP
#define LIEEXP_ELEMENT_HPP

#include <vector>

#include "lieexp/monomial.hpp"

namespace lieexp {

/// Canonical sparse sum of monomials: no duplicate keys, no zero
/// coefficients, terms sorted descending in the signature's order.
/// Immutable after construction.
class Element {
public:
  Element() = default;
  explicit Element(SigPtr sig) : sig_(std::move(sig)) {}

  static Element zero(SigPtr sig) { return Element(std::move(sig)); }
  static Element fromMonomial(Monomial m, SigPtr sig);

  const SigPtr& signature() const { return sig_; }
  const std::vector<Monomial>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  /// Leading (maximal) term; element must be nonzero.
  const Monomial& leading() const;

  bool operator==(const Element& o) const;
  bool operator!=(const Element& o) const { return !(*this == o); }

  friend Element normalize(std::vector<Monomial> raw, SigPtr sig);

private:
  SigPtr sig_;
  std::vector<Monomial> terms_;
};

/// Merges duplicates, drops zeros, sorts descending, validates against sig.
Element normalize(std::vector<Monomial> raw, SigPtr sig);

Element add(const Element& a, const Element& b);
Element sub(const Element& a, const Element& b);
Element scale(const Rat& c, const Element& a);
Element multiply(const Element& a, const Element& b);

/// d/dx_v of a single monomial (product rule over e^{a x^i} factors plus
/// the polynomial power rule); the derivation slot rides along untouched.
void partialInto(int v, const Monomial& m, std::vector<Monomial>& out);
Element partial(int v, const Monomial& m, const SigPtr& sig);
Element partial(int v, const Element& a);

bool equal(const Element& a, const Element& b);

} // namespace lieexp

#endif
