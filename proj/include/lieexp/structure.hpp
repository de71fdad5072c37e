#ifndef LIEEXP_STRUCTURE_HPP
#define LIEEXP_STRUCTURE_HPP

#include <functional>

#include "lieexp/bracket.hpp"
#include "lieexp/window.hpp"

namespace lieexp {

/// Drops the constant term: projection onto the centerless quotient.
Element quotientProject(const Element& l);

/// Applies the quotient projection when the signature asks for it.
Element projectIfQuotient(const Element& l);

/// Spanning set of {z in window : [z, b] = 0 for every window basis b},
/// computed by exact kernel intersection.
std::vector<Element> centerProbe(const Window& window);

/// Scalar lambda with bracket(candidate, b) = lambda * b, if any (zero
/// counts); nullopt when the bracket is not a multiple of b.
std::optional<Rat> adEigenvalue(const Element& candidate, const Element& basisMono);

/// True iff bracket(candidate, b) is a scalar multiple of b for every
/// window basis monomial b.  Eigenvalues are exact; quotient signatures
/// compare modulo constants.
bool isAdDiagonal(const Element& candidate, const Window& window);

/// All window basis monomials passing isAdDiagonal.
std::vector<Element> findAdDiagonal(const Window& window);

/// A candidate linear map given by images of window basis monomials.
struct LinearMapTable {
  std::map<Monomial::Key, Element> assignments;

  Element apply(const Element& e, const SigPtr& sig) const; // linear extension

  static LinearMapTable fromFunction(const Window& window,
                                     const std::function<Element(const Monomial&)>& f);
  static LinearMapTable identity(const Window& window);
  static LinearMapTable ad(const Element& z, const Window& window);
  static LinearMapTable scalarDerivation(const Window& window);
};

struct DerivationResidual {
  Monomial a, b;
  Element residual;
};

struct DerivationReport {
  size_t pairsChecked = 0;
  size_t pairsSkipped = 0; // bracket or image left the window
  std::vector<DerivationResidual> failures;
  bool passed() const { return failures.empty(); }
};

/// D([a,b]) - [D(a),b] - [a,D(b)] over window basis pairs whose brackets
/// and images stay inside D's domain; out-of-window pairs are skipped and
/// counted.
DerivationReport checkDerivation(const LinearMapTable& D, const Window& window,
                                 size_t maxPairs = 0);

/// S(x^a y^b) = (2 - sum a_i - sum b_i) x^a y^b on polynomial Poisson
/// monomials; exponential factors are rejected.
Element scalarDerivationApply(const Monomial& m, const SigPtr& sig);

struct AutomorphismVerdict {
  bool relationHolds = false; // [theta(d), theta(xd)] = theta(d)
  bool shapeOk = false;       // theta(xd) = alpha xd + beta d, alpha != 0
  bool accepted() const { return relationHolds && shapeOk; }
};

/// Checks a candidate image pair (theta(d), theta(xd)) in W+(1) against
/// the leading-term constraint on automorphisms.
AutomorphismVerdict wplusAutomorphismCheck(const Element& thetaD,
                                           const Element& thetaXD);

} // namespace lieexp

#endif
