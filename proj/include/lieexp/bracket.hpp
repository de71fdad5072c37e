#ifndef LIEEXP_BRACKET_HPP
#define LIEEXP_BRACKET_HPP

#include "lieexp/element.hpp"

namespace lieexp {

enum class BracketKind { WITT, POISSON };

inline BracketKind bracketKind(const AlgebraSignature& sig) {
  return sig.isWittType() ? BracketKind::WITT : BracketKind::POISSON;
}

/// [f d_p, g d_q] = f d_p(g) d_q - g d_q(f) d_p, extended bilinearly.
Element wittBracket(const Element& a, const Element& b);

/// {f,g} = sum_i (df/dx_i dg/dy_i - df/dy_i dg/dx_i), extended bilinearly.
/// Constants may appear in the result; quotient projection is the caller's.
Element poissonBracket(const Element& f, const Element& g);

/// Dispatches on the signature's bracket kind.
Element bracket(const Element& a, const Element& b);

/// Serial reference path, kept independent of the OpenMP kernel.
Element bracketSerial(const Element& a, const Element& b);

/// Term-pair count above which bracket() goes through the OpenMP kernel.
extern size_t bracketParallelThreshold;

/// [a,[b,c]] + [b,[c,a]] + [c,[a,b]]; zero when Jacobi holds.
Element jacobiResidual(const Element& a, const Element& b, const Element& c);

/// -sum_i du/dy_i d_{x_i} + sum_i du/dx_i d_{y_i} in W(2n),
/// with y_i identified with x_{n+i}.
Element hamiltonianField(const Element& u);

/// Signature of hamiltonianField's output for a given Poisson signature.
SigPtr hamiltonianTargetSignature(const AlgebraSignature& poissonSig);

/// sum_t d(f_t)/dx_t for a = sum_t f_t d_t; a scalar function.
Element divergence(const Element& a);

bool isDivergenceFree(const Element& a);

} // namespace lieexp

#endif
