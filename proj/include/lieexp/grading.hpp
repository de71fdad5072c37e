#ifndef LIEEXP_GRADING_HPP
#define LIEEXP_GRADING_HPP

#include <map>
#include <vector>

#include "lieexp/element.hpp"

namespace lieexp {

/// Exponential multi-index (a_11,...,a_nr) resp. (a_1,...,a_n,b_1,...,b_n).
using GradeKey = std::vector<long long>;

/// The exponential coefficient vector of a monomial; polynomial powers and
/// the derivation slot do not enter the gradation.
GradeKey gradeKey(const Monomial& m, const AlgebraSignature& sig);

/// Partition of terms by grade key; parts sum back to l.
std::map<GradeKey, Element> decompose(const Element& l);

/// Number of distinct homogeneous components (w_h on the Witt side).
size_t statWh(const Element& l);
/// Same count under its Poisson-side name h_h.
size_t statHh(const Element& l);

/// Term count of the g-component, 0 if absent.
size_t statT(const Element& l, const GradeKey& g);

/// Highest polynomial power occurring in any term (hp on the Witt side,
/// lp on the Poisson side); a term without polynomial part contributes 0.
long long statHp(const Element& l);
long long statLp(const Element& l);

std::strong_ordering compareO(const Monomial& a, const Monomial& b,
                              const AlgebraSignature& sig);
std::strong_ordering compareH(const Monomial& a, const Monomial& b,
                              const AlgebraSignature& sig);

} // namespace lieexp

#endif
