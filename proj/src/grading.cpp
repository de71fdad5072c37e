#include "lieexp/grading.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace lieexp {

GradeKey gradeKey(const Monomial& m, const AlgebraSignature& sig) {
  GradeKey key;
  key.reserve(sig.gradeKeyLength());
  for (int v = 0; v < sig.numVars(); ++v)
    for (int power : sig.expPowersFor(v)) key.push_back(m.expCoeff(v, power));
  return key;
}

std::map<GradeKey, Element> decompose(const Element& l) {
  std::map<GradeKey, std::vector<Monomial>> parts;
  for (const auto& m : l.terms()) parts[gradeKey(m, *l.signature())].push_back(m);
  std::map<GradeKey, Element> out;
  for (auto& [key, raw] : parts) out.emplace(key, normalize(std::move(raw), l.signature()));
  return out;
}

size_t statWh(const Element& l) {
  std::set<GradeKey> keys;
  for (const auto& m : l.terms()) keys.insert(gradeKey(m, *l.signature()));
  return keys.size();
}

size_t statHh(const Element& l) { return statWh(l); }

size_t statT(const Element& l, const GradeKey& g) {
  size_t count = 0;
  for (const auto& m : l.terms())
    if (gradeKey(m, *l.signature()) == g) ++count;
  return count;
}

long long statHp(const Element& l) {
  if (l.isZero()) throw EmptyElement("hp/lp of the zero element is undefined");
  long long best = std::numeric_limits<long long>::min();
  for (const auto& m : l.terms()) {
    long long termMax = 0; // empty polynomial part is x^0
    if (!m.poly.empty()) {
      termMax = m.poly.begin()->second;
      for (const auto& [v, j] : m.poly) termMax = std::max(termMax, j);
    }
    best = std::max(best, termMax);
  }
  return best;
}

long long statLp(const Element& l) { return statHp(l); }

std::strong_ordering compareO(const Monomial& a, const Monomial& b,
                              const AlgebraSignature& sig) {
  if (!sig.isWittType()) throw SignatureMismatch(">_o is defined on Witt-type algebras");
  return compareMonomials(a, b, sig);
}

std::strong_ordering compareH(const Monomial& a, const Monomial& b,
                              const AlgebraSignature& sig) {
  if (!sig.isPoissonType()) throw SignatureMismatch(">_h is defined on Poisson-type algebras");
  return compareMonomials(a, b, sig);
}

} // namespace lieexp
