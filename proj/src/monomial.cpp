#include "lieexp/monomial.hpp"

namespace lieexp {

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.deriv != kNoDeriv && b.deriv != kNoDeriv)
    throw SignatureViolation("cannot multiply two derivation-carrying monomials");
  Monomial r;
  r.coeff = a.coeff * b.coeff;
  r.exp = a.exp;
  for (const auto& [k, v] : b.exp) {
    long long sum = r.expCoeff(k.first, k.second) + v;
    r.setExpCoeff(k.first, k.second, sum);
  }
  r.poly = a.poly;
  for (const auto& [v, j] : b.poly) r.setPolyPower(v, r.polyPower(v) + j);
  r.deriv = a.deriv != kNoDeriv ? a.deriv : b.deriv;
  return r;
}

void validateMonomial(const Monomial& m, const AlgebraSignature& sig) {
  if (m.coeff == 0) throw SignatureViolation("zero-coefficient monomial");
  for (const auto& [k, a] : m.exp) {
    if (a == 0) throw SignatureViolation("stored zero exponential coefficient");
    if (k.first < 0 || k.first >= sig.numVars())
      throw SignatureViolation("exponential factor names an unknown variable");
    if (!sig.isExpPowerAllowed(k.first, k.second))
      throw SignatureViolation("exponential power " + std::to_string(k.second) +
                               " not allowed for " + varName(sig, k.first) + " in " +
                               sig.name());
  }
  for (const auto& [v, j] : m.poly) {
    if (j == 0) throw SignatureViolation("stored zero polynomial power");
    if (v < 0 || v >= sig.numVars())
      throw SignatureViolation("polynomial factor names an unknown variable");
    if (!sig.polynomialsAllowed())
      throw SignatureViolation(sig.name() + " carries no polynomial parts");
    if (sig.polyDomain() == PolyDomain::NATURALS && j < 0)
      throw SignatureViolation("negative polynomial power in " + sig.name());
  }
  if (sig.carriesDerivations()) {
    if (m.deriv == kNoDeriv)
      throw MissingDerivationSlot("Witt-type monomial needs a derivation slot");
    if (m.deriv < 0 || m.deriv >= sig.numVars())
      throw SignatureViolation("derivation index out of range");
  } else if (m.deriv != kNoDeriv) {
    throw SignatureViolation(sig.name() + " elements carry no derivation slot");
  }
}

std::vector<long long> orderVector(const Monomial& m, const AlgebraSignature& sig) {
  std::vector<long long> v;
  v.reserve(sig.gradeKeyLength() + sig.numVars() + 1);
  for (int var = 0; var < sig.numVars(); ++var)
    for (int power : sig.expPowersFor(var)) v.push_back(m.expCoeff(var, power));
  for (int var = 0; var < sig.numVars(); ++var) v.push_back(m.polyPower(var));
  if (sig.carriesDerivations()) v.push_back(m.deriv);
  return v;
}

std::strong_ordering compareMonomials(const Monomial& a, const Monomial& b,
                                      const AlgebraSignature& sig) {
  return orderVector(a, sig) <=> orderVector(b, sig);
}

} // namespace lieexp
