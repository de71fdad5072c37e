#ifndef LIEEXP_MONOMIAL_HPP
#define LIEEXP_MONOMIAL_HPP

#include <compare>
#include <map>
#include <utility>

#include "lieexp/rational.hpp"
#include "lieexp/signature.hpp"

namespace lieexp {

/// (variable, allowed power) -> exponential coefficient a in e^{a x_v^i}.
using ExpMap = std::map<std::pair<int, int>, long long>;
/// variable -> polynomial power.
using PolyMap = std::map<int, long long>;

constexpr int kNoDeriv = -1;

/// One basis term c * e^{a_11 x_1^{i_11}} ... x_1^{j_1} ... [d_t].
/// Absent map entries mean exponent zero; maps never store zeros.
struct Monomial {
  Rat coeff = 1;
  ExpMap exp;
  PolyMap poly;
  int deriv = kNoDeriv; // 0-based variable index, kNoDeriv if absent

  Monomial() = default;
  explicit Monomial(Rat c) : coeff(std::move(c)) {}

  long long expCoeff(int v, int power) const {
    auto it = exp.find({v, power});
    return it == exp.end() ? 0 : it->second;
  }
  long long polyPower(int v) const {
    auto it = poly.find(v);
    return it == poly.end() ? 0 : it->second;
  }

  void setExpCoeff(int v, int power, long long a) {
    if (a == 0) exp.erase({v, power});
    else exp[{v, power}] = a;
  }
  void setPolyPower(int v, long long j) {
    if (j == 0) poly.erase(v);
    else poly[v] = j;
  }

  bool isIdentity() const { return exp.empty() && poly.empty() && deriv == kNoDeriv; }

  /// Basis key: everything except the coefficient.
  struct Key {
    ExpMap exp;
    PolyMap poly;
    int deriv;
    auto operator<=>(const Key&) const = default;
  };
  Key key() const { return Key{exp, poly, deriv}; }

  /// Product of the function parts; derivation slots must not collide.
  friend Monomial operator*(const Monomial& a, const Monomial& b);
};

/// Validates a monomial against the signature's constraints.
void validateMonomial(const Monomial& m, const AlgebraSignature& sig);

/// Flattened comparison vector: exponential coefficients in slot order,
/// then polynomial powers, then the derivation index (Witt side) --
/// the tuple both lexicographic orders compare.
std::vector<long long> orderVector(const Monomial& m, const AlgebraSignature& sig);

/// Three-way comparison in the signature's lexicographic order
/// (>_o for Witt-type, >_h for Poisson-type families).
std::strong_ordering compareMonomials(const Monomial& a, const Monomial& b,
                                      const AlgebraSignature& sig);

} // namespace lieexp

#endif
