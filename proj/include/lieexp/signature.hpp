#ifndef LIEEXP_SIGNATURE_HPP
#define LIEEXP_SIGNATURE_HPP

#include <memory>
#include <string>
#include <vector>

#include "lieexp/errors.hpp"

namespace lieexp {

enum class Family {
  W,            // W(n), polynomial Witt algebra
  W_EXP,        // W(n,i*), exponential-polynomial Witt algebra
  W_PLUS1,      // W+(1)
  H_POLY,       // H(n), polynomial Poisson algebra
  H_EXP_FULL,   // H(n,n), exponentials e^{a x_k}, e^{b y_k}, Laurent powers
  H_EXP_ONLY,   // H(n,0), pure exponentials
  H_EXP_POWERS, // H(n,n,i*)
  S_DIVFREE,    // divergence-free subalgebra of W(m)
};

enum class PolyDomain { NATURALS, INTEGERS };

/// Which algebra we are working in: family, arity, and the allowed
/// exponential powers i_{k1} < ... < i_{kr} for each variable.
///
/// Variables are indexed 0..numVars()-1.  For Poisson families the x-side
/// occupies 0..n-1 and the y-side n..2n-1.
class AlgebraSignature {
public:
  Family family = Family::W;
  int n = 1;                                // number of x-variables
  std::vector<std::vector<int>> expPowers;  // per x-variable (mirrored to y-side)
  bool quotient = false;                    // Hbar: constants projected away
  bool functionSpace = false;               // scalar functions, no derivation slot

  AlgebraSignature() = default;
  AlgebraSignature(Family f, int n_, std::vector<std::vector<int>> powers = {},
                   bool quotient_ = false);

  static std::shared_ptr<const AlgebraSignature> make(
      Family f, int n, std::vector<std::vector<int>> powers = {},
      bool quotient = false);

  bool isWittType() const {
    return family == Family::W || family == Family::W_EXP ||
           family == Family::W_PLUS1 || family == Family::S_DIVFREE;
  }
  bool isPoissonType() const { return !isWittType(); }

  int numVars() const { return isWittType() ? n : 2 * n; }

  bool carriesDerivations() const { return isWittType() && !functionSpace; }

  PolyDomain polyDomain() const {
    switch (family) {
      case Family::H_EXP_FULL:
      case Family::H_EXP_POWERS:
        return PolyDomain::INTEGERS;
      default:
        return PolyDomain::NATURALS;
    }
  }

  /// H(n,0) carries no polynomial parts at all.
  bool polynomialsAllowed() const { return family != Family::H_EXP_ONLY; }

  /// Allowed exponential powers for variable v (empty when none).
  const std::vector<int>& expPowersFor(int v) const;

  /// Length of the grade key: total number of (variable, power) slots.
  int gradeKeyLength() const;

  bool isExpPowerAllowed(int v, int power) const;

  std::string name() const;

  /// Same algebra, but elements are scalar functions (divergence results).
  std::shared_ptr<const AlgebraSignature> scalarized() const;

  bool operator==(const AlgebraSignature& o) const {
    return family == o.family && n == o.n && expPowers == o.expPowers &&
           quotient == o.quotient && functionSpace == o.functionSpace;
  }
  bool operator!=(const AlgebraSignature& o) const { return !(*this == o); }

  /// "W(2)", "W(1; x1:[1,2])", "Hbar(1,1)", ... round-trips through name().
  static std::shared_ptr<const AlgebraSignature> parse(const std::string& text);
};

using SigPtr = std::shared_ptr<const AlgebraSignature>;

inline void requireSameSignature(const SigPtr& a, const SigPtr& b) {
  if (!a || !b || *a != *b)
    throw SignatureMismatch("elements come from different algebras");
}

/// Variable display name: x1..xn, then y1..yn on the Poisson side.
std::string varName(const AlgebraSignature& sig, int v);

} // namespace lieexp

#endif
