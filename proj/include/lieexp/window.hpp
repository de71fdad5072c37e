#ifndef LIEEXP_WINDOW_HPP
#define LIEEXP_WINDOW_HPP

#include <map>
#include <optional>
#include <vector>

#include "lieexp/element.hpp"

namespace lieexp {

/// Finite slice of an infinite-dimensional algebra: polynomial powers in
/// [minPolyPower, maxPolyPower], exponential coefficients in [-maxExpCoeff,
/// maxExpCoeff].
struct TruncationCaps {
  long long maxPolyPower = 0;
  long long minPolyPower = 0;
  long long maxExpCoeff = 0;

  static TruncationCaps forSig(const AlgebraSignature& sig, long long polyCap,
                               long long expCap) {
    TruncationCaps caps;
    caps.maxPolyPower = polyCap;
    caps.minPolyPower = sig.polyDomain() == PolyDomain::NATURALS ? 0 : -polyCap;
    caps.maxExpCoeff = expCap;
    return caps;
  }
};

/// Enumerated basis slice with coordinate lookup.
class Window {
public:
  /// Enumerates every basis monomial inside the caps, in a fixed
  /// deterministic order.  Excludes the identity monomial when the
  /// signature quotients constants away, and for H(n) whose basis omits
  /// constants.  Throws CapTooLarge beyond maxSize.
  Window(SigPtr sig, TruncationCaps caps, size_t maxSize = defaultMaxSize());

  static size_t defaultMaxSize(); // LIEEXP_MAX_WINDOW, default 200000

  const SigPtr& signature() const { return sig_; }
  const TruncationCaps& caps() const { return caps_; }
  size_t size() const { return basis_.size(); }
  const std::vector<Monomial>& basis() const { return basis_; }

  Element basisElement(size_t i) const;

  std::optional<size_t> indexOf(const Monomial::Key& key) const;
  bool contains(const Monomial& m) const;
  bool contains(const Element& e) const;

  /// Dense coordinates over the window basis; nullopt when a term falls
  /// outside the window.
  std::optional<std::vector<Rat>> coordinates(const Element& e) const;

  Element fromCoordinates(const std::vector<Rat>& coords) const;

private:
  SigPtr sig_;
  TruncationCaps caps_;
  std::vector<Monomial> basis_;
  std::map<Monomial::Key, size_t> index_;
};

/// Incremental reduced row echelon form over exact rationals; used for
/// span membership and rank tracking.
class RationalSpan {
public:
  explicit RationalSpan(size_t dim) : dim_(dim) {}

  size_t dim() const { return dim_; }
  size_t rank() const { return rows_.size(); }

  /// Reduces v against the current rows, in place.
  void reduce(std::vector<Rat>& v) const;

  /// Adds v to the span; returns true when the rank grew.
  bool insert(std::vector<Rat> v);

  bool containsVector(std::vector<Rat> v) const;

  const std::vector<std::vector<Rat>>& rows() const { return rows_; }
  const std::vector<size_t>& pivots() const { return pivots_; }

  /// Basis of the null space of the matrix whose rows were inserted,
  /// i.e. vectors w with w orthogonal to nothing -- here: solutions of
  /// A w = 0 where the inserted rows are the rows of A.
  std::vector<std::vector<Rat>> nullspace() const;

private:
  size_t dim_;
  std::vector<std::vector<Rat>> rows_;   // in RREF, sorted by pivot
  std::vector<size_t> pivots_;
};

} // namespace lieexp

#endif
