#include "lieexp/window.hpp"

#include <algorithm>
#include <cstdlib>

namespace lieexp {

size_t Window::defaultMaxSize() {
  if (const char* env = std::getenv("LIEEXP_MAX_WINDOW")) {
    long long v = std::atoll(env);
    if (v > 0) return (size_t)v;
  }
  return 200000;
}

Window::Window(SigPtr sig, TruncationCaps caps, size_t maxSize)
    : sig_(std::move(sig)), caps_(caps) {
  const auto& s = *sig_;
  if (caps.maxPolyPower < caps.minPolyPower)
    throw CapTooLarge("empty polynomial power range");
  if (caps.maxExpCoeff < 0) throw CapTooLarge("negative exponential cap");

  // slot layout: exponential slots then polynomial slots then derivation
  struct Slot { bool isExp; int var; int power; };
  std::vector<Slot> slots;
  for (int v = 0; v < s.numVars(); ++v)
    for (int power : s.expPowersFor(v)) slots.push_back({true, v, power});
  if (s.polynomialsAllowed())
    for (int v = 0; v < s.numVars(); ++v) slots.push_back({false, v, 0});

  // size guard before enumeration
  double estimate = s.carriesDerivations() ? (double)s.numVars() : 1.0;
  for (const auto& slot : slots) {
    double choices = slot.isExp ? (double)(2 * caps.maxExpCoeff + 1)
                                : (double)(caps.maxPolyPower - caps.minPolyPower + 1);
    estimate *= choices;
    if (estimate > (double)maxSize * 4)
      throw CapTooLarge("cap window exceeds the configured size bound");
  }

  const bool dropIdentity = s.quotient || s.family == Family::H_POLY;

  std::vector<long long> assignment(slots.size(), 0);
  auto emit = [&](const Monomial& m) {
    if (dropIdentity && m.isIdentity()) return;
    if (basis_.size() >= maxSize)
      throw CapTooLarge("cap window exceeds the configured size bound");
    index_[m.key()] = basis_.size();
    basis_.push_back(m);
  };

  // odometer enumeration over slot values
  size_t k = 0;
  std::vector<long long> lo(slots.size()), hi(slots.size());
  for (size_t i = 0; i < slots.size(); ++i) {
    lo[i] = slots[i].isExp ? -caps.maxExpCoeff : caps.minPolyPower;
    hi[i] = slots[i].isExp ? caps.maxExpCoeff : caps.maxPolyPower;
    assignment[i] = lo[i];
  }
  (void)k;
  for (;;) {
    Monomial m;
    for (size_t i = 0; i < slots.size(); ++i) {
      if (slots[i].isExp) m.setExpCoeff(slots[i].var, slots[i].power, assignment[i]);
      else m.setPolyPower(slots[i].var, assignment[i]);
    }
    if (s.carriesDerivations()) {
      for (int t = 0; t < s.numVars(); ++t) {
        Monomial md = m;
        md.deriv = t;
        emit(md);
      }
    } else {
      emit(m);
    }
    // advance odometer
    size_t i = 0;
    for (; i < slots.size(); ++i) {
      if (assignment[i] < hi[i]) { ++assignment[i]; break; }
      assignment[i] = lo[i];
    }
    if (i == slots.size()) break;
    if (slots.empty()) break;
  }

  // keep a stable, order-respecting layout
  std::sort(basis_.begin(), basis_.end(), [&](const Monomial& a, const Monomial& b) {
    return compareMonomials(a, b, s) == std::strong_ordering::greater;
  });
  index_.clear();
  for (size_t i = 0; i < basis_.size(); ++i) index_[basis_[i].key()] = i;
}

Element Window::basisElement(size_t i) const {
  return Element::fromMonomial(basis_.at(i), sig_);
}

std::optional<size_t> Window::indexOf(const Monomial::Key& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Window::contains(const Monomial& m) const {
  return index_.count(m.key()) > 0;
}

bool Window::contains(const Element& e) const {
  for (const auto& m : e.terms())
    if (!contains(m)) return false;
  return true;
}

std::optional<std::vector<Rat>> Window::coordinates(const Element& e) const {
  std::vector<Rat> coords(size(), Rat(0));
  for (const auto& m : e.terms()) {
    auto idx = indexOf(m.key());
    if (!idx) return std::nullopt;
    coords[*idx] = m.coeff;
  }
  return coords;
}

Element Window::fromCoordinates(const std::vector<Rat>& coords) const {
  std::vector<Monomial> raw;
  for (size_t i = 0; i < coords.size() && i < basis_.size(); ++i) {
    if (coords[i] == 0) continue;
    Monomial m = basis_[i];
    m.coeff = coords[i];
    raw.push_back(std::move(m));
  }
  return normalize(std::move(raw), sig_);
}

void RationalSpan::reduce(std::vector<Rat>& v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Rat& c = v[pivots_[r]];
    if (c == 0) continue;
    Rat factor = c; // rows are pivot-normalized to 1
    const auto& row = rows_[r];
    for (size_t j = pivots_[r]; j < dim_; ++j)
      if (row[j] != 0) v[j] -= factor * row[j];
  }
}

bool RationalSpan::insert(std::vector<Rat> v) {
  if (v.size() != dim_) throw Error("span vector has wrong dimension");
  reduce(v);
  size_t pivot = dim_;
  for (size_t j = 0; j < dim_; ++j)
    if (v[j] != 0) { pivot = j; break; }
  if (pivot == dim_) return false;
  Rat inv = Rat(1) / v[pivot];
  for (size_t j = pivot; j < dim_; ++j)
    if (v[j] != 0) v[j] *= inv;
  // back-substitute into existing rows
  for (size_t r = 0; r < rows_.size(); ++r) {
    Rat c = rows_[r][pivot];
    if (c == 0) continue;
    for (size_t j = pivot; j < dim_; ++j)
      if (v[j] != 0) rows_[r][j] -= c * v[j];
  }
  size_t at = 0;
  while (at < pivots_.size() && pivots_[at] < pivot) ++at;
  rows_.insert(rows_.begin() + (long)at, std::move(v));
  pivots_.insert(pivots_.begin() + (long)at, pivot);
  return true;
}

bool RationalSpan::containsVector(std::vector<Rat> v) const {
  reduce(v);
  for (const auto& c : v)
    if (c != 0) return false;
  return true;
}

std::vector<std::vector<Rat>> RationalSpan::nullspace() const {
  std::vector<bool> isPivot(dim_, false);
  for (size_t p : pivots_) isPivot[p] = true;
  std::vector<std::vector<Rat>> basis;
  for (size_t freeCol = 0; freeCol < dim_; ++freeCol) {
    if (isPivot[freeCol]) continue;
    std::vector<Rat> v(dim_, Rat(0));
    v[freeCol] = 1;
    for (size_t r = 0; r < rows_.size(); ++r) v[pivots_[r]] = -rows_[r][freeCol];
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace lieexp
