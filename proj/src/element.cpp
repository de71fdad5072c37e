#include "lieexp/element.hpp"

#include <algorithm>
#include <map>

namespace lieexp {

Element Element::fromMonomial(Monomial m, SigPtr sig) {
  return normalize({std::move(m)}, std::move(sig));
}

const Monomial& Element::leading() const {
  if (terms_.empty()) throw EmptyElement("zero element has no leading term");
  return terms_.front();
}

bool Element::operator==(const Element& o) const {
  if (sig_ && o.sig_) requireSameSignature(sig_, o.sig_);
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coeff != o.terms_[i].coeff) return false;
    if (terms_[i].key() != o.terms_[i].key()) return false;
  }
  return true;
}

Element normalize(std::vector<Monomial> raw, SigPtr sig) {
  if (!sig) throw SignatureViolation("normalize needs a signature");
  std::map<Monomial::Key, Rat> merged;
  for (auto& m : raw) {
    if (m.coeff == 0) continue;
    validateMonomial(m, *sig);
    merged[m.key()] += m.coeff;
  }
  Element e(sig);
  e.terms_.reserve(merged.size());
  for (auto& [key, c] : merged) {
    if (c == 0) continue;
    Monomial m;
    m.coeff = std::move(c);
    m.exp = key.exp;
    m.poly = key.poly;
    m.deriv = key.deriv;
    e.terms_.push_back(std::move(m));
  }
  std::sort(e.terms_.begin(), e.terms_.end(), [&](const Monomial& a, const Monomial& b) {
    return compareMonomials(a, b, *sig) == std::strong_ordering::greater;
  });
  return e;
}

Element add(const Element& a, const Element& b) {
  requireSameSignature(a.signature(), b.signature());
  std::vector<Monomial> raw = a.terms();
  raw.insert(raw.end(), b.terms().begin(), b.terms().end());
  return normalize(std::move(raw), a.signature());
}

Element sub(const Element& a, const Element& b) { return add(a, scale(-1, b)); }

Element scale(const Rat& c, const Element& a) {
  if (c == 0) return Element::zero(a.signature());
  std::vector<Monomial> raw = a.terms();
  for (auto& m : raw) m.coeff *= c;
  return normalize(std::move(raw), a.signature());
}

Element multiply(const Element& a, const Element& b) {
  requireSameSignature(a.signature(), b.signature());
  std::vector<Monomial> raw;
  raw.reserve(a.size() * b.size());
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) raw.push_back(s * t);
  return normalize(std::move(raw), a.signature());
}

void partialInto(int v, const Monomial& m, std::vector<Monomial>& out) {
  // chain rule on each e^{a x_v^i}: a*i*x_v^{i-1} times the monomial
  for (const auto& [k, a] : m.exp) {
    if (k.first != v) continue;
    Monomial d = m;
    d.coeff *= Rat(a) * k.second;
    d.setPolyPower(v, d.polyPower(v) + k.second - 1);
    out.push_back(std::move(d));
  }
  // power rule on x_v^j
  long long j = m.polyPower(v);
  if (j != 0) {
    Monomial d = m;
    d.coeff *= j;
    d.setPolyPower(v, j - 1);
    out.push_back(std::move(d));
  }
}

Element partial(int v, const Monomial& m, const SigPtr& sig) {
  if (v < 0 || v >= sig->numVars())
    throw SignatureViolation("partial: variable index out of range");
  std::vector<Monomial> raw;
  partialInto(v, m, raw);
  return normalize(std::move(raw), sig);
}

Element partial(int v, const Element& a) {
  if (v < 0 || v >= a.signature()->numVars())
    throw SignatureViolation("partial: variable index out of range");
  std::vector<Monomial> raw;
  for (const auto& m : a.terms()) partialInto(v, m, raw);
  return normalize(std::move(raw), a.signature());
}

bool equal(const Element& a, const Element& b) {
  requireSameSignature(a.signature(), b.signature());
  return a == b;
}

} // namespace lieexp
