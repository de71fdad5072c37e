#include "lieexp/structure.hpp"

#include <algorithm>

namespace lieexp {

Element quotientProject(const Element& l) {
  std::vector<Monomial> raw;
  for (const auto& m : l.terms())
    if (!m.isIdentity()) raw.push_back(m);
  return normalize(std::move(raw), l.signature());
}

Element projectIfQuotient(const Element& l) {
  if (l.signature() && l.signature()->quotient) return quotientProject(l);
  return l;
}

std::vector<Element> centerProbe(const Window& window) {
  const size_t dim = window.size();
  // kernel basis as coordinate vectors, initially the whole window
  std::vector<std::vector<Rat>> kernel(dim);
  for (size_t i = 0; i < dim; ++i) {
    kernel[i].assign(dim, Rat(0));
    kernel[i][i] = 1;
  }

  for (size_t bi = 0; bi < window.size() && !kernel.empty(); ++bi) {
    Element b = window.basisElement(bi);

    // images of the current kernel basis under ad(.)(b)
    std::vector<Element> images(kernel.size());
    for (size_t k = 0; k < kernel.size(); ++k)
      images[k] = projectIfQuotient(bracket(window.fromCoordinates(kernel[k]), b));

    // column index over result monomials
    std::map<Monomial::Key, size_t> col;
    for (const auto& img : images)
      for (const auto& m : img.terms()) col.emplace(m.key(), col.size());
    if (col.empty()) continue; // every image vanished, no constraint

    // left null space of the image matrix via augmented elimination
    const size_t width = col.size() + kernel.size();
    std::vector<std::vector<Rat>> rref;
    std::vector<size_t> pivots;
    std::vector<std::vector<Rat>> newKernel;
    for (size_t k = 0; k < kernel.size(); ++k) {
      std::vector<Rat> row(width, Rat(0));
      for (const auto& m : images[k].terms()) row[col[m.key()]] = m.coeff;
      row[col.size() + k] = 1;
      for (size_t r = 0; r < rref.size(); ++r) {
        const Rat c = row[pivots[r]];
        if (c == 0) continue;
        for (size_t j = 0; j < width; ++j)
          if (rref[r][j] != 0) row[j] -= c * rref[r][j];
      }
      size_t pivot = col.size();
      for (size_t j = 0; j < col.size(); ++j)
        if (row[j] != 0) { pivot = j; break; }
      if (pivot == col.size()) {
        // image part eliminated: augmented part combines kernel vectors
        std::vector<Rat> combo(window.size(), Rat(0));
        for (size_t k2 = 0; k2 < kernel.size(); ++k2) {
          const Rat& w = row[col.size() + k2];
          if (w == 0) continue;
          for (size_t j = 0; j < window.size(); ++j)
            if (kernel[k2][j] != 0) combo[j] += w * kernel[k2][j];
        }
        newKernel.push_back(std::move(combo));
      } else {
        Rat inv = Rat(1) / row[pivot];
        for (auto& x : row)
          if (x != 0) x *= inv;
        rref.push_back(std::move(row));
        pivots.push_back(pivot);
      }
    }
    kernel = std::move(newKernel);
  }

  std::vector<Element> out;
  out.reserve(kernel.size());
  for (const auto& v : kernel) out.push_back(window.fromCoordinates(v));
  return out;
}

std::optional<Rat> adEigenvalue(const Element& candidate, const Element& basisMono) {
  Element r = projectIfQuotient(bracket(candidate, basisMono));
  if (r.isZero()) return Rat(0);
  if (r.size() != 1) return std::nullopt;
  const Monomial& bm = basisMono.leading();
  if (r.leading().key() != bm.key()) return std::nullopt;
  return r.leading().coeff / bm.coeff;
}

bool isAdDiagonal(const Element& candidate, const Window& window) {
  for (size_t i = 0; i < window.size(); ++i)
    if (!adEigenvalue(candidate, window.basisElement(i))) return false;
  return true;
}

std::vector<Element> findAdDiagonal(const Window& window) {
  std::vector<Element> out;
  for (size_t i = 0; i < window.size(); ++i) {
    Element candidate = window.basisElement(i);
    if (isAdDiagonal(candidate, window)) out.push_back(std::move(candidate));
  }
  return out;
}

Element LinearMapTable::apply(const Element& e, const SigPtr& sig) const {
  Element acc = Element::zero(sig);
  for (const auto& m : e.terms()) {
    Monomial unit = m;
    unit.coeff = 1;
    auto it = assignments.find(unit.key());
    if (it == assignments.end())
      throw OutOfWindow("linear map undefined on a required monomial");
    acc = add(acc, scale(m.coeff, it->second));
  }
  return acc;
}

LinearMapTable LinearMapTable::fromFunction(
    const Window& window, const std::function<Element(const Monomial&)>& f) {
  LinearMapTable table;
  for (const auto& m : window.basis()) {
    Monomial unit = m;
    unit.coeff = 1;
    table.assignments.emplace(unit.key(), f(unit));
  }
  return table;
}

LinearMapTable LinearMapTable::identity(const Window& window) {
  return fromFunction(window, [&](const Monomial& m) {
    return Element::fromMonomial(m, window.signature());
  });
}

LinearMapTable LinearMapTable::ad(const Element& z, const Window& window) {
  return fromFunction(window, [&](const Monomial& m) {
    return projectIfQuotient(bracket(z, Element::fromMonomial(m, window.signature())));
  });
}

LinearMapTable LinearMapTable::scalarDerivation(const Window& window) {
  return fromFunction(window, [&](const Monomial& m) {
    return scalarDerivationApply(m, window.signature());
  });
}

DerivationReport checkDerivation(const LinearMapTable& D, const Window& window,
                                 size_t maxPairs) {
  DerivationReport report;
  const SigPtr& sig = window.signature();
  for (size_t i = 0; i < window.size(); ++i) {
    for (size_t j = i + 1; j < window.size(); ++j) {
      if (maxPairs && report.pairsChecked + report.pairsSkipped >= maxPairs) return report;
      Element a = window.basisElement(i);
      Element b = window.basisElement(j);
      Element br = projectIfQuotient(bracket(a, b));
      bool inDomain = true;
      for (const auto& m : br.terms()) {
        Monomial unit = m;
        unit.coeff = 1;
        if (!D.assignments.count(unit.key())) { inDomain = false; break; }
      }
      if (!inDomain) {
        ++report.pairsSkipped;
        continue;
      }
      Element lhs = D.apply(br, sig);
      Element rhs = add(projectIfQuotient(bracket(D.apply(a, sig), b)),
                        projectIfQuotient(bracket(a, D.apply(b, sig))));
      Element residual = sub(lhs, rhs);
      ++report.pairsChecked;
      if (!residual.isZero())
        report.failures.push_back({window.basis()[i], window.basis()[j], residual});
    }
  }
  return report;
}

Element scalarDerivationApply(const Monomial& m, const SigPtr& sig) {
  if (!sig->isPoissonType())
    throw SignatureViolation("scalar derivation lives on Poisson algebras");
  if (!m.exp.empty())
    throw SignatureViolation("scalar derivation is defined on polynomial monomials");
  Rat total = 0;
  for (const auto& [v, j] : m.poly) total += j;
  Monomial out = m;
  out.coeff *= (Rat(2) - total);
  if (out.coeff == 0) return Element::zero(sig);
  return Element::fromMonomial(out, sig);
}

AutomorphismVerdict wplusAutomorphismCheck(const Element& thetaD,
                                           const Element& thetaXD) {
  requireSameSignature(thetaD.signature(), thetaXD.signature());
  if (thetaD.signature()->family != Family::W_PLUS1)
    throw SignatureMismatch("automorphism check lives in W+(1)");
  AutomorphismVerdict verdict;
  verdict.relationHolds = bracket(thetaD, thetaXD) == thetaD;
  bool hasLinear = false, badTerm = false;
  for (const auto& m : thetaXD.terms()) {
    long long j = m.polyPower(0);
    if (!m.exp.empty() || (j != 0 && j != 1)) { badTerm = true; break; }
    if (j == 1) hasLinear = true;
  }
  verdict.shapeOk = !badTerm && hasLinear && !thetaXD.isZero();
  return verdict;
}

} // namespace lieexp
