#include "lieexp/bracket.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lieexp {

size_t bracketParallelThreshold = 256;

namespace {

Monomial withoutDeriv(const Monomial& m) {
  Monomial f = m;
  f.deriv = kNoDeriv;
  return f;
}

void wittPairInto(const Monomial& s, const Monomial& t, std::vector<Monomial>& out) {
  const int p = s.deriv;
  const int q = t.deriv;
  const Monomial f = withoutDeriv(s);
  const Monomial g = withoutDeriv(t);

  std::vector<Monomial> dg;
  partialInto(p, g, dg);
  for (const auto& d : dg) {
    Monomial term = f * d;
    term.deriv = q;
    out.push_back(std::move(term));
  }
  std::vector<Monomial> df;
  partialInto(q, f, df);
  for (const auto& d : df) {
    Monomial term = g * d;
    term.coeff = -term.coeff;
    term.deriv = p;
    out.push_back(std::move(term));
  }
}

void poissonPairInto(const Monomial& s, const Monomial& t, int n,
                     std::vector<Monomial>& out) {
  for (int i = 0; i < n; ++i) {
    const int xi = i;
    const int yi = n + i;
    std::vector<Monomial> sx, sy, tx, ty;
    partialInto(xi, s, sx);
    partialInto(yi, s, sy);
    partialInto(xi, t, tx);
    partialInto(yi, t, ty);
    for (const auto& a : sx)
      for (const auto& b : ty) out.push_back(a * b);
    for (const auto& a : sy)
      for (const auto& b : tx) {
        Monomial m = a * b;
        m.coeff = -m.coeff;
        out.push_back(std::move(m));
      }
  }
}

void pairInto(BracketKind kind, const Monomial& s, const Monomial& t, int n,
              std::vector<Monomial>& out) {
  if (kind == BracketKind::WITT) wittPairInto(s, t, out);
  else poissonPairInto(s, t, n, out);
}

void checkBracketInputs(const Element& a, const Element& b) {
  requireSameSignature(a.signature(), b.signature());
  const auto& sig = *a.signature();
  if (sig.functionSpace)
    throw SignatureMismatch("scalar functions carry no Lie bracket");
  if (sig.isWittType()) {
    for (const auto& m : a.terms())
      if (m.deriv == kNoDeriv)
        throw MissingDerivationSlot("Witt bracket needs derivation slots");
    for (const auto& m : b.terms())
      if (m.deriv == kNoDeriv)
        throw MissingDerivationSlot("Witt bracket needs derivation slots");
  }
}

Element bracketImpl(const Element& a, const Element& b, bool allowParallel) {
  checkBracketInputs(a, b);
  const auto& sig = *a.signature();
  const BracketKind kind = bracketKind(sig);
  const int n = sig.isPoissonType() ? sig.n : 0;
  const size_t pairCount = a.size() * b.size();

  std::vector<Monomial> raw;
#ifdef _OPENMP
  if (allowParallel && pairCount >= bracketParallelThreshold) {
    std::vector<std::vector<Monomial>> buckets;
#pragma omp parallel
    {
#pragma omp single
      buckets.resize((size_t)omp_get_num_threads());
      auto& local = buckets[(size_t)omp_get_thread_num()];
#pragma omp for schedule(static)
      for (long long idx = 0; idx < (long long)pairCount; ++idx) {
        const auto& s = a.terms()[(size_t)idx / b.size()];
        const auto& t = b.terms()[(size_t)idx % b.size()];
        pairInto(kind, s, t, n, local);
      }
    }
    for (auto& bucket : buckets)
      raw.insert(raw.end(), std::make_move_iterator(bucket.begin()),
                 std::make_move_iterator(bucket.end()));
    return normalize(std::move(raw), a.signature());
  }
#else
  (void)allowParallel;
#endif
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) pairInto(kind, s, t, n, raw);
  return normalize(std::move(raw), a.signature());
}

} // namespace

Element wittBracket(const Element& a, const Element& b) {
  if (!a.signature() || !a.signature()->isWittType())
    throw SignatureMismatch("witt_bracket needs a Witt-type signature");
  return bracketImpl(a, b, true);
}

Element poissonBracket(const Element& f, const Element& g) {
  if (!f.signature() || !f.signature()->isPoissonType())
    throw SignatureMismatch("poisson_bracket needs a Poisson-type signature");
  return bracketImpl(f, g, true);
}

Element bracket(const Element& a, const Element& b) { return bracketImpl(a, b, true); }

Element bracketSerial(const Element& a, const Element& b) {
  return bracketImpl(a, b, false);
}

Element jacobiResidual(const Element& a, const Element& b, const Element& c) {
  return add(add(bracket(a, bracket(b, c)), bracket(b, bracket(c, a))),
             bracket(c, bracket(a, b)));
}

SigPtr hamiltonianTargetSignature(const AlgebraSignature& poissonSig) {
  if (!poissonSig.isPoissonType())
    throw SignatureMismatch("hamiltonian_field takes a Poisson-type element");
  const int n2 = 2 * poissonSig.n;
  bool anyExp = false;
  std::vector<std::vector<int>> powers(n2);
  for (int v = 0; v < n2; ++v) {
    powers[v] = poissonSig.expPowersFor(v);
    anyExp = anyExp || !powers[v].empty();
  }
  if (!anyExp) return AlgebraSignature::make(Family::W, n2);
  return AlgebraSignature::make(Family::W_EXP, n2, std::move(powers));
}

Element hamiltonianField(const Element& u) {
  const auto& sig = *u.signature();
  SigPtr target = hamiltonianTargetSignature(sig);
  const int n = sig.n;
  std::vector<Monomial> raw;
  for (const auto& m : u.terms()) {
    for (int i = 0; i < n; ++i) {
      std::vector<Monomial> dy;
      partialInto(n + i, m, dy);
      for (auto& d : dy) {
        d.coeff = -d.coeff;
        d.deriv = i;
        raw.push_back(std::move(d));
      }
      std::vector<Monomial> dx;
      partialInto(i, m, dx);
      for (auto& d : dx) {
        d.deriv = n + i;
        raw.push_back(std::move(d));
      }
    }
  }
  return normalize(std::move(raw), target);
}

Element divergence(const Element& a) {
  if (!a.signature() || !a.signature()->isWittType() || a.signature()->functionSpace)
    throw SignatureMismatch("divergence takes a Witt-type element");
  SigPtr scalar = a.signature()->scalarized();
  std::vector<Monomial> raw;
  for (const auto& m : a.terms()) {
    if (m.deriv == kNoDeriv)
      throw MissingDerivationSlot("divergence needs derivation slots");
    Monomial f = withoutDeriv(m);
    partialInto(m.deriv, f, raw);
  }
  return normalize(std::move(raw), scalar);
}

bool isDivergenceFree(const Element& a) { return divergence(a).isZero(); }

} // namespace lieexp
