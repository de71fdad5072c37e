#include "lieexp/ideal.hpp"

#include <algorithm>
#include <random>

#include "lieexp/text.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lieexp {

namespace {

long long minPolyPower(const Element& l) {
  long long best = 0;
  for (const auto& m : l.terms())
    for (const auto& [v, j] : m.poly) best = std::min(best, j);
  return best;
}

GradeKey maximalGradeKey(const Element& l) {
  GradeKey best;
  bool first = true;
  for (const auto& m : l.terms()) {
    GradeKey k = gradeKey(m, *l.signature());
    if (first || k > best) { best = std::move(k); first = false; }
  }
  return best;
}

bool isZeroKey(const GradeKey& k) {
  return std::all_of(k.begin(), k.end(), [](long long v) { return v == 0; });
}

/// slot index -> (variable, allowed power) in grade-key order
std::vector<std::pair<int, int>> gradeSlots(const AlgebraSignature& sig) {
  std::vector<std::pair<int, int>> slots;
  for (int v = 0; v < sig.numVars(); ++v)
    for (int power : sig.expPowersFor(v)) slots.emplace_back(v, power);
  return slots;
}

} // namespace

Element tacticPositivize(const Element& l, long long searchBound) {
  if (l.isZero()) throw Error("tactic_positivize needs a nonzero element");
  if (minPolyPower(l) >= 0) return l;
  const SigPtr& sig = l.signature();
  if (!sig->isPoissonType())
    throw Error("negative powers cannot occur in a NATURALS-domain algebra");

  // all multipliers x^k y^h with entries in [0, searchBound], tried in
  // order of increasing total degree for small, deterministic results
  const int vars = 2 * sig->n;
  for (long long total = 1; total <= searchBound * vars; ++total) {
    std::vector<long long> powers(vars, 0);
    for (;;) {
      long long sum = 0;
      for (long long p : powers) sum += p;
      if (sum == total) {
        Monomial mult;
        for (int v = 0; v < vars; ++v) mult.setPolyPower(v, powers[v]);
        Element m = Element::fromMonomial(mult, sig);
        Element r = projectIfQuotient(bracket(m, l));
        if (!r.isZero() && minPolyPower(r) >= 0) return r;
      }
      int v = 0;
      for (; v < vars; ++v) {
        if (powers[v] < searchBound) { ++powers[v]; break; }
        powers[v] = 0;
      }
      if (v == vars) break;
    }
  }
  throw SearchExhausted("no multiplier within the bound positivizes the element");
}

Element tacticStripExponentials(const Element& l) {
  if (l.isZero()) throw Error("tactic_strip_exponentials needs a nonzero element");
  const SigPtr& sig = l.signature();
  GradeKey maxKey = maximalGradeKey(l);
  if (isZeroKey(maxKey)) return l;

  auto slots = gradeSlots(*sig);
  size_t firstNonzero = 0;
  while (firstNonzero < maxKey.size() && maxKey[firstNonzero] == 0) ++firstNonzero;

  Monomial mult;
  if (sig->isWittType()) {
    // negate the whole exponential tail of the maximal component (wp50 form)
    for (size_t i = 0; i < maxKey.size(); ++i)
      if (maxKey[i] != 0)
        mult.setExpCoeff(slots[i].first, slots[i].second, -maxKey[i]);
    mult.deriv = slots[firstNonzero].first;
  } else {
    // single-factor multiplier e^{-a_s x_s} resp. e^{-b_s y_s}
    mult.setExpCoeff(slots[firstNonzero].first, slots[firstNonzero].second,
                     -maxKey[firstNonzero]);
  }
  Element m = Element::fromMonomial(mult, sig);
  Element r = projectIfQuotient(bracket(m, l));
  if (r.isZero())
    throw TacticFailed("stripping bracket vanished on " + printElement(l));
  return r;
}

Element tacticReduceComponents(const Element& l) {
  if (l.isZero()) throw Error("tactic_reduce_components needs a nonzero element");
  const SigPtr& sig = l.signature();
  auto parts = decompose(l);
  const size_t whBefore = parts.size();
  if (whBefore < 2) throw Error("element has fewer than two homogeneous components");
  GradeKey zeroKey((size_t)sig->gradeKeyLength(), 0);
  auto zeroIt = parts.find(zeroKey);
  if (zeroIt == parts.end())
    throw Error("element has no (0,...,0)-homogeneous component");
  if (minPolyPower(zeroIt->second) < 0)
    throw Error("positivize before reducing components");

  // target the maximal key among the exponential-bearing components; the
  // lex-maximal key of the whole element may be the zero key itself
  GradeKey maxKey;
  bool found = false;
  for (const auto& [key, part] : parts) {
    if (isZeroKey(key)) continue;
    if (!found || key > maxKey) { maxKey = key; found = true; }
  }
  if (!found) throw Error("element has no exponential-bearing component");
  auto slots = gradeSlots(*sig);
  size_t firstNonzero = 0;
  while (firstNonzero < maxKey.size() && maxKey[firstNonzero] == 0) ++firstNonzero;

  const long long reps = statHp(l) + 1;
  Element current = l;
  if (sig->isWittType()) {
    const int u = slots[firstNonzero].first;
    Monomial d;
    d.deriv = u;
    Element du = Element::fromMonomial(d, sig);
    for (long long i = 0; i < reps && !current.isZero(); ++i)
      current = bracket(du, current);
  } else {
    const int var = slots[firstNonzero].first;
    // ad(y_s) = -d/dx_s clears x-side exponentials; ad(x_s) = d/dy_s the y-side
    Monomial mult;
    if (var < sig->n) mult.setPolyPower(sig->n + var, 1); // y_s
    else mult.setPolyPower(var - sig->n, 1);              // x_s
    Element m = Element::fromMonomial(mult, sig);
    for (long long i = 0; i < reps && !current.isZero(); ++i)
      current = projectIfQuotient(bracket(m, current));
  }
  if (current.isZero())
    throw TacticFailed("component reduction annihilated the element");
  if (statWh(current) >= whBefore)
    throw TacticFailed("component reduction did not lower the homogeneous count");
  return current;
}

GenerationTrace lemma2Generate(const Monomial& target, const SigPtr& sig) {
  if (!sig->isWittType())
    throw SignatureMismatch("lemma-style generation lives in Witt-type algebras");
  GenerationTrace trace;
  trace.target = target;
  trace.target.coeff = 1;
  Element targetEl = Element::fromMonomial(trace.target, sig);

  const int t = target.deriv;
  if (t == kNoDeriv) throw MissingDerivationSlot("target needs a derivation slot");

  if (trace.target.exp.empty() && trace.target.poly.empty()) {
    trace.evaluated = targetEl; // d_t is its own seed
    trace.multiple = 1;
    return trace;
  }

  Monomial dt;
  dt.deriv = t;
  Element dtEl = Element::fromMonomial(dt, sig);
  Monomial xtdt;
  xtdt.setPolyPower(t, 1);
  xtdt.deriv = t;
  Element xtdtEl = Element::fromMonomial(xtdt, sig);
  Monomial xtTarget = trace.target;
  xtTarget.setPolyPower(t, xtTarget.polyPower(t) + 1);
  Element xtTargetEl = Element::fromMonomial(xtTarget, sig);

  // [x_t d_t, target] - [d_t, x_t target] = -2 target
  trace.steps.push_back({xtdtEl, targetEl, Rat(1)});
  trace.steps.push_back({dtEl, xtTargetEl, Rat(-1)});

  Element acc = Element::zero(sig);
  for (const auto& step : trace.steps)
    acc = add(acc, scale(step.weight, bracket(step.left, step.right)));
  trace.evaluated = acc;

  if (acc.isZero() || acc.size() != 1 || acc.leading().key() != trace.target.key())
    throw TraceInvalid("bracket combination does not reproduce the target");
  trace.multiple = acc.leading().coeff;
  return trace;
}

namespace {

void recordTactic(ClosureReport& report, const Element& before, const Element& after,
                  const std::string& name, const std::string& mult) {
  TacticStep step;
  step.tactic = name;
  step.multiplier = mult;
  step.whBefore = statWh(before);
  step.whAfter = statWh(after);
  step.hpBefore = before.isZero() ? 0 : statHp(before);
  step.hpAfter = after.isZero() ? 0 : statHp(after);
  report.tacticTrace.push_back(std::move(step));
}

} // namespace

ClosureReport closureSaturate(const Element& seed, const Window& window,
                              const Window& multipliers,
                              const SaturationOptions& options) {
  if (seed.isZero()) throw Error("closure_saturate needs a nonzero seed");
  requireSameSignature(seed.signature(), window.signature());
  requireSameSignature(window.signature(), multipliers.signature());

  ClosureReport report;
  report.seed = seed;
  report.caps = window.caps();
  report.windowSize = window.size();
  {
    const auto& mc = multipliers.caps();
    report.multiplierBudget = "window basis with polyPower in [" +
                              std::to_string(mc.minPolyPower) + "," +
                              std::to_string(mc.maxPolyPower) + "], |expCoeff| <= " +
                              std::to_string(mc.maxExpCoeff);
  }

  Element start = projectIfQuotient(seed);
  // the strip/reduce pipeline targets exponential-free elements, which only
  // exist in families carrying polynomial parts
  if (options.applyTactics && window.signature()->polynomialsAllowed()) try {
    Element cur = start;
    if (minPolyPower(cur) < 0) {
      Element next = tacticPositivize(cur, options.positivizeBound);
      recordTactic(report, cur, next, "positivize", "bounded x^k y^h search");
      cur = next;
    }
    auto hasNonzeroKey = [](const Element& e) {
      for (const auto& m : e.terms())
        for (const auto& [k, a] : m.exp)
          if (a != 0) return true;
      return false;
    };
    for (int guard = 0; guard < 64 && hasNonzeroKey(cur); ++guard) {
      auto parts = decompose(cur);
      GradeKey zeroKey((size_t)cur.signature()->gradeKeyLength(), 0);
      if (parts.size() >= 2 && parts.count(zeroKey) && minPolyPower(parts[zeroKey]) >= 0) {
        Element next = tacticReduceComponents(cur);
        recordTactic(report, cur, next, "reduce-components", "iterated ad");
        cur = next;
      } else {
        Element next = tacticStripExponentials(cur);
        recordTactic(report, cur, next, "strip-exponentials", "e^{-maximal key}");
        if (next == cur) break;
        cur = next;
      }
      if (minPolyPower(cur) < 0) {
        Element next = tacticPositivize(cur, options.positivizeBound);
        recordTactic(report, cur, next, "positivize", "bounded x^k y^h search");
        cur = next;
      }
    }
    // tactics that walk out of the cap window are abandoned, not fatal
    if (window.coordinates(cur)) start = cur;
    else report.tacticTrace.clear();
  } catch (const TacticFailed&) {
    // a tactic with no valid move on this seed is abandoned, not fatal
    report.tacticTrace.clear();
  } catch (const SearchExhausted&) {
    report.tacticTrace.clear();
  }

  auto coords = window.coordinates(start);
  if (!coords) throw OutOfWindow("seed does not fit inside the cap window");

  RationalSpan span(window.size());
  span.insert(*coords);

  // Each round brackets a basis of the reached span (its reduced rows,
  // not the raw bracket results) against every multiplier: row reduction
  // cancels out-of-window tails that would otherwise force a discard.
  bool stalled = false;
  while (!stalled && report.rounds < options.maxRounds &&
         span.rank() < window.size()) {
    ++report.rounds;
    if (options.abelianControl) break; // zero bracket: nothing new ever appears

    std::vector<Element> sources;
    sources.reserve(span.rank());
    for (const auto& row : span.rows()) sources.push_back(window.fromCoordinates(row));

    const size_t jobs = sources.size() * multipliers.size();
    std::vector<Element> results(jobs);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
    for (long long idx = 0; idx < (long long)jobs; ++idx) {
      const Element& f = sources[(size_t)idx / multipliers.size()];
      Element mult = multipliers.basisElement((size_t)idx % multipliers.size());
      results[(size_t)idx] = projectIfQuotient(bracket(f, mult));
    }

    const size_t before = span.rank();
    for (auto& r : results) {
      if (r.isZero()) continue;
      auto c = window.coordinates(r);
      if (!c) { ++report.discarded; continue; }
      span.insert(std::move(*c));
      if (span.rank() == window.size()) break;
    }
    stalled = span.rank() == before;
  }

  report.fixedPoint = stalled || span.rank() == window.size() ||
                      options.abelianControl;
  report.reachedCount = span.rank();
  report.coverage = Rat((long long)span.rank(), (long long)window.size());
  return report;
}

SimplicitySummary simplicityExperiment(const Window& window, const Window& multipliers,
                                       size_t numSeeds, std::uint64_t rngSeed,
                                       const SaturationOptions& options) {
  if (numSeeds < 1) throw Error("need at least one seed");
  SimplicitySummary summary;
  std::mt19937_64 rng(rngSeed);
  std::uniform_int_distribution<size_t> pickTermCount(1, 4);
  std::uniform_int_distribution<size_t> pickBasis(0, window.size() - 1);
  std::uniform_int_distribution<int> pickCoeff(1, 6); // maps to [-3,3]\{0}

  for (size_t s = 0; s < numSeeds; ++s) {
    Element seed;
    do {
      std::vector<Monomial> raw;
      size_t terms = pickTermCount(rng);
      for (size_t t = 0; t < terms; ++t) {
        Monomial m = window.basis()[pickBasis(rng)];
        int c = pickCoeff(rng);
        m.coeff = c <= 3 ? c : 3 - c; // 1..3 or -1..-3
        raw.push_back(std::move(m));
      }
      seed = normalize(std::move(raw), window.signature());
    } while (seed.isZero());
    summary.runs.push_back(closureSaturate(seed, window, multipliers, options));
  }
  summary.minCoverage = summary.runs.front().coverage;
  for (const auto& run : summary.runs)
    summary.minCoverage = std::min(summary.minCoverage, run.coverage);
  summary.corroborated = summary.minCoverage == 1;
  return summary;
}

} // namespace lieexp
