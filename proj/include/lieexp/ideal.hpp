#ifndef LIEEXP_IDEAL_HPP
#define LIEEXP_IDEAL_HPP

#include <cstdint>
#include <string>

#include "lieexp/grading.hpp"
#include "lieexp/structure.hpp"
#include "lieexp/window.hpp"

namespace lieexp {

/// One applied proof tactic with before/after element statistics.
struct TacticStep {
  std::string tactic;
  std::string multiplier;
  size_t whBefore = 0, whAfter = 0;
  long long hpBefore = 0, hpAfter = 0;
};

/// Outcome of a truncated ideal-closure saturation run.
struct ClosureReport {
  Element seed;
  TruncationCaps caps;
  std::string multiplierBudget;
  size_t reachedCount = 0;
  size_t windowSize = 0;
  Rat coverage = 0;
  size_t rounds = 0;
  size_t discarded = 0;   // bracket results that left the window
  bool fixedPoint = false; // false means the round limit was hit
  std::vector<TacticStep> tacticTrace;
};

/// Element of <l> with no negative polynomial powers, found by bounded
/// multiplier search; l itself when already positive.
Element tacticPositivize(const Element& l, long long searchBound);

/// One bracket against e^{-(maximal grade key)} (Witt, with d_u on the
/// first exponential variable) resp. the single-factor Poisson analogue;
/// lowers the maximal grade key.  Exponential-free elements pass through.
Element tacticStripExponentials(const Element& l);

/// (hp(l)+1)-fold ad(d_u) resp. (lp(l)+1)-fold ad(y_r)/ad(x_r):
/// annihilates the exponential-free component, dropping the homogeneous
/// count by at least one.
Element tacticReduceComponents(const Element& l);

/// One bracket of a lemma-style generation trace, weighted into a linear
/// combination.
struct BracketStep {
  Element left, right;
  Rat weight;
};

struct GenerationTrace {
  Monomial target;
  std::vector<BracketStep> steps;
  Element evaluated;
  Rat multiple; // evaluated == multiple * target, multiple != 0
};

/// Explicit bracket combination reproducing a nonzero multiple of a basis
/// monomial from d_t; the combination is re-evaluated exactly.
GenerationTrace lemma2Generate(const Monomial& target, const SigPtr& sig);

struct SaturationOptions {
  size_t maxRounds = 16;
  bool abelianControl = false; // run with the zero bracket
  bool applyTactics = false;   // preprocess the seed through the tactics
  long long positivizeBound = 6;
};

/// Repeatedly brackets the reached span against all multiplier-window
/// basis monomials, keeping in-window results, until a fixed point or the
/// round limit.
ClosureReport closureSaturate(const Element& seed, const Window& window,
                              const Window& multipliers,
                              const SaturationOptions& options = {});

struct SimplicitySummary {
  std::vector<ClosureReport> runs;
  Rat minCoverage = 1;
  bool corroborated = false; // every run reached coverage 1
};

/// Saturation from numSeeds pseudo-random nonzero seeds (<=4 terms,
/// coefficients in [-3,3]\{0}), deterministic in rngSeed.
SimplicitySummary simplicityExperiment(const Window& window, const Window& multipliers,
                                       size_t numSeeds, std::uint64_t rngSeed,
                                       const SaturationOptions& options = {});

} // namespace lieexp

#endif
