#include <CLI11.hpp>

#include <iostream>

#include "lieexp/json_io.hpp"
#include "lieexp/text.hpp"

using namespace lieexp;

namespace {

struct CommonOpts {
  std::string algebra;
  bool json = false;
  long long polyCap = 3;
  long long expCap = 1;
  long long multPolyCap = -1; // -1: same as window
  long long multExpCap = -1;
};

void addCommon(CLI::App* cmd, CommonOpts& opts, bool withCaps) {
  cmd->add_option("--algebra", opts.algebra, "algebra signature, e.g. W(1), Hbar(1,1)")
      ->required();
  cmd->add_flag("--json", opts.json, "emit JSON instead of text");
  if (withCaps) {
    cmd->add_option("--poly-cap", opts.polyCap, "max |polynomial power| in the window");
    cmd->add_option("--exp-cap", opts.expCap, "max |exponential coefficient| in the window");
    cmd->add_option("--mult-poly-cap", opts.multPolyCap,
                    "polynomial cap of the multiplier window (default: window cap)");
    cmd->add_option("--mult-exp-cap", opts.multExpCap,
                    "exponential cap of the multiplier window (default: window cap)");
  }
}

Window makeWindow(const SigPtr& sig, const CommonOpts& opts) {
  return Window(sig, TruncationCaps::forSig(*sig, opts.polyCap, opts.expCap));
}

Window makeMultiplierWindow(const SigPtr& sig, const CommonOpts& opts) {
  long long p = opts.multPolyCap >= 0 ? opts.multPolyCap : opts.polyCap;
  long long e = opts.multExpCap >= 0 ? opts.multExpCap : opts.expCap;
  return Window(sig, TruncationCaps::forSig(*sig, p, e));
}

void emitElement(const Element& e, bool json) {
  if (json) std::cout << elementToJson(e).dump(2) << "\n";
  else std::cout << printElement(e) << "\n";
}

std::string gradeKeyText(const GradeKey& key) {
  std::string out = "(";
  for (size_t i = 0; i < key.size(); ++i)
    out += (i ? "," : "") + std::to_string(key[i]);
  return out + ")";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic kernel for exponential-polynomial Lie algebras"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::vector<std::string> inputs;
  long long seeds = 20;
  unsigned long long rngSeed = 7;
  long long maxRounds = 16;
  bool tactics = false;
  bool control = false;
  std::string innerExpr;
  std::string scalarWeight = "0";
  bool identityMap = false;

  auto* cBracket = app.add_subcommand("bracket", "Lie bracket of two elements");
  addCommon(cBracket, opts, false);
  cBracket->add_option("inputs", inputs, "two element expressions")->expected(2);

  auto* cGrade = app.add_subcommand("grade", "grade keys of an element's components");
  addCommon(cGrade, opts, false);
  cGrade->add_option("inputs", inputs, "one element expression")->expected(1);

  auto* cDecompose = app.add_subcommand("decompose", "homogeneous decomposition");
  addCommon(cDecompose, opts, false);
  cDecompose->add_option("inputs", inputs, "one element expression")->expected(1);

  auto* cStats = app.add_subcommand("stats", "w_h/h_h, hp/lp and per-key term counts");
  addCommon(cStats, opts, false);
  cStats->add_option("inputs", inputs, "one element expression")->expected(1);

  auto* cJacobi = app.add_subcommand("jacobi", "Jacobi residual of three elements");
  addCommon(cJacobi, opts, false);
  cJacobi->add_option("inputs", inputs, "three element expressions")->expected(3);

  auto* cCenter = app.add_subcommand("center", "commutant of the cap window");
  addCommon(cCenter, opts, true);

  auto* cAdDiag = app.add_subcommand("addiag", "ad-diagonal basis monomials in the window");
  addCommon(cAdDiag, opts, true);

  auto* cDiv = app.add_subcommand("divergence", "divergence of a Witt-type element");
  addCommon(cDiv, opts, false);
  cDiv->add_option("inputs", inputs, "one element expression")->expected(1);

  auto* cHam = app.add_subcommand("hamiltonian", "Hamiltonian field of a Poisson element");
  addCommon(cHam, opts, false);
  cHam->add_option("inputs", inputs, "one element expression")->expected(1);

  auto* cDeriv = app.add_subcommand("derivation-check",
                                    "residuals of a candidate derivation on the window");
  addCommon(cDeriv, opts, true);
  cDeriv->add_option("--inner", innerExpr, "z for the inner part ad(z)");
  cDeriv->add_option("--scalar", scalarWeight, "weight of the scalar derivation S");
  cDeriv->add_flag("--identity", identityMap, "check the identity map instead");

  auto* cAuto = app.add_subcommand("automorphism-check",
                                   "W+(1) leading-term constraint on (theta(D1), theta(x1 D1))");
  addCommon(cAuto, opts, false);
  cAuto->add_option("inputs", inputs, "two element expressions")->expected(2);

  auto* cClosure = app.add_subcommand("closure", "ideal-closure saturation from a seed");
  addCommon(cClosure, opts, true);
  cClosure->add_option("inputs", inputs, "seed element expression")->expected(1);
  cClosure->add_option("--max-rounds", maxRounds, "saturation round limit");
  cClosure->add_flag("--tactics", tactics, "preprocess the seed with the proof tactics");

  auto* cSimp = app.add_subcommand("simplicity", "saturation from random seeds");
  addCommon(cSimp, opts, true);
  cSimp->add_option("--seeds", seeds, "number of random seeds");
  cSimp->add_option("--rng", rngSeed, "PRNG seed");
  cSimp->add_option("--max-rounds", maxRounds, "saturation round limit");
  cSimp->add_flag("--control", control, "abelian control run (zero bracket)");

  auto* cParse = app.add_subcommand("parse-check", "parse and reprint canonically");
  addCommon(cParse, opts, false);
  cParse->add_option("inputs", inputs, "one element expression")->expected(1);

  CLI11_PARSE(app, argc, argv);

  try {
    SigPtr sig = AlgebraSignature::parse(opts.algebra);
    auto parse = [&](const std::string& s) {
      return projectIfQuotient(parseElement(s, sig));
    };

    if (cBracket->parsed()) {
      emitElement(projectIfQuotient(bracket(parse(inputs[0]), parse(inputs[1]))),
                  opts.json);
    } else if (cGrade->parsed()) {
      Element e = parse(inputs[0]);
      Json keys = Json::array();
      for (const auto& [key, part] : decompose(e)) {
        if (opts.json) keys.push_back(key);
        else std::cout << gradeKeyText(key) << "\n";
      }
      if (opts.json) std::cout << Json{{"keys", keys}}.dump(2) << "\n";
    } else if (cDecompose->parsed()) {
      Element e = parse(inputs[0]);
      Json parts = Json::array();
      for (const auto& [key, part] : decompose(e)) {
        if (opts.json)
          parts.push_back({{"key", key}, {"component", elementToJson(part)}});
        else
          std::cout << gradeKeyText(key) << ": " << printElement(part) << "\n";
      }
      if (opts.json) std::cout << Json{{"components", parts}}.dump(2) << "\n";
    } else if (cStats->parsed()) {
      Element e = parse(inputs[0]);
      Json out;
      out["homogeneousCount"] = statWh(e);
      out["highestPower"] = e.isZero() ? 0 : statHp(e);
      Json perKey = Json::array();
      for (const auto& [key, part] : decompose(e))
        perKey.push_back({{"key", key}, {"terms", part.size()}});
      out["perKey"] = std::move(perKey);
      if (opts.json) std::cout << out.dump(2) << "\n";
      else {
        std::cout << (sig->isWittType() ? "w_h" : "h_h") << " = " << statWh(e) << "\n";
        std::cout << (sig->isWittType() ? "hp" : "lp") << " = "
                  << (e.isZero() ? 0 : statHp(e)) << "\n";
        for (const auto& [key, part] : decompose(e))
          std::cout << "T" << gradeKeyText(key) << " = " << part.size() << "\n";
      }
    } else if (cJacobi->parsed()) {
      emitElement(projectIfQuotient(jacobiResidual(parse(inputs[0]), parse(inputs[1]),
                                                   parse(inputs[2]))),
                  opts.json);
    } else if (cCenter->parsed()) {
      Window window = makeWindow(sig, opts);
      auto basis = centerProbe(window);
      if (opts.json) {
        Json out = Json::array();
        for (const auto& e : basis) out.push_back(elementToJson(e));
        std::cout << Json{{"center", out}}.dump(2) << "\n";
      } else {
        std::cout << "center dimension " << basis.size() << "\n";
        for (const auto& e : basis) std::cout << printElement(e) << "\n";
      }
    } else if (cAdDiag->parsed()) {
      Window window = makeWindow(sig, opts);
      auto found = findAdDiagonal(window);
      if (opts.json) {
        Json out = Json::array();
        for (const auto& e : found) out.push_back(elementToJson(e));
        std::cout << Json{{"adDiagonal", out}}.dump(2) << "\n";
      } else {
        std::cout << "ad-diagonal monomials: " << found.size() << "\n";
        for (const auto& e : found) std::cout << printElement(e) << "\n";
      }
    } else if (cDiv->parsed()) {
      Element d = divergence(parseElement(inputs[0], sig));
      if (opts.json) {
        Json out = elementToJson(d);
        out["divergenceFree"] = d.isZero();
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << printElement(d) << "\n";
      }
    } else if (cHam->parsed()) {
      emitElement(hamiltonianField(parseElement(inputs[0], sig)), opts.json);
    } else if (cDeriv->parsed()) {
      Window window = makeWindow(sig, opts);
      LinearMapTable table;
      if (identityMap) {
        table = LinearMapTable::identity(window);
      } else {
        Rat alpha(scalarWeight);
        Element z = innerExpr.empty() ? Element::zero(sig) : parse(innerExpr);
        table = LinearMapTable::fromFunction(window, [&](const Monomial& m) {
          Element e = Element::fromMonomial(m, sig);
          Element image = projectIfQuotient(bracket(z, e));
          if (alpha != 0) image = add(image, scale(alpha, scalarDerivationApply(m, sig)));
          return image;
        });
      }
      auto report = checkDerivation(table, window);
      if (opts.json) std::cout << derivationReportToJson(report, *sig).dump(2) << "\n";
      else
        std::cout << (report.passed() ? "derivation: PASS" : "derivation: FAIL") << " ("
                  << report.pairsChecked << " pairs, " << report.pairsSkipped
                  << " skipped, " << report.failures.size() << " failures)\n";
    } else if (cAuto->parsed()) {
      auto verdict =
          wplusAutomorphismCheck(parseElement(inputs[0], sig), parseElement(inputs[1], sig));
      if (opts.json)
        std::cout << Json{{"relationHolds", verdict.relationHolds},
                          {"shapeOk", verdict.shapeOk},
                          {"accepted", verdict.accepted()}}
                         .dump(2)
                  << "\n";
      else
        std::cout << (verdict.accepted() ? "accept" : "reject") << " (relation "
                  << (verdict.relationHolds ? "holds" : "fails") << ", shape "
                  << (verdict.shapeOk ? "ok" : "violated") << ")\n";
    } else if (cClosure->parsed()) {
      Window window = makeWindow(sig, opts);
      Window mult = makeMultiplierWindow(sig, opts);
      SaturationOptions sat;
      sat.maxRounds = (size_t)maxRounds;
      sat.applyTactics = tactics;
      auto report = closureSaturate(parse(inputs[0]), window, mult, sat);
      if (opts.json) std::cout << closureReportToJson(report).dump(2) << "\n";
      else
        std::cout << "coverage " << to_string(report.coverage) << " ("
                  << report.reachedCount << "/" << report.windowSize << ") in "
                  << report.rounds << " rounds, " << report.discarded
                  << " discarded, " << (report.fixedPoint ? "fixed point" : "round limit")
                  << "\n";
    } else if (cSimp->parsed()) {
      Window window = makeWindow(sig, opts);
      Window mult = makeMultiplierWindow(sig, opts);
      SaturationOptions sat;
      sat.maxRounds = (size_t)maxRounds;
      sat.abelianControl = control;
      auto summary = simplicityExperiment(window, mult, (size_t)seeds, rngSeed, sat);
      if (opts.json) std::cout << simplicitySummaryToJson(summary).dump(2) << "\n";
      else {
        for (size_t i = 0; i < summary.runs.size(); ++i)
          std::cout << "seed " << i << ": coverage "
                    << to_string(summary.runs[i].coverage) << "\n";
        std::cout << "min coverage " << to_string(summary.minCoverage) << ", "
                  << (summary.corroborated ? "corroborated" : "NOT corroborated") << "\n";
      }
    } else if (cParse->parsed()) {
      emitElement(parse(inputs[0]), opts.json);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
