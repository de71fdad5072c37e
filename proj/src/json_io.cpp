#include "lieexp/json_io.hpp"

#include "lieexp/text.hpp"

namespace lieexp {

Json elementToJson(const Element& e) {
  Json terms = Json::array();
  const auto& sig = *e.signature();
  for (const auto& m : e.terms()) {
    Json term;
    term["coeff"] = to_string(m.coeff);
    Json exp = Json::object();
    for (const auto& [k, a] : m.exp)
      exp[varName(sig, k.first) + "^" + std::to_string(k.second)] = a;
    Json poly = Json::object();
    for (const auto& [v, j] : m.poly) poly[varName(sig, v)] = j;
    term["exp"] = std::move(exp);
    term["poly"] = std::move(poly);
    if (m.deriv != kNoDeriv) term["d"] = m.deriv + 1;
    terms.push_back(std::move(term));
  }
  Json out;
  out["terms"] = std::move(terms);
  out["algebra"] = sig.name();
  out["text"] = printElement(e);
  return out;
}

namespace {

int varIndexFromName(const std::string& name, const AlgebraSignature& sig) {
  if (name.size() < 2 || (name[0] != 'x' && name[0] != 'y'))
    throw SignatureViolation("bad variable name \"" + name + "\"");
  int idx = std::stoi(name.substr(1)) - 1;
  if (idx < 0 || idx >= sig.n) throw SignatureViolation("variable index out of range");
  return name[0] == 'y' ? sig.n + idx : idx;
}

} // namespace

Element elementFromJson(const Json& j, SigPtr sig) {
  std::vector<Monomial> raw;
  for (const auto& term : j.at("terms")) {
    Monomial m;
    m.coeff = Rat(term.at("coeff").get<std::string>());
    if (term.contains("exp"))
      for (const auto& [key, a] : term.at("exp").items()) {
        auto caret = key.find('^');
        if (caret == std::string::npos)
          throw SignatureViolation("exponential key needs a power suffix");
        int v = varIndexFromName(key.substr(0, caret), *sig);
        int power = std::stoi(key.substr(caret + 1));
        m.setExpCoeff(v, power, a.get<long long>());
      }
    if (term.contains("poly"))
      for (const auto& [key, p] : term.at("poly").items())
        m.setPolyPower(varIndexFromName(key, *sig), p.get<long long>());
    if (term.contains("d")) m.deriv = term.at("d").get<int>() - 1;
    raw.push_back(std::move(m));
  }
  return normalize(std::move(raw), std::move(sig));
}

Json closureReportToJson(const ClosureReport& report) {
  Json out;
  out["seed"] = printElement(report.seed);
  out["caps"] = {{"maxPolyPower", report.caps.maxPolyPower},
                 {"minPolyPower", report.caps.minPolyPower},
                 {"maxExpCoeff", report.caps.maxExpCoeff}};
  out["multiplierBudget"] = report.multiplierBudget;
  out["reachedCount"] = report.reachedCount;
  out["windowSize"] = report.windowSize;
  out["coverage"] = to_string(report.coverage);
  out["rounds"] = report.rounds;
  out["discarded"] = report.discarded;
  out["fixedPoint"] = report.fixedPoint;
  Json trace = Json::array();
  for (const auto& step : report.tacticTrace) {
    trace.push_back({{"tactic", step.tactic},
                     {"multiplier", step.multiplier},
                     {"whBefore", step.whBefore},
                     {"whAfter", step.whAfter},
                     {"hpBefore", step.hpBefore},
                     {"hpAfter", step.hpAfter}});
  }
  out["tacticTrace"] = std::move(trace);
  return out;
}

Json simplicitySummaryToJson(const SimplicitySummary& summary) {
  Json runs = Json::array();
  for (const auto& run : summary.runs) runs.push_back(closureReportToJson(run));
  Json out;
  out["runs"] = std::move(runs);
  out["minCoverage"] = to_string(summary.minCoverage);
  out["corroborated"] = summary.corroborated;
  return out;
}

Json derivationReportToJson(const DerivationReport& report,
                            const AlgebraSignature& sig) {
  Json failures = Json::array();
  for (const auto& f : report.failures)
    failures.push_back({{"a", printMonomial(f.a, sig)},
                        {"b", printMonomial(f.b, sig)},
                        {"residual", printElement(f.residual)}});
  Json out;
  out["pairsChecked"] = report.pairsChecked;
  out["pairsSkipped"] = report.pairsSkipped;
  out["passed"] = report.passed();
  out["failures"] = std::move(failures);
  return out;
}

} // namespace lieexp
