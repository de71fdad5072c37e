#ifndef LIEEXP_JSON_IO_HPP
#define LIEEXP_JSON_IO_HPP

#include <json.hpp>

#include "lieexp/ideal.hpp"
#include "lieexp/structure.hpp"

namespace lieexp {

using Json = nlohmann::ordered_json;

/// {"terms":[{"coeff":"p/q","exp":{"x1^1":2},"poly":{"x1":3},"d":1}], ...};
/// coefficients as exact strings.
Json elementToJson(const Element& e);
Element elementFromJson(const Json& j, SigPtr sig);

Json closureReportToJson(const ClosureReport& report);
Json simplicitySummaryToJson(const SimplicitySummary& summary);
Json derivationReportToJson(const DerivationReport& report,
                            const AlgebraSignature& sig);

} // namespace lieexp

#endif
