#pragma once
// JSON serialization of every report type. Objects use nlohmann::json's
// ordered-by-key maps and carry integers and booleans only, so
// parse(dump(x)) re-dumps byte-identically.

#include <json.hpp>

#include "sgh/theorem_lab.hpp"

namespace sgh {

using Json = nlohmann::json;

Json to_json(const NumericalSemigroup& h);
Json to_json(const CofiniteSet& s);
Json to_json(const MonomialIdeal& ideal);
Json to_json(const InvariantReport& r);
Json to_json(const ClosureReport& r);
Json to_json(const DepthReport& r);
Json to_json(const BoundsReport& r);
Json to_json(const BorderClassification& c);
Json to_json(const Claim& c);
Json to_json(const Violation& v);
Json to_json(const CensusReport& r);

// {"spec", "invariants", "closure", "depth", "bounds", "classification",
// "discrepancies"} for one setup. Bounds and classification are null when
// d < 2.
struct AnalysisReport {
  Json json;
  bool finding = false;  // some bound or equivalence failed
};

AnalysisReport analyze(const ReductionSetup& s, const std::vector<Claim>& discrepancies = {},
                       const std::vector<std::string>& notes = {});

// Indented plain-text rendering of a JSON report; numbers appear exactly as
// in the JSON.
std::string render_text(const Json& j);

}  // namespace sgh
