#pragma once

#include <json.hpp>

#include "rf/constructions.hpp"
#include "rf/decomposition.hpp"
#include "rf/detect.hpp"
#include "rf/graph.hpp"
#include "rf/host.hpp"
#include "rf/invariants.hpp"
#include "rf/oracle.hpp"
#include "rf/search.hpp"
#include "rf/structure.hpp"
#include "rf/table.hpp"

namespace rf {

using json = nlohmann::ordered_json;

// emission
json to_json(const SimpleGraph& g);
json to_json(const GraphInvariants& inv);
json to_json(const PartiteProfile& p);
json to_json(const DecompositionFamily& fam);
json to_json(const ColoredHost& host);
json to_json(const Embedding& emb);
json to_json(const ColorCensus& census);
json to_json(const Claim& claim);
json to_json(const ConstructionResult& result);
json to_json(const VerifyReport& report);
json to_json(const P5Partition& cert);
json to_json(const CertReport& report);
json to_json(const ExtendedSizeReport& report);
json to_json(const BipartiteStructure& s);
json to_json(const TripartiteDecision& d);
json to_json(const SearchProblem& p);
json to_json(const SearchOutcome& out, bool include_timing = true);
json to_json(const BoundReport& rep);
json to_json(const ApplicabilityReport& rep);
json to_json(const TheoremVerdict& v);

// ingestion (throws std::invalid_argument on malformed content)
ColoredHost host_from_json(const json& j);
KnownValuesTable table_from_json(const json& j);
P5Partition p5_partition_from_json(const json& j);
ConstructionResult construction_from_json(const json& j);

}  // namespace rf
