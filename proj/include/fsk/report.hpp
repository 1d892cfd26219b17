#pragma once

#include <string>

#include "json.hpp"

#include "fsk/bipartite.hpp"
#include "fsk/construction.hpp"
#include "fsk/freeness.hpp"
#include "fsk/pattern.hpp"
#include "fsk/stability.hpp"

namespace fsk {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "fsk-report/1";
inline constexpr const char* kToolVersion = "1.0.0";

// Skeleton with schema, tool version and command; callers add the rest.
Json report_header(const std::string& command);

Json to_json(const VertexSet& s);
Json to_json(const Edge& e);
Json to_json(const FskPattern& p);
Json to_json(const ConstructionLayout& layout);
Json to_json(const Certificate& c);
Json to_json(const EdgeBoundReport& r);
Json to_json(const WitnessCopy& w);
Json to_json(const BicliqueSearch& r);
Json to_json(const PartitionOutcome& p);
Json to_json(const DeletionTrace& t);
Json to_json(const BoundReport& r);

// Rebuilds the layout from its parameters and checks that the stored labels
// agree. Throws ParseError (offset 0) on missing fields or disagreement.
ConstructionLayout layout_from_json(const Json& j);

}  // namespace fsk
