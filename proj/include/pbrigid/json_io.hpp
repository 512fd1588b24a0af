#pragma once

#include "pbrigid/classify.hpp"
#include "pbrigid/dualgraph.hpp"
#include "pbrigid/geometry.hpp"

#include <json.hpp>

#include <string>

namespace pbrigid {

// Arbitrary-precision integers and exact rationals are serialized as decimal
// strings ("30", "-2", "2/15") so values never lose precision in JSON.
// Graph-level integers (self-intersections, multiplicities, K^2) are plain
// JSON numbers.

nlohmann::json to_json(const ExponentTuple& s);
ExponentTuple tuple_from_json(const nlohmann::json& j);

nlohmann::json to_json(const WeightVector& wv);
nlohmann::json to_json(const ProofStep& step);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const SingularPoint& p);
nlohmann::json to_json(const SurfaceReport& r);
nlohmann::json to_json(const DiscrepancyData& d);
nlohmann::json to_json(const IntersectionGraph& g);
IntersectionGraph graph_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ContractionRecord& r);
nlohmann::json to_json(const Polynomial& p);
nlohmann::json to_json(const Derivation& d);
nlohmann::json to_json(const PresentedRing& ring);
nlohmann::json to_json(const Witness& w);

std::string witness_id(const Witness& w);

std::string to_dot(const IntersectionGraph& g);

// Standard CLI output wrapper.
nlohmann::json report_envelope(const std::string& command, nlohmann::json input, nlohmann::json result);

} // namespace pbrigid
