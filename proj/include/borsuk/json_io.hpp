#pragma once

#include <string>

#include "json.hpp"

#include "borsuk/decision.hpp"
#include "borsuk/diameter.hpp"
#include "borsuk/geometry.hpp"
#include "borsuk/oracle.hpp"
#include "borsuk/partition.hpp"

namespace borsuk {

using json = nlohmann::ordered_json;

// Body schema:
//   {"type":"polygon","vertices":[[x,y],...]}
//   {"type":"disc","center":[x,y],"radius":r}
//   {"type":"arcgon","start":[x,y],"elements":[
//       {"kind":"seg","to":[x,y]} | {"kind":"arc","center":[x,y],"radius":r,"to":[x,y]}]}
// Arcs run counterclockwise. An all-segment arc-gon loads as a polygon.
json body_to_json(const ConvexBody& body);
ConvexBody body_from_json(const json& j);  // throws Error{SchemaViolation}

json load_json(const std::string& path);  // throws Error{SchemaViolation} on parse failure
void save_json(const std::string& path, const json& j);
ConvexBody load_body(const std::string& path);

// Uniform boundary description of a partition piece (segments and arcs).
json arcgon_outline_json(const ConvexBody& piece);

json trange_to_json(const TRange& r);
json graph_to_json(const DiameterGraph& graph);
json certificate_to_json(const BorsukCertificate& cert);
json partition_to_json(const Partition& partition);
Partition partition_from_json(const ConvexBody& parent, const json& j);
json verification_to_json(const VerificationReport& report);
json consistency_to_json(const ConsistencyReport& report);

// FNV-1a of the canonical body serialization, as 16 hex digits.
std::string body_digest(const ConvexBody& body);

struct AnalysisOptions {
  double eps_rel{kEpsDiameterRel};
  bool with_oracle{false};
  OracleConfig oracle;
  bool timings{false};
  int verify_samples{10000};
};

// Full pipeline on one body: graph, certificate, partition + verification,
// optional oracle cross-check. Deterministic for fixed options; timing
// fields appear only when requested so reports stay byte-identical.
json analysis_report(const ConvexBody& body, const AnalysisOptions& options);

}  // namespace borsuk
