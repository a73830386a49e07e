#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fudg/agreement.hpp"
#include "fudg/annotation.hpp"
#include "fudg/enumeration.hpp"
#include "fudg/error.hpp"
#include "fudg/stats.hpp"
#include "fudg/underspec.hpp"
#include "fudg/validate.hpp"

namespace fudg {

/// Output uses insertion-ordered objects so serialized text is stable.
using Json = nlohmann::ordered_json;

/// {"tokens": [...], "nodes": [{"id", "kind", "tokens", "label"}], "deps",
/// "members", "tops", "conjuncts", "coordinators", "anaph"}; arcs are
/// [from, to] node-id pairs.
Json graph_to_json(const AnnotationGraph& g);

/// Inverse of graph_to_json. Nodes must be listed in id order starting with
/// the root. Throws Error(BadInput).
AnnotationGraph graph_from_json(const nlohmann::json& j);

/// [[child, head], ...] as node ids of `g`.
Json analysis_to_json(const AnnotationGraph& g, const Analysis& t);

/// Throws Error(BadInput) for pairs that do not name every lexical node of
/// `g` exactly once as a child.
Analysis analysis_from_json(const AnnotationGraph& g, const nlohmann::json& j);

/// {"parents": [{"node", "name", "parents", "names"}], "tops": [...],
/// "exact", "emptySupport": [...]}.
Json support_to_json(const AnnotationGraph& g, const SupportResult& support);

/// Counts up to 2^53 are numbers; larger ones are decimal strings.
Json bigint_to_json(const BigInt& value);

Json promiscuity_to_json(const PromiscuityResult& r);
Json violation_to_json(const AnnotationGraph& g, const Violation& v);
Json violations_to_json(const AnnotationGraph& g, const std::vector<Violation>& vs);
/// {"code", "message"} plus "line" and "column" for GFL errors, "nodes" for
/// empty support and "violations" for validation failures.
Json error_to_json(const Error& e);
Json pair_to_json(const PairResult& r);
Json report_to_json(const AgreementReport& r);
Json stats_to_json(const StatsReport& r);

}  // namespace fudg
