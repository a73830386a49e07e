#pragma once

#include "fudg/annotation.hpp"
#include "fudg/bigint.hpp"
#include "fudg/enumeration.hpp"
#include "fudg/underspec.hpp"

namespace fudg {

/// Exact number of spanning in-trees of `g` rooted at the root vertex, by the
/// directed matrix-tree theorem. Zero when some vertex cannot reach the root.
BigInt count_arborescences(const SupportedEdgeGraph& g);

/// Upper bound on promiscuity: the number of spanning trees of the supported
/// edge graph. An inconsistent annotation gives prom = 0 and no commitment.
PromiscuityResult promiscuity_kirchhoff(const AnnotationGraph& g, const SupportOptions& options = {});

}  // namespace fudg
