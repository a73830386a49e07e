#pragma once

#include <utility>
#include <vector>

#include "fudg/annotation.hpp"

namespace fudg {

/// Rewrites every coordination node as ordinary dependencies headed by its
/// leftmost coordinator: conjuncts and the remaining coordinators attach to
/// that coordinator, and every arc into or out of the coordination node is
/// redirected to it. Graphs without coordination nodes are returned
/// unchanged.
AnnotationGraph simplify_coordination(const AnnotationGraph& g);

struct SimplifiedGraph {
  AnnotationGraph graph;
  /// For each node of `graph`, the node of the input it came from.
  std::vector<NodeId> origin;
};

SimplifiedGraph simplify_coordination_traced(const AnnotationGraph& g);

/// Aligns the lexical nodes of two annotations of the same sentence. Tokens
/// lexicalized by only one side are added to the other as unattached words,
/// and a multiword not present identically on both sides is relaxed into a
/// fudge expression over its words, which inherits the multiword's arcs.
/// Throws Error(TokenListMismatch) when the sentences differ.
std::pair<AnnotationGraph, AnnotationGraph> reconcile_lexical(const AnnotationGraph& g1,
                                                              const AnnotationGraph& g2);

/// Copy of `g` without anaphoric links.
AnnotationGraph drop_anaphora(const AnnotationGraph& g);

}  // namespace fudg
