#pragma once

#include <string>

#include "fudg/annotation.hpp"

namespace fudg {

struct DotOptions {
  /// Draw the root vertex and the arcs into it.
  bool show_root = false;
};

/// Graphviz rendering. Dependency arcs are solid, conjunct arcs bold,
/// coordinator arcs dotted, member arcs dashed (bold and dashed for a
/// designated top) and anaphoric links undirected.
std::string to_dot(const AnnotationGraph& g, const DotOptions& options = {});

}  // namespace fudg
