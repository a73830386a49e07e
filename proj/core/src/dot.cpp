#include "fudg/dot.hpp"

#include <sstream>

namespace fudg {

namespace {

std::string quoted(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string vertex(NodeId id) { return "n" + std::to_string(id.value); }

}  // namespace

std::string to_dot(const AnnotationGraph& g, const DotOptions& options) {
  std::ostringstream out;
  out << "digraph fudg {\n";
  out << "  node [shape=box];\n";
  for (std::uint32_t i = 0; i < g.node_count(); ++i) {
    const NodeId id{i};
    const auto kind = g.kind(id);
    if (kind == NodeKind::Root && !options.show_root) continue;
    out << "  " << vertex(id) << " [label=" << quoted(g.display_name(id));
    switch (kind) {
      case NodeKind::Root: out << ", shape=plaintext"; break;
      case NodeKind::Lexical: break;
      case NodeKind::Fudge: out << ", shape=ellipse"; break;
      case NodeKind::Coord: out << ", shape=diamond"; break;
    }
    out << "];\n";
  }
  auto edge = [&](const Arc& a, std::string_view attrs) {
    out << "  " << vertex(a.from) << " -> " << vertex(a.to);
    if (!attrs.empty()) out << " [" << attrs << "]";
    out << ";\n";
  };
  for (const auto& a : g.deps()) {
    if (a.to == AnnotationGraph::root() && !options.show_root) continue;
    edge(a, "");
  }
  for (const auto& a : g.conjuncts()) edge(a, "style=bold");
  for (const auto& a : g.coordinators()) edge(a, "style=dotted");
  for (const auto& a : g.members()) {
    edge(a, g.tops().contains(a) ? "style=\"bold,dashed\"" : "style=dashed");
  }
  for (const auto& a : g.anaph()) edge(a, "dir=none");
  out << "}\n";
  return out.str();
}

}  // namespace fudg
