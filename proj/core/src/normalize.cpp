#include "fudg/normalize.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "fudg/error.hpp"

namespace fudg {

namespace {

constexpr std::uint32_t kUnmapped = UINT32_MAX;

/// Head coordinator of a coordination node: the coordinator whose leftmost
/// token comes first. Falls back to the leftmost conjunct for graphs that
/// lack coordinators so that invalid input can still be inspected.
std::optional<NodeId> coordination_head(const AnnotationGraph& g, NodeId coord) {
  auto pick = [&](const std::vector<NodeId>& candidates) -> std::optional<NodeId> {
    std::optional<NodeId> best;
    std::optional<TokenPosition> best_pos;
    for (auto c : candidates) {
      const auto pos = g.leftmost_token(c);
      if (!best || (pos && (!best_pos || *pos < *best_pos))) {
        best = c;
        best_pos = pos;
      }
    }
    return best;
  };
  if (auto head = pick(g.coordinators_of(coord))) return head;
  return pick(g.conjuncts_of(coord));
}

}  // namespace

SimplifiedGraph simplify_coordination_traced(const AnnotationGraph& g) {
  const auto n = g.node_count();
  SimplifiedGraph out{AnnotationGraph(std::vector<SourceToken>(g.tokens().begin(), g.tokens().end())),
                      {AnnotationGraph::root()}};

  std::vector<std::uint32_t> map(n, kUnmapped);
  map[0] = 0;
  for (std::uint32_t i = 1; i < n; ++i) {
    const auto& node = g.nodes()[i];
    NodeId created;
    switch (node.kind) {
      case NodeKind::Lexical: created = out.graph.add_lexical(node.tokens); break;
      case NodeKind::Fudge: created = out.graph.add_fudge(); break;
      case NodeKind::Coord: continue;
      case NodeKind::Root: continue;
    }
    map[i] = created.value;
    out.origin.push_back(NodeId{i});
  }

  // Resolve coordination nodes to the node that heads them, following
  // coordination-as-coordinator chains with a guard against cycles.
  for (auto coord : g.coord_nodes()) {
    std::set<std::uint32_t> visited;
    std::optional<NodeId> cur = coord;
    while (cur && g.kind(*cur) == NodeKind::Coord && !visited.contains(cur->value)) {
      visited.insert(cur->value);
      cur = coordination_head(g, *cur);
    }
    if (cur && g.kind(*cur) != NodeKind::Coord) map[coord.value] = map[cur->value];
  }

  auto mapped = [&](NodeId id) -> std::optional<NodeId> {
    if (map[id.value] == kUnmapped) return std::nullopt;
    return NodeId{map[id.value]};
  };

  for (const auto& arc : g.deps()) {
    auto from = mapped(arc.from);
    auto to = mapped(arc.to);
    if (from && to) out.graph.add_dep(*from, *to);
  }
  for (const auto* arcs : {&g.conjuncts(), &g.coordinators()}) {
    for (const auto& arc : *arcs) {
      auto from = mapped(arc.from);
      auto to = mapped(arc.to);
      if (from && to && *from != *to) out.graph.add_dep(*from, *to);
    }
  }
  for (const auto& arc : g.members()) {
    auto from = mapped(arc.from);
    auto to = mapped(arc.to);
    if (from && to) out.graph.add_member(*from, *to, g.tops().contains(arc));
  }
  for (const auto& arc : g.anaph()) {
    auto a = mapped(arc.from);
    auto b = mapped(arc.to);
    if (a && b && *a != *b) out.graph.add_anaph(*a, *b);
  }
  return out;
}

AnnotationGraph simplify_coordination(const AnnotationGraph& g) {
  if (g.coord_nodes().empty()) return g;
  return simplify_coordination_traced(g).graph;
}

namespace {

bool same_sentence(const AnnotationGraph& a, const AnnotationGraph& b) {
  if (a.tokens().size() != b.tokens().size()) return false;
  for (std::size_t i = 0; i < a.tokens().size(); ++i) {
    if (a.tokens()[i].word != b.tokens()[i].word) return false;
  }
  return true;
}

std::set<std::vector<TokenPosition>> lexical_keys(const AnnotationGraph& g) {
  std::set<std::vector<TokenPosition>> keys;
  for (auto id : g.lexical_nodes()) keys.insert(g.node(id).tokens);
  return keys;
}

std::set<TokenPosition> covered_tokens(const AnnotationGraph& g) {
  std::set<TokenPosition> covered;
  for (auto id : g.lexical_nodes()) {
    for (auto p : g.node(id).tokens) covered.insert(p);
  }
  return covered;
}

AnnotationGraph relax_against(const AnnotationGraph& g,
                              const std::set<std::vector<TokenPosition>>& other_keys,
                              const std::set<TokenPosition>& required_tokens) {
  AnnotationGraph out(std::vector<SourceToken>(g.tokens().begin(), g.tokens().end()));
  std::vector<NodeId> map(g.node_count(), AnnotationGraph::root());
  for (std::uint32_t i = 1; i < g.node_count(); ++i) {
    const auto& node = g.nodes()[i];
    switch (node.kind) {
      case NodeKind::Lexical:
        if (node.tokens.size() >= 2 && !other_keys.contains(node.tokens)) {
          const NodeId fudge = out.add_fudge();
          for (auto p : node.tokens) out.add_member(out.add_lexical({p}), fudge);
          map[i] = fudge;
        } else {
          map[i] = out.add_lexical(node.tokens);
        }
        break;
      case NodeKind::Fudge: map[i] = out.add_fudge(); break;
      case NodeKind::Coord: map[i] = out.add_coord(node.label); break;
      case NodeKind::Root: break;
    }
  }
  for (const auto& a : g.deps()) out.add_dep(map[a.from.value], map[a.to.value]);
  for (const auto& a : g.members()) {
    out.add_member(map[a.from.value], map[a.to.value], g.tops().contains(a));
  }
  for (const auto& a : g.conjuncts()) out.add_conjunct(map[a.from.value], map[a.to.value]);
  for (const auto& a : g.coordinators()) out.add_coordinator(map[a.from.value], map[a.to.value]);
  for (const auto& a : g.anaph()) out.add_anaph(map[a.from.value], map[a.to.value]);

  const auto covered = covered_tokens(g);
  for (auto p : required_tokens) {
    if (!covered.contains(p)) out.add_lexical({p});
  }
  return out;
}

}  // namespace

std::pair<AnnotationGraph, AnnotationGraph> reconcile_lexical(const AnnotationGraph& g1,
                                                              const AnnotationGraph& g2) {
  if (!same_sentence(g1, g2)) {
    throw Error(ErrorCode::TokenListMismatch, "annotations are over different token lists");
  }
  std::set<TokenPosition> required = covered_tokens(g1);
  required.merge(covered_tokens(g2));
  return {relax_against(g1, lexical_keys(g2), required), relax_against(g2, lexical_keys(g1), required)};
}

AnnotationGraph drop_anaphora(const AnnotationGraph& g) {
  if (g.anaph().empty()) return g;
  AnnotationGraph out(std::vector<SourceToken>(g.tokens().begin(), g.tokens().end()));
  for (std::uint32_t i = 1; i < g.node_count(); ++i) {
    const auto& node = g.nodes()[i];
    switch (node.kind) {
      case NodeKind::Lexical: out.add_lexical(node.tokens); break;
      case NodeKind::Fudge: out.add_fudge(); break;
      case NodeKind::Coord: out.add_coord(node.label); break;
      case NodeKind::Root: break;
    }
  }
  for (const auto& a : g.deps()) out.add_dep(a.from, a.to);
  for (const auto& a : g.members()) out.add_member(a.from, a.to, g.tops().contains(a));
  for (const auto& a : g.conjuncts()) out.add_conjunct(a.from, a.to);
  for (const auto& a : g.coordinators()) out.add_coordinator(a.from, a.to);
  return out;
}

}  // namespace fudg
