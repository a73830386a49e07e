#include "oracle.hpp"

#include <functional>
#include <optional>

#include "fudg/normalize.hpp"

namespace fudg::testing {

std::vector<Analysis> all_trees(std::size_t m) {
  std::vector<Analysis> out;
  Analysis t{std::vector<std::uint32_t>(m, 0)};
  std::function<void(std::size_t)> fill = [&](std::size_t v) {
    if (v == m) {
      if (t.is_tree()) out.push_back(t);
      return;
    }
    for (std::uint32_t h = 0; h <= m; ++h) {
      if (h == v) continue;
      t.head[v] = h;
      fill(v + 1);
    }
  };
  fill(0);
  return out;
}

namespace {

// Node of `g` standing for the tree position `index` (the root for m).
struct TreeView {
  const AnnotationGraph& g;
  const Analysis& t;
  std::vector<NodeId> lexical;
  std::map<NodeId, std::uint32_t> index;

  TreeView(const AnnotationGraph& graph, const Analysis& tree) : g(graph), t(tree), lexical(graph.lexical_nodes()) {
    for (std::uint32_t i = 0; i < lexical.size(); ++i) index[lexical[i]] = i;
    index[AnnotationGraph::root()] = static_cast<std::uint32_t>(lexical.size());
  }

  std::uint32_t parent(std::uint32_t v) const { return t.head[v]; }
};

// The tree position a node attaches through: itself for words and the root,
// the single member top with an outside parent for a fudge node.
std::optional<std::uint32_t> top_of(const TreeView& view, NodeId node, std::map<NodeId, std::optional<std::uint32_t>>& memo) {
  if (view.g.kind(node) != NodeKind::Fudge) return view.index.at(node);
  if (const auto it = memo.find(node); it != memo.end()) return it->second;
  memo[node] = std::nullopt;
  std::set<std::uint32_t> tops;
  std::map<NodeId, std::uint32_t> member_top;
  for (const auto member : view.g.members_of(node)) {
    const auto t = top_of(view, member, memo);
    if (!t) return std::nullopt;
    tops.insert(*t);
    member_top[member] = *t;
  }
  std::vector<std::uint32_t> external;
  for (const auto t : tops) {
    if (!tops.contains(view.parent(t))) external.push_back(t);
  }
  if (external.size() != 1) return std::nullopt;
  if (const auto d = view.g.designated_top(node); d && member_top.at(*d) != external.front()) return std::nullopt;
  memo[node] = external.front();
  return external.front();
}

}  // namespace

bool oracle_supports(const AnnotationGraph& input, const Analysis& t) {
  const auto g = simplify_coordination(input);
  const TreeView view(g, t);
  std::map<NodeId, std::optional<std::uint32_t>> memo;
  for (const auto f : g.fudge_nodes()) {
    if (!top_of(view, f, memo)) return false;
  }
  for (const auto& arc : g.deps()) {
    const auto child = top_of(view, arc.from, memo);
    const auto head = top_of(view, arc.to, memo);
    if (!child || !head || *child == view.t.size() || view.parent(*child) != *head) return false;
  }
  return true;
}

OracleResult oracle(const AnnotationGraph& input) {
  const auto g = simplify_coordination(input);
  OracleResult out;
  const auto lexical = g.lexical_nodes();
  for (const auto id : lexical) out.parents[id];
  for (const auto f : g.fudge_nodes()) out.tops[f];
  for (const auto& t : all_trees(lexical.size())) {
    if (!oracle_supports(g, t)) continue;
    ++out.prom;
    out.supported.push_back(t);
    for (std::size_t i = 0; i < lexical.size(); ++i) {
      const auto h = t.head[i];
      out.parents[lexical[i]].insert(h == t.size() ? AnnotationGraph::root() : lexical[h]);
    }
    const TreeView view(g, t);
    std::map<NodeId, std::optional<std::uint32_t>> memo;
    for (const auto f : g.fudge_nodes()) {
      const auto top = *top_of(view, f, memo);
      out.tops[f].insert(lexical[top]);
    }
  }
  return out;
}

}  // namespace fudg::testing
