#include "fudg/annotation.hpp"

#include <algorithm>
#include <utility>

#include "fudg/error.hpp"

namespace fudg {

std::string_view to_string(NodeKind kind) noexcept {
  switch (kind) {
    case NodeKind::Root: return "root";
    case NodeKind::Lexical: return "lexical";
    case NodeKind::Fudge: return "fudge";
    case NodeKind::Coord: return "coord";
  }
  return "unknown";
}

AnnotationGraph::AnnotationGraph(std::vector<SourceToken> tokens) : tokens_(std::move(tokens)) {
  nodes_.push_back(Node{NodeKind::Root, {}, "ROOT"});
}

void AnnotationGraph::check_node(NodeId id) const {
  if (id.value >= nodes_.size()) {
    throw Error(ErrorCode::InvalidArgument, "node id " + std::to_string(id.value) + " out of range");
  }
}

NodeId AnnotationGraph::add_lexical(std::vector<TokenPosition> positions) {
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
  if (positions.empty()) throw Error(ErrorCode::InvalidArgument, "lexical node without tokens");
  std::string label;
  for (auto p : positions) {
    if (p >= tokens_.size()) {
      throw Error(ErrorCode::InvalidArgument, "token position " + std::to_string(p) + " out of range");
    }
    if (!label.empty()) label += '_';
    label += tokens_[p].surface();
  }
  nodes_.push_back(Node{NodeKind::Lexical, std::move(positions), std::move(label)});
  return NodeId{static_cast<std::uint32_t>(nodes_.size() - 1)};
}

NodeId AnnotationGraph::add_fudge() {
  nodes_.push_back(Node{NodeKind::Fudge, {}, {}});
  return NodeId{static_cast<std::uint32_t>(nodes_.size() - 1)};
}

NodeId AnnotationGraph::add_coord(std::string var) {
  nodes_.push_back(Node{NodeKind::Coord, {}, std::move(var)});
  return NodeId{static_cast<std::uint32_t>(nodes_.size() - 1)};
}

void AnnotationGraph::add_dep(NodeId child, NodeId head) {
  check_node(child);
  check_node(head);
  deps_.insert(Arc{child, head});
}

void AnnotationGraph::add_member(NodeId member, NodeId fudge, bool designated_top) {
  check_node(member);
  check_node(fudge);
  members_.insert(Arc{member, fudge});
  if (designated_top) tops_.insert(Arc{member, fudge});
}

void AnnotationGraph::add_conjunct(NodeId conjunct, NodeId coord) {
  check_node(conjunct);
  check_node(coord);
  conjuncts_.insert(Arc{conjunct, coord});
}

void AnnotationGraph::add_coordinator(NodeId coordinator, NodeId coord) {
  check_node(coordinator);
  check_node(coord);
  coordinators_.insert(Arc{coordinator, coord});
}

void AnnotationGraph::add_anaph(NodeId a, NodeId b) {
  check_node(a);
  check_node(b);
  if (b < a) std::swap(a, b);
  anaph_.insert(Arc{a, b});
}

namespace {

std::vector<NodeId> nodes_of_kind(std::span<const Node> nodes, NodeKind kind) {
  std::vector<NodeId> out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].kind == kind) out.push_back(NodeId{static_cast<std::uint32_t>(i)});
  }
  return out;
}

std::vector<NodeId> sources_into(const std::set<Arc>& arcs, NodeId target) {
  std::vector<NodeId> out;
  for (const auto& arc : arcs) {
    if (arc.to == target) out.push_back(arc.from);
  }
  return out;
}

}  // namespace

std::vector<NodeId> AnnotationGraph::lexical_nodes() const {
  auto out = nodes_of_kind(nodes_, NodeKind::Lexical);
  std::stable_sort(out.begin(), out.end(), [this](NodeId a, NodeId b) {
    return node(a).tokens < node(b).tokens;
  });
  return out;
}

std::vector<NodeId> AnnotationGraph::fudge_nodes() const { return nodes_of_kind(nodes_, NodeKind::Fudge); }
std::vector<NodeId> AnnotationGraph::coord_nodes() const { return nodes_of_kind(nodes_, NodeKind::Coord); }

std::optional<NodeId> AnnotationGraph::lexical_for_token(TokenPosition position) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const auto& n = nodes_[i];
    if (n.kind == NodeKind::Lexical &&
        std::binary_search(n.tokens.begin(), n.tokens.end(), position)) {
      return NodeId{static_cast<std::uint32_t>(i)};
    }
  }
  return std::nullopt;
}

std::optional<NodeId> AnnotationGraph::find_lexical(std::span<const TokenPosition> positions) const {
  std::vector<TokenPosition> key(positions.begin(), positions.end());
  std::sort(key.begin(), key.end());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].kind == NodeKind::Lexical && nodes_[i].tokens == key) {
      return NodeId{static_cast<std::uint32_t>(i)};
    }
  }
  return std::nullopt;
}

std::optional<NodeId> AnnotationGraph::find_coord(std::string_view var) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].kind == NodeKind::Coord && nodes_[i].label == var) {
      return NodeId{static_cast<std::uint32_t>(i)};
    }
  }
  return std::nullopt;
}

std::vector<NodeId> AnnotationGraph::heads_of(NodeId child) const {
  std::vector<NodeId> out;
  for (auto it = deps_.lower_bound(Arc{child, NodeId{0}}); it != deps_.end() && it->from == child; ++it) {
    out.push_back(it->to);
  }
  return out;
}

std::vector<NodeId> AnnotationGraph::members_of(NodeId fudge) const { return sources_into(members_, fudge); }

std::optional<NodeId> AnnotationGraph::designated_top(NodeId fudge) const {
  for (const auto& arc : tops_) {
    if (arc.to == fudge) return arc.from;
  }
  return std::nullopt;
}

std::vector<NodeId> AnnotationGraph::conjuncts_of(NodeId coord) const { return sources_into(conjuncts_, coord); }
std::vector<NodeId> AnnotationGraph::coordinators_of(NodeId coord) const {
  return sources_into(coordinators_, coord);
}

std::vector<NodeId> AnnotationGraph::lexical_yield(NodeId id) const {
  std::vector<NodeId> out;
  std::vector<bool> seen(nodes_.size(), false);
  std::vector<NodeId> stack{id};
  while (!stack.empty()) {
    const NodeId cur = stack.back();
    stack.pop_back();
    if (seen[cur.value]) continue;
    seen[cur.value] = true;
    const auto& n = node(cur);
    if (n.kind == NodeKind::Lexical) {
      out.push_back(cur);
    } else if (n.kind == NodeKind::Fudge) {
      for (auto m : members_of(cur)) stack.push_back(m);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<TokenPosition> AnnotationGraph::leftmost_token(NodeId id) const {
  std::optional<TokenPosition> best;
  std::vector<bool> seen(nodes_.size(), false);
  std::vector<NodeId> stack{id};
  while (!stack.empty()) {
    const NodeId cur = stack.back();
    stack.pop_back();
    if (seen[cur.value]) continue;
    seen[cur.value] = true;
    const auto& n = node(cur);
    switch (n.kind) {
      case NodeKind::Lexical:
        if (!best || n.tokens.front() < *best) best = n.tokens.front();
        break;
      case NodeKind::Fudge:
        for (auto m : members_of(cur)) stack.push_back(m);
        break;
      case NodeKind::Coord:
        for (auto m : conjuncts_of(cur)) stack.push_back(m);
        for (auto m : coordinators_of(cur)) stack.push_back(m);
        break;
      case NodeKind::Root:
        break;
    }
  }
  return best;
}

std::string AnnotationGraph::display_name(NodeId id) const {
  const auto& n = node(id);
  switch (n.kind) {
    case NodeKind::Root: return "ROOT";
    case NodeKind::Lexical: return n.label;
    case NodeKind::Coord: return n.label;
    case NodeKind::Fudge: return "(f" + std::to_string(id.value) + ")";
  }
  return {};
}

bool Analysis::is_tree() const {
  const auto m = head.size();
  // 0 = unvisited, 1 = on the current path, 2 = known to reach the root.
  std::vector<std::uint8_t> state(m, 0);
  for (std::size_t start = 0; start < m; ++start) {
    std::size_t cur = start;
    std::vector<std::size_t> path;
    while (cur < m && state[cur] == 0) {
      state[cur] = 1;
      path.push_back(cur);
      if (head[cur] > m) return false;
      cur = head[cur];
    }
    if (cur < m && state[cur] == 1) return false;
    for (auto p : path) state[p] = 2;
  }
  return true;
}

std::size_t AnalysisHash::operator()(const Analysis& a) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto v : a.head) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace fudg
