#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "fudg/tokens.hpp"

namespace fudg {

struct NodeId {
  std::uint32_t value = 0;
  auto operator<=>(const NodeId&) const = default;
};

enum class NodeKind { Root, Lexical, Fudge, Coord };

std::string_view to_string(NodeKind kind) noexcept;

struct Node {
  NodeKind kind = NodeKind::Lexical;
  /// Sorted source positions; nonempty for lexical nodes only.
  std::vector<TokenPosition> tokens;
  /// Lexical nodes: token surfaces joined with '_'. Coordination nodes: the
  /// `$var` name.
  std::string label;
};

/// A directed edge `from -> to`. For dependency arcs `from` is the dependent;
/// for member, conjunct and coordinator arcs `to` is the fudge or
/// coordination node.
struct Arc {
  NodeId from;
  NodeId to;
  auto operator<=>(const Arc&) const = default;
};

/// A FUDG annotation of one sentence.
///
/// Node 0 is always the root. Edges are kept in ordered sets, so iteration
/// order (and everything derived from it) is deterministic.
class AnnotationGraph {
 public:
  AnnotationGraph() : AnnotationGraph(std::vector<SourceToken>{}) {}
  explicit AnnotationGraph(std::vector<SourceToken> tokens);

  static constexpr NodeId root() noexcept { return NodeId{0}; }

  NodeId add_lexical(std::vector<TokenPosition> positions);
  NodeId add_fudge();
  NodeId add_coord(std::string var);

  void add_dep(NodeId child, NodeId head);
  void add_member(NodeId member, NodeId fudge, bool designated_top = false);
  void add_conjunct(NodeId conjunct, NodeId coord);
  void add_coordinator(NodeId coordinator, NodeId coord);
  void add_anaph(NodeId a, NodeId b);

  std::span<const SourceToken> tokens() const noexcept { return tokens_; }
  std::span<const Node> nodes() const noexcept { return nodes_; }
  const Node& node(NodeId id) const { return nodes_.at(id.value); }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  NodeKind kind(NodeId id) const { return node(id).kind; }

  const std::set<Arc>& deps() const noexcept { return deps_; }
  const std::set<Arc>& members() const noexcept { return members_; }
  const std::set<Arc>& tops() const noexcept { return tops_; }
  const std::set<Arc>& conjuncts() const noexcept { return conjuncts_; }
  const std::set<Arc>& coordinators() const noexcept { return coordinators_; }
  /// Undirected; stored with `from < to`.
  const std::set<Arc>& anaph() const noexcept { return anaph_; }

  /// Lexical nodes ordered by their token positions. This order defines the
  /// index space of Analysis, so two graphs with the same lexical nodes share
  /// it.
  std::vector<NodeId> lexical_nodes() const;
  std::vector<NodeId> fudge_nodes() const;
  std::vector<NodeId> coord_nodes() const;

  std::optional<NodeId> lexical_for_token(TokenPosition position) const;
  std::optional<NodeId> find_lexical(std::span<const TokenPosition> positions) const;
  std::optional<NodeId> find_coord(std::string_view var) const;

  std::vector<NodeId> heads_of(NodeId child) const;
  std::vector<NodeId> members_of(NodeId fudge) const;
  std::optional<NodeId> designated_top(NodeId fudge) const;
  std::vector<NodeId> conjuncts_of(NodeId coord) const;
  std::vector<NodeId> coordinators_of(NodeId coord) const;

  /// Lexical nodes reachable from `id` through member arcs (itself for a
  /// lexical node).
  std::vector<NodeId> lexical_yield(NodeId id) const;
  /// Smallest token position in the yield of `id`, following conjunct and
  /// coordinator arcs for coordination nodes.
  std::optional<TokenPosition> leftmost_token(NodeId id) const;

  /// Human-readable name: the lexical label, `$var`, `(f3)` or `ROOT`.
  std::string display_name(NodeId id) const;

 private:
  void check_node(NodeId id) const;

  std::vector<SourceToken> tokens_;
  std::vector<Node> nodes_;
  std::set<Arc> deps_;
  std::set<Arc> members_;
  std::set<Arc> tops_;
  std::set<Arc> conjuncts_;
  std::set<Arc> coordinators_;
  std::set<Arc> anaph_;
};

/// A fully specified analysis: `head[i]` is the parent of the i-th lexical
/// node in `AnnotationGraph::lexical_nodes()` order, or `head.size()` for the
/// root.
struct Analysis {
  std::vector<std::uint32_t> head;

  std::size_t size() const noexcept { return head.size(); }
  std::uint32_t root_index() const noexcept { return static_cast<std::uint32_t>(head.size()); }
  bool is_tree() const;
  bool operator==(const Analysis&) const = default;
};

struct AnalysisHash {
  std::size_t operator()(const Analysis& a) const noexcept;
};

}  // namespace fudg
