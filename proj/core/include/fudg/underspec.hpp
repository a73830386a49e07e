#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fudg/annotation.hpp"
#include "fudg/error.hpp"

namespace fudg {

/// Possible parents of every lexical node and possible tops of every fudge
/// node, keyed by node ids of the annotation they were computed from.
struct SupportMap {
  std::map<NodeId, std::vector<NodeId>> parents;
  std::map<NodeId, std::vector<NodeId>> tops;
  /// True when `parents` holds exactly the parents observed across the
  /// supported analyses; false when a search budget left some edges
  /// unconfirmed (the sets are then supersets).
  bool exact = true;

  bool operator==(const SupportMap&) const = default;
};

enum class SupportStrategy {
  /// Exhaustive refinement when the locally supported edge graph has at
  /// most `exhaustive_limit` spanning trees, witness search otherwise.
  Auto,
  Exhaustive,
  Witness,
  /// Only the upward/downward inference, without refinement.
  LocalOnly,
};

struct SupportOptions {
  SupportStrategy strategy = SupportStrategy::Auto;
  std::uint64_t exhaustive_limit = 50'000;
  /// Search steps allowed per candidate edge in witness search.
  std::uint64_t witness_budget = 200'000;
};

struct SupportResult {
  SupportMap map;
  /// Lexical nodes without any supported parent. When the annotation is
  /// inconsistent every parent set is emptied; this list then names the
  /// nodes the local inference already found unattachable, or every
  /// lexical node when the conflict only shows globally.
  std::vector<NodeId> empty;

  bool consistent() const noexcept { return empty.empty(); }
};

class EmptySupportError : public Error {
 public:
  explicit EmptySupportError(std::vector<NodeId> nodes, const std::string& names)
      : Error(ErrorCode::EmptySupport, "conflicting constraints: no supported parent for " + names),
        nodes_(std::move(nodes)) {}

  const std::vector<NodeId>& nodes() const noexcept { return nodes_; }

 private:
  std::vector<NodeId> nodes_;
};

/// Candidate tops of every fudge node, bottom-up: the designated member's
/// candidates when a top is designated, otherwise the union over members.
/// Throws Error(CyclicNesting).
std::map<NodeId, std::vector<NodeId>> possible_tops(const AnnotationGraph& g);

/// Never throws for inconsistent annotations; see SupportResult::empty.
SupportResult compute_support(const AnnotationGraph& g, const SupportOptions& options = {});

/// Throws EmptySupportError for inconsistent annotations.
SupportMap supported_parents(const AnnotationGraph& g, const SupportOptions& options = {});

/// Candidate parents over the index space of Analysis: vertices 0..m-1 are
/// the lexical nodes in AnnotationGraph::lexical_nodes() order and m is the
/// root.
struct SupportedEdgeGraph {
  /// Node ids of the vertices, the root last. Empty for graphs not derived
  /// from an annotation.
  std::vector<NodeId> vertices;
  /// Sorted candidate parents of each lexical vertex.
  std::vector<std::vector<std::uint32_t>> heads;

  std::size_t lexical_count() const noexcept { return heads.size(); }
  std::uint32_t root_index() const noexcept { return static_cast<std::uint32_t>(heads.size()); }
  std::size_t edge_count() const noexcept;

  /// Every vertex may take any other vertex or the root as parent.
  static SupportedEdgeGraph complete(std::size_t lexical_count);
};

/// Throws EmptySupportError for inconsistent annotations.
SupportedEdgeGraph supported_edge_graph(const AnnotationGraph& g, const SupportOptions& options = {});

SupportedEdgeGraph edge_graph_of(const AnnotationGraph& g, const SupportMap& map);

}  // namespace fudg
