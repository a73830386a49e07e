#pragma once

// Index-space form of a coordination-free annotation, shared by the
// compatibility checker, the underspecification inference and the metrics.
// Lexical nodes are numbered 0..m-1 in AnnotationGraph::lexical_nodes()
// order and the root is m.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fudg/annotation.hpp"

namespace fudg::detail {

inline constexpr std::uint32_t kUnassigned = UINT32_MAX;

struct Unit {
  enum class Kind : std::uint8_t { Lexical, Root, Fudge };
  Kind kind = Kind::Lexical;
  std::uint32_t index = 0;

  bool operator==(const Unit&) const = default;
};

struct FudgeSpec {
  std::vector<Unit> members;
  /// Index into `members` of the designated top, if any.
  std::optional<std::size_t> designated;
};

struct Constraints {
  std::size_t m = 0;
  /// Fudge expressions ordered so that nested expressions precede the ones
  /// containing them.
  std::vector<FudgeSpec> fudges;
  /// Dependency arcs (child, head); children are never the root.
  std::vector<std::pair<Unit, Unit>> arcs;

  std::vector<NodeId> lexical_ids;
  std::vector<NodeId> fudge_ids;

  std::uint32_t root() const noexcept { return static_cast<std::uint32_t>(m); }
};

/// Throws Error(InvalidArgument) when the graph still has coordination nodes
/// and Error(CyclicNesting) when fudge membership is cyclic.
Constraints compile(const AnnotationGraph& g);

/// Vertex order for tree search: the lexical yield of each fudge expression,
/// nested ones first, each followed by the lexical dependents of arcs
/// headed by it, then every remaining vertex. Keeps the vertices of one
/// constraint adjacent so conflicts surface early.
std::vector<std::uint32_t> search_order(const Constraints& c);

enum class Verdict { Violated, Satisfied, Unknown };

/// Evaluates the constraints against a (possibly partial) parent assignment.
/// Entries equal to kUnassigned are open. The assignment itself must be
/// acyclic; Violated is returned only when no completion can satisfy it.
class Evaluator {
 public:
  explicit Evaluator(const Constraints& c);

  Verdict operator()(std::span<const std::uint32_t> parent);

  /// Top of each fudge expression from the last evaluation (kUnassigned when
  /// undetermined).
  std::span<const std::uint32_t> tops() const noexcept { return tops_; }

 private:
  std::uint32_t unit_top(const Unit& u) const;

  const Constraints* c_;
  std::vector<std::uint32_t> tops_;
  std::vector<std::uint32_t> scratch_;
};

}  // namespace fudg::detail
