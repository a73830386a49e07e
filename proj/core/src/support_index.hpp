#pragma once

// Supported parents over the index space of a compiled annotation.

#include <cstdint>
#include <vector>

#include "constraints.hpp"
#include "fudg/annotation.hpp"
#include "fudg/underspec.hpp"

namespace fudg::detail {

struct Prepared {
  Constraints c;
  /// Node ids in the caller's graph of the lexical vertices and of the fudge
  /// nodes in `c.fudges` order.
  std::vector<NodeId> lexical;
  std::vector<NodeId> fudges;
};

/// Simplifies coordination and compiles; anaphoric links play no part.
Prepared prepare(const AnnotationGraph& g);

struct IndexSupport {
  std::vector<std::vector<std::uint32_t>> parents;
  /// Per fudge expression, in `c.fudges` order.
  std::vector<std::vector<std::uint32_t>> tops;
  /// Vertices reported as having no supported parent.
  std::vector<std::uint32_t> empty;
  bool exact = true;

  bool consistent() const noexcept { return empty.empty(); }
};

/// Candidate tops from the bottom-up pass.
std::vector<std::vector<std::uint32_t>> local_tops(const Constraints& c);

/// The upward/downward inference alone: a superset of the parents observed
/// in supported analyses.
std::vector<std::vector<std::uint32_t>> local_parents(const Constraints& c);

IndexSupport index_support(const Constraints& c, const SupportOptions& options);

}  // namespace fudg::detail
