#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fudg/annotation.hpp"
#include "fudg/error.hpp"

namespace fudg {

enum class ViolationCode {
  TwoHeads,
  Cycle,
  RootHasHead,
  BadEndpoint,
  FudgeTooSmall,
  MultipleTops,
  CyclicNesting,
  CoordMissingConjunct,
  CoordMissingCoordinator,
  TokenShared,
};

std::string_view to_string(ViolationCode code) noexcept;

struct Violation {
  ViolationCode code;
  std::vector<NodeId> nodes;
  std::string message;

  bool operator==(const Violation&) const = default;
};

/// Checks the structural well-formedness rules of a FUDG annotation graph and
/// returns every violation found (empty when the graph is valid). Whether the
/// annotation supports any analysis at all is decided by the underspecification
/// machinery, not here.
std::vector<Violation> validate(const AnnotationGraph& g);

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Throws ValidationError when `validate(g)` is nonempty.
void require_valid(const AnnotationGraph& g);

}  // namespace fudg
