#pragma once

#include <memory>

#include "fudg/annotation.hpp"

namespace fudg {

namespace detail {
struct Constraints;
}

/// Decides whether full analyses are compatible with an annotation.
///
/// Coordination is simplified and anaphoric links are ignored. An analysis
/// is compatible when every dependency arc holds (arcs into a fudge node must
/// reach its top), the members of every fudge expression form a connected
/// subtree with exactly one externally attached member, and that member is
/// the designated top where one is given.
class CompatibilityChecker {
 public:
  explicit CompatibilityChecker(const AnnotationGraph& g);
  ~CompatibilityChecker();
  CompatibilityChecker(CompatibilityChecker&&) noexcept;
  CompatibilityChecker& operator=(CompatibilityChecker&&) noexcept;

  /// Throws Error(DomainMismatch) when `t` does not cover exactly the
  /// lexical nodes of the annotation and Error(InvalidAnalysis) when it is
  /// not a rooted tree.
  bool supports(const Analysis& t) const;

  std::size_t lexical_count() const noexcept;

 private:
  std::unique_ptr<const detail::Constraints> constraints_;
};

bool supports(const AnnotationGraph& g, const Analysis& t);

}  // namespace fudg
