#include "fudg/compatibility.hpp"

#include "constraints.hpp"
#include "fudg/error.hpp"
#include "fudg/normalize.hpp"

namespace fudg {

CompatibilityChecker::CompatibilityChecker(const AnnotationGraph& g)
    : constraints_(std::make_unique<const detail::Constraints>(detail::compile(simplify_coordination(g)))) {}

CompatibilityChecker::~CompatibilityChecker() = default;
CompatibilityChecker::CompatibilityChecker(CompatibilityChecker&&) noexcept = default;
CompatibilityChecker& CompatibilityChecker::operator=(CompatibilityChecker&&) noexcept = default;

std::size_t CompatibilityChecker::lexical_count() const noexcept { return constraints_->m; }

bool CompatibilityChecker::supports(const Analysis& t) const {
  if (t.size() != constraints_->m) {
    throw Error(ErrorCode::DomainMismatch, "analysis has " + std::to_string(t.size()) +
                                               " nodes but the annotation has " +
                                               std::to_string(constraints_->m) + " lexical nodes");
  }
  if (!t.is_tree()) throw Error(ErrorCode::InvalidAnalysis, "analysis is not a rooted tree");
  detail::Evaluator eval(*constraints_);
  return eval(t.head) == detail::Verdict::Satisfied;
}

bool supports(const AnnotationGraph& g, const Analysis& t) { return CompatibilityChecker(g).supports(t); }

}  // namespace fudg
