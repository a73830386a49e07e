#include "fudg/error.hpp"

namespace fudg {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NoTokens: return "NoTokens";
    case ErrorCode::AmbiguousToken: return "AmbiguousToken";
    case ErrorCode::UnknownToken: return "UnknownToken";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::InconsistentIndex: return "InconsistentIndex";
    case ErrorCode::UnbalancedBracket: return "UnbalancedBracket";
    case ErrorCode::EmptyGroup: return "EmptyGroup";
    case ErrorCode::TwoHeads: return "TwoHeads";
    case ErrorCode::MalformedCoordDef: return "MalformedCoordDef";
    case ErrorCode::DanglingOperator: return "DanglingOperator";
    case ErrorCode::MisplacedMark: return "MisplacedMark";
    case ErrorCode::MisplacedSet: return "MisplacedSet";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::DuplicateVariable: return "DuplicateVariable";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::InvalidAnalysis: return "InvalidAnalysis";
    case ErrorCode::TokenListMismatch: return "TokenListMismatch";
    case ErrorCode::CyclicNesting: return "CyclicNesting";
    case ErrorCode::EmptySupport: return "EmptySupport";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::PromOutOfRange: return "PromOutOfRange";
    case ErrorCode::UndefinedCommitment: return "UndefinedCommitment";
    case ErrorCode::NotExpressible: return "NotExpressible";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

}  // namespace fudg
