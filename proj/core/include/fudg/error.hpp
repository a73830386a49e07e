#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fudg {

enum class ErrorCode {
  NoTokens,
  AmbiguousToken,
  UnknownToken,
  BadIndex,
  InconsistentIndex,
  UnbalancedBracket,
  EmptyGroup,
  TwoHeads,
  MalformedCoordDef,
  DanglingOperator,
  MisplacedMark,
  MisplacedSet,
  UnknownVariable,
  DuplicateVariable,
  ValidationFailed,
  DomainMismatch,
  InvalidAnalysis,
  TokenListMismatch,
  CyclicNesting,
  EmptySupport,
  CapExceeded,
  PromOutOfRange,
  UndefinedCommitment,
  NotExpressible,
  InvalidArgument,
  BadInput,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base class of every error thrown by the library. The code is stable and
/// is what the CLI and the HTTP API report.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// A GFL syntax or reference error, located at a 1-based line (0 when the
/// error does not belong to a particular line) and an optional column.
class GflError : public Error {
 public:
  GflError(ErrorCode code, const std::string& message, std::size_t line = 0,
           std::optional<std::size_t> column = std::nullopt)
      : Error(code, message), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::optional<std::size_t> column() const noexcept { return column_; }
  GflError at_line(std::size_t line) const {
    GflError copy = *this;
    copy.line_ = line;
    return copy;
  }

 private:
  std::size_t line_;
  std::optional<std::size_t> column_;
};

class CapExceeded : public Error {
 public:
  CapExceeded(std::uint64_t cap, std::uint64_t partial_count)
      : Error(ErrorCode::CapExceeded,
              "enumeration exceeded cap of " + std::to_string(cap) + " analyses"),
        cap_(cap),
        partial_(partial_count) {}

  std::uint64_t cap() const noexcept { return cap_; }
  /// Number of analyses produced before the cap stopped the enumeration.
  std::uint64_t partial_count() const noexcept { return partial_; }

 private:
  std::uint64_t cap_;
  std::uint64_t partial_;
};

}  // namespace fudg
