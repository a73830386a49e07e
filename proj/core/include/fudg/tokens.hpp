#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fudg {

using TokenPosition = std::size_t;

/// One whitespace-delimited token of the input sentence.
///
/// `word` is the token text with any `~k` index suffix removed. Repeated
/// words are numbered left to right from 1; `occurrence_count` is the total
/// number of times the word occurs in the sentence.
struct SourceToken {
  std::string word;
  TokenPosition position = 0;
  std::size_t occurrence = 1;
  std::size_t occurrence_count = 1;

  /// The display form: the word, suffixed with `~k` when it is repeated.
  std::string surface() const;

  bool operator==(const SourceToken&) const = default;
};

/// A reference to a token from inside a GFL fragment.
struct TokenRef {
  std::string word;
  std::optional<std::size_t> occurrence;

  std::string to_string() const;
  bool operator==(const TokenRef&) const = default;
};

/// Splits `text` on whitespace. An explicit `~k` suffix in the input is
/// checked against the left-to-right numbering. Throws GflError(NoTokens)
/// for blank input.
std::vector<SourceToken> tokenize_input(std::string_view text);

/// Resolves a reference to exactly one token. Throws GflError with
/// AmbiguousToken, UnknownToken or BadIndex.
const SourceToken& resolve_token(const TokenRef& ref, std::span<const SourceToken> tokens);

/// Splits a `word~k` spelling into its parts. A suffix is recognised only when
/// both the word and the index are nonempty and the index is all digits.
TokenRef split_token_index(std::string_view text);

/// Joins the token surfaces with single spaces.
std::string join_surfaces(std::span<const SourceToken> tokens);

}  // namespace fudg
