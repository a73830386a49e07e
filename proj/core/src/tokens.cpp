#include "fudg/tokens.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "fudg/error.hpp"

namespace fudg {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::string SourceToken::surface() const {
  if (occurrence_count <= 1) return word;
  return word + "~" + std::to_string(occurrence);
}

std::string TokenRef::to_string() const {
  if (!occurrence) return word;
  return word + "~" + std::to_string(*occurrence);
}

TokenRef split_token_index(std::string_view text) {
  const auto tilde = text.rfind('~');
  if (tilde == std::string_view::npos || tilde == 0 || tilde + 1 == text.size()) {
    return TokenRef{std::string(text), std::nullopt};
  }
  const auto digits = text.substr(tilde + 1);
  if (!std::all_of(digits.begin(), digits.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; })) {
    return TokenRef{std::string(text), std::nullopt};
  }
  // Leading zeros and absurd lengths are not indices.
  if (digits.size() > 9 || digits.front() == '0') {
    return TokenRef{std::string(text), std::nullopt};
  }
  return TokenRef{std::string(text.substr(0, tilde)), std::stoul(std::string(digits))};
}

std::vector<SourceToken> tokenize_input(std::string_view text) {
  std::vector<SourceToken> tokens;
  std::vector<std::optional<std::size_t>> stated;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    if (i >= text.size()) break;
    const std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    TokenRef ref = split_token_index(text.substr(start, i - start));
    SourceToken token;
    token.word = std::move(ref.word);
    token.position = tokens.size();
    tokens.push_back(std::move(token));
    stated.push_back(ref.occurrence);
  }
  if (tokens.empty()) throw GflError(ErrorCode::NoTokens, "no tokens");

  std::map<std::string, std::size_t> seen;
  for (auto& token : tokens) token.occurrence = ++seen[token.word];
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    auto& token = tokens[k];
    token.occurrence_count = seen[token.word];
    if (stated[k] && token.occurrence_count > 1 && *stated[k] != token.occurrence) {
      throw GflError(ErrorCode::InconsistentIndex,
                     "input token " + token.word + "~" + std::to_string(*stated[k]) +
                         " is occurrence " + std::to_string(token.occurrence) +
                         " of '" + token.word + "'");
    }
  }
  return tokens;
}

const SourceToken& resolve_token(const TokenRef& ref, std::span<const SourceToken> tokens) {
  std::vector<const SourceToken*> matches;
  for (const auto& token : tokens) {
    if (token.word == ref.word) matches.push_back(&token);
  }
  if (matches.empty()) {
    throw GflError(ErrorCode::UnknownToken, "unknown token '" + ref.to_string() + "'");
  }
  if (!ref.occurrence) {
    if (matches.size() > 1) {
      throw GflError(ErrorCode::AmbiguousToken,
                     "token '" + ref.word + "' occurs " + std::to_string(matches.size()) +
                         " times; it must be indexed");
    }
    return *matches.front();
  }
  if (*ref.occurrence == 0 || *ref.occurrence > matches.size()) {
    throw GflError(ErrorCode::BadIndex, "token '" + ref.to_string() + "' does not exist; '" +
                                            ref.word + "' occurs " +
                                            std::to_string(matches.size()) + " time(s)");
  }
  return *matches[*ref.occurrence - 1];
}

std::string join_surfaces(std::span<const SourceToken> tokens) {
  std::string out;
  for (const auto& token : tokens) {
    if (!out.empty()) out += ' ';
    out += token.surface();
  }
  return out;
}

}  // namespace fudg
