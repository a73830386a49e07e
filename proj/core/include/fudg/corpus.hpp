#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fudg/tokens.hpp"

namespace fudg {

struct CorpusDocument {
  std::string id;
  std::vector<SourceToken> tokens;
  std::string gfl;
  std::optional<std::string> annotator;

  bool operator==(const CorpusDocument&) const = default;
};

/// One JSON object per nonblank line:
/// {"id": ..., "tokens": "w1 w2 ..." or ["w1", ...], "gfl": ..., "annotator": ...}.
/// `id` defaults to the 1-based line ordinal. Throws Error(BadInput) on
/// malformed lines or repeated ids.
std::vector<CorpusDocument> read_jsonl_corpus(std::string_view text);

/// Blank-line separated blocks; the first line of a block is the sentence
/// and the remaining lines are its GFL. Ids are the 1-based block ordinals.
std::vector<CorpusDocument> read_text_corpus(std::string_view text);

/// JSON lines when the first non-whitespace character is '{', the block
/// format otherwise.
std::vector<CorpusDocument> read_corpus(std::string_view text);

std::string write_jsonl_corpus(const std::vector<CorpusDocument>& docs);

}  // namespace fudg
