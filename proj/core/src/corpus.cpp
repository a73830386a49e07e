#include "fudg/corpus.hpp"

#include <set>

#include <nlohmann/json.hpp>

#include "fudg/error.hpp"

namespace fudg {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

bool blank(std::string_view line) {
  return line.find_first_not_of(" \t\r\f\v") == std::string_view::npos;
}

std::string words_to_sentence(const nlohmann::json& tokens) {
  if (tokens.is_string()) return tokens.get<std::string>();
  if (!tokens.is_array()) throw Error(ErrorCode::BadInput, "\"tokens\" must be a string or an array of strings");
  std::string sentence;
  for (const auto& t : tokens) {
    if (!t.is_string()) throw Error(ErrorCode::BadInput, "\"tokens\" must be a string or an array of strings");
    const auto word = t.get<std::string>();
    if (word.empty() || word.find_first_of(" \t\r\n\f\v") != std::string::npos) {
      throw Error(ErrorCode::BadInput, "token \"" + word + "\" is empty or contains whitespace");
    }
    if (!sentence.empty()) sentence += ' ';
    sentence += word;
  }
  return sentence;
}

}  // namespace

std::vector<CorpusDocument> read_jsonl_corpus(std::string_view text) {
  std::vector<CorpusDocument> docs;
  std::set<std::string> ids;
  std::size_t number = 0;
  for (const auto line : split_lines(text)) {
    ++number;
    if (blank(line)) continue;
    const auto where = "line " + std::to_string(number) + ": ";
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorCode::BadInput, where + e.what());
    }
    if (!j.is_object() || !j.contains("tokens")) {
      throw Error(ErrorCode::BadInput, where + "expected an object with \"tokens\"");
    }
    CorpusDocument doc;
    try {
      doc.id = j.contains("id") ? j.at("id").get<std::string>() : std::to_string(number);
      doc.gfl = j.value("gfl", std::string{});
      if (j.contains("annotator") && !j.at("annotator").is_null()) {
        doc.annotator = j.at("annotator").get<std::string>();
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::BadInput, where + e.what());
    }
    try {
      doc.tokens = tokenize_input(words_to_sentence(j.at("tokens")));
    } catch (const Error& e) {
      throw Error(e.code(), where + e.what());
    }
    if (!ids.insert(doc.id).second) throw Error(ErrorCode::BadInput, where + "duplicate id \"" + doc.id + "\"");
    docs.push_back(std::move(doc));
  }
  return docs;
}

std::vector<CorpusDocument> read_text_corpus(std::string_view text) {
  std::vector<CorpusDocument> docs;
  std::vector<std::string_view> block;
  auto flush = [&] {
    if (block.empty()) return;
    CorpusDocument doc;
    doc.id = std::to_string(docs.size() + 1);
    doc.tokens = tokenize_input(block.front());
    for (std::size_t i = 1; i < block.size(); ++i) {
      doc.gfl += block[i];
      doc.gfl += '\n';
    }
    docs.push_back(std::move(doc));
    block.clear();
  };
  for (const auto line : split_lines(text)) {
    if (blank(line)) {
      flush();
    } else {
      block.push_back(line);
    }
  }
  flush();
  return docs;
}

std::vector<CorpusDocument> read_corpus(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n\f\v");
  if (first != std::string_view::npos && text[first] == '{') return read_jsonl_corpus(text);
  return read_text_corpus(text);
}

std::string write_jsonl_corpus(const std::vector<CorpusDocument>& docs) {
  std::string out;
  for (const auto& doc : docs) {
    nlohmann::ordered_json j;
    j["id"] = doc.id;
    auto words = nlohmann::ordered_json::array();
    for (const auto& t : doc.tokens) words.push_back(t.surface());
    j["tokens"] = words;
    j["gfl"] = doc.gfl;
    if (doc.annotator) j["annotator"] = *doc.annotator;
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace fudg
