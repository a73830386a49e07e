#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fudg/annotation.hpp"
#include "fudg/tokens.hpp"
#include "fudg/validate.hpp"

namespace fudg {

namespace gfl {

enum class ExprKind { Token, Multiword, Var, ChainGroup, Fudge, Set };
enum class Mark { None, Top, Root };

struct Chain;

/// One node expression of a GFL fragment.
struct Expr {
  ExprKind kind = ExprKind::Token;
  Mark mark = Mark::None;
  /// 1-based column of the expression's first character.
  std::size_t column = 0;

  TokenRef token;                 // Token
  std::vector<TokenRef> words;    // Multiword
  std::string var;                // Var, including the leading '$'
  std::vector<Chain> items;       // ChainGroup (exactly one) and Fudge (two or more)
  std::vector<Expr> elements;     // Set
  /// Fudge: index into `items` of the designated top.
  std::optional<std::size_t> top;
};

/// Node expressions linked by `<` and `>`. Arcs are (dependent, head) pairs
/// of indices into `items`; `head` is the one item without a head.
struct Chain {
  std::vector<Expr> items;
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  std::size_t head = 0;

  const Expr& head_expr() const { return items.at(head); }
};

enum class FragmentKind {
  Chain,
  FudgeExpr,
  SetOfDependents,
  Multiword,
  CoordDef,
  AnaphLink,
  RootMark,
  Mention,
};

std::string_view to_string(FragmentKind kind) noexcept;

struct Fragment {
  FragmentKind kind = FragmentKind::Chain;
  /// Every kind except CoordDef and AnaphLink.
  Chain chain;
  /// CoordDef.
  std::string var;
  std::vector<Expr> conjuncts;
  std::vector<Expr> coordinators;
  /// AnaphLink: two or more coreferent operands.
  std::vector<Expr> operands;
};

struct Line {
  std::size_t number = 0;
  Fragment fragment;
};

}  // namespace gfl

/// Parses one GFL fragment. Throws GflError with UnbalancedBracket,
/// EmptyGroup, TwoHeads, MalformedCoordDef, DanglingOperator, MisplacedMark,
/// MisplacedSet or BadInput; the column is set where known.
gfl::Fragment parse_fragment(std::string_view line);

/// True for blank lines and lines whose first non-blank character is '#'.
bool is_ignorable_line(std::string_view line);

/// Parses every fragment of a multi-line GFL text, skipping blank and
/// comment lines. Errors carry the 1-based line number.
std::vector<gfl::Line> parse_gfl(std::string_view text);

struct Assembly {
  AnnotationGraph graph;
  std::vector<Violation> violations;
};

/// Builds the annotation graph described by `text` without throwing on
/// validation problems. References to the same token unify to one node and
/// a token inside a multiword resolves to the multiword. A text without
/// fragments yields one unattached lexical node per token; otherwise only
/// referenced tokens are lexicalized. Syntax and reference errors throw
/// GflError (UnknownVariable and DuplicateVariable included).
Assembly assemble_annotation(std::span<const SourceToken> tokens, std::string_view text);

/// As assemble_annotation, but throws ValidationError for an invalid graph.
AnnotationGraph parse_annotation(std::span<const SourceToken> tokens, std::string_view text);
AnnotationGraph parse_annotation(std::string_view sentence, std::string_view text);

/// Writes GFL that parses back to an isomorphic graph. Throws
/// Error(NotExpressible) for graphs GFL cannot state, such as a fudge node
/// that is a member of two fudge expressions or a nested fudge expression
/// with a head of its own.
std::string emit_gfl(const AnnotationGraph& g);

/// The spelling of a token inside GFL, with `~k` for repeated words and
/// backslash escapes where the word would otherwise read as syntax.
std::string gfl_token_reference(const SourceToken& token);

}  // namespace fudg
