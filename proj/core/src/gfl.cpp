#include "fudg/gfl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "fudg/error.hpp"

namespace fudg {

namespace gfl {

std::string_view to_string(FragmentKind kind) noexcept {
  switch (kind) {
    case FragmentKind::Chain: return "chain";
    case FragmentKind::FudgeExpr: return "fudge-expr";
    case FragmentKind::SetOfDependents: return "set-of-dependents";
    case FragmentKind::Multiword: return "multiword";
    case FragmentKind::CoordDef: return "coord-def";
    case FragmentKind::AnaphLink: return "anaph-link";
    case FragmentKind::RootMark: return "root-mark";
    case FragmentKind::Mention: return "mention";
  }
  return "unknown";
}

}  // namespace gfl

namespace {

using gfl::Chain;
using gfl::Expr;
using gfl::ExprKind;
using gfl::Fragment;
using gfl::FragmentKind;
using gfl::Mark;

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// ---------------------------------------------------------------------------
// Lexer

enum class Tok { Word, Var, LParen, RParen, LBrack, RBrack, LBrace, RBrace, Gt, Lt, Eq, DColon, Star, DStar, End };

struct Lexeme {
  Tok kind = Tok::End;
  std::string text;
  std::size_t column = 0;
};

std::string_view describe(Tok t) {
  switch (t) {
    case Tok::Word: return "token";
    case Tok::Var: return "variable";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrack: return "'['";
    case Tok::RBrack: return "']'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Gt: return "'>'";
    case Tok::Lt: return "'<'";
    case Tok::Eq: return "'='";
    case Tok::DColon: return "'::'";
    case Tok::Star: return "'*'";
    case Tok::DStar: return "'**'";
    case Tok::End: return "end of line";
  }
  return "?";
}

bool is_bracket(char c) {
  return c == '(' || c == ')' || c == '[' || c == ']' || c == '{' || c == '}';
}

Tok bracket_kind(char c) {
  switch (c) {
    case '(': return Tok::LParen;
    case ')': return Tok::RParen;
    case '[': return Tok::LBrack;
    case ']': return Tok::RBrack;
    case '{': return Tok::LBrace;
    default: return Tok::RBrace;
  }
}

std::optional<Tok> operator_kind(std::string_view text) {
  if (text == ">") return Tok::Gt;
  if (text == "<") return Tok::Lt;
  if (text == "=") return Tok::Eq;
  if (text == "::") return Tok::DColon;
  return std::nullopt;
}

bool valid_var_name(std::string_view name) {
  if (name.empty()) return false;
  const auto first = static_cast<unsigned char>(name.front());
  if (!std::isalpha(first) && name.front() != '_') return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
  });
}

std::vector<Lexeme> lex(std::string_view line) {
  std::vector<Lexeme> out;
  std::size_t i = 0;

  std::string word;
  std::size_t word_col = 0;
  bool word_escaped = false;
  bool first_escaped = false;

  auto flush = [&]() {
    if (word.empty()) return;
    if (!word_escaped) {
      if (auto op = operator_kind(word)) {
        out.push_back(Lexeme{*op, word, word_col});
        word.clear();
        return;
      }
    }
    if (word.front() == '$' && !first_escaped) {
      if (!valid_var_name(std::string_view(word).substr(1))) {
        throw GflError(ErrorCode::BadInput, "invalid variable name '" + word + "'", 0, word_col);
      }
      out.push_back(Lexeme{Tok::Var, word, word_col});
    } else {
      out.push_back(Lexeme{Tok::Word, word, word_col});
    }
    word.clear();
    word_escaped = false;
    first_escaped = false;
  };

  while (i < line.size()) {
    const char c = line[i];
    const std::size_t col = i + 1;
    if (is_space(c)) {
      flush();
      ++i;
      continue;
    }
    if (c == '\\') {
      if (i + 1 >= line.size() || is_space(line[i + 1])) {
        throw GflError(ErrorCode::BadInput, "backslash must escape a character", 0, col);
      }
      if (word.empty()) {
        word_col = col;
        first_escaped = true;
      }
      word_escaped = true;
      word += line[i + 1];
      i += 2;
      continue;
    }
    if (is_bracket(c)) {
      flush();
      out.push_back(Lexeme{bracket_kind(c), std::string(1, c), col});
      ++i;
      continue;
    }
    if (c == '*') {
      std::size_t j = i;
      while (j < line.size() && line[j] == '*') ++j;
      const bool mark = j == line.size() || is_space(line[j]) || is_bracket(line[j]);
      if (mark) {
        flush();
        const auto run = j - i;
        if (run > 2) {
          throw GflError(ErrorCode::MisplacedMark,
                         "'" + std::string(run, '*') + "' combines the top and root marks", 0, col);
        }
        out.push_back(Lexeme{run == 1 ? Tok::Star : Tok::DStar, std::string(run, '*'), col});
        i = j;
        continue;
      }
      if (word.empty()) word_col = col;
      word.append(j - i, '*');
      i = j;
      continue;
    }
    if (word.empty()) word_col = col;
    word += c;
    ++i;
  }
  flush();
  out.push_back(Lexeme{Tok::End, {}, line.size() + 1});
  return out;
}

// ---------------------------------------------------------------------------
// Parser

bool is_multi(const Expr& e) {
  if (e.kind == ExprKind::Set) return true;
  if (e.kind == ExprKind::ChainGroup) return is_multi(e.items.front().head_expr());
  return false;
}

bool carries_root(const Expr& e) {
  if (e.mark == Mark::Root) return true;
  if (e.kind == ExprKind::Set) {
    return std::any_of(e.elements.begin(), e.elements.end(), carries_root);
  }
  if (e.kind == ExprKind::ChainGroup) return carries_root(e.items.front().head_expr());
  return false;
}

std::string brief(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Token: return "'" + e.token.to_string() + "'";
    case ExprKind::Var: return "'" + e.var + "'";
    case ExprKind::Multiword: {
      std::string s = "[";
      for (const auto& w : e.words) {
        if (s.size() > 1) s += ' ';
        s += w.to_string();
      }
      return "'" + s + "]'";
    }
    case ExprKind::ChainGroup: return "group at column " + std::to_string(e.column);
    case ExprKind::Fudge: return "fudge expression at column " + std::to_string(e.column);
    case ExprKind::Set: return "set at column " + std::to_string(e.column);
  }
  return "expression";
}

class Parser {
 public:
  explicit Parser(std::string_view line) : toks_(lex(line)) {}

  Fragment parse() {
    Fragment f;
    if (peek().kind == Tok::End) throw GflError(ErrorCode::BadInput, "empty fragment");
    if (peek().kind == Tok::Var && peek(1).kind == Tok::DColon) return coord_def();
    if (is_operator(peek().kind)) dangling(peek());

    Expr first = expr();
    if (peek().kind == Tok::Eq) return anaph(std::move(first));

    f.chain = chain_from(std::move(first));
    check_end();
    check_marks(f.chain, false);
    f.kind = classify(f.chain);
    return f;
  }

 private:
  static bool is_operator(Tok t) { return t == Tok::Gt || t == Tok::Lt || t == Tok::Eq || t == Tok::DColon; }
  static bool is_closing(Tok t) { return t == Tok::RParen || t == Tok::RBrack || t == Tok::RBrace; }

  const Lexeme& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Lexeme& take() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

  [[noreturn]] static void fail(ErrorCode code, const std::string& msg, std::size_t col) {
    throw GflError(code, msg, 0, col);
  }

  [[noreturn]] void dangling(const Lexeme& op) const {
    fail(ErrorCode::DanglingOperator, "operator " + std::string(describe(op.kind)) + " is missing an operand",
         op.column);
  }

  void check_end() {
    const auto& t = peek();
    switch (t.kind) {
      case Tok::End: return;
      case Tok::RParen:
      case Tok::RBrack:
      case Tok::RBrace:
        fail(ErrorCode::UnbalancedBracket, "unmatched " + std::string(describe(t.kind)), t.column);
      case Tok::DColon:
        fail(ErrorCode::MalformedCoordDef,
             "'::' is only allowed in a coordination definition '$x :: {...} :: {...}'", t.column);
      case Tok::Eq:
        fail(ErrorCode::BadInput, "an anaphoric link cannot share a fragment with dependency arcs",
             t.column);
      case Tok::Star:
      case Tok::DStar:
        fail(ErrorCode::MisplacedMark, "misplaced " + std::string(describe(t.kind)), t.column);
      default:
        fail(ErrorCode::BadInput, "unexpected " + std::string(describe(t.kind)) + " '" + t.text + "'",
             t.column);
    }
  }

  Expr expr() {
    const Lexeme& t = take();
    Expr e;
    e.column = t.column;
    switch (t.kind) {
      case Tok::Word:
        e.kind = ExprKind::Token;
        e.token = split_token_index(t.text);
        break;
      case Tok::Var:
        e.kind = ExprKind::Var;
        e.var = t.text;
        break;
      case Tok::LBrack: multiword(e); break;
      case Tok::LParen: group(e); break;
      case Tok::LBrace: set(e); break;
      case Tok::RParen:
      case Tok::RBrack:
      case Tok::RBrace:
        fail(ErrorCode::UnbalancedBracket, "unmatched " + std::string(describe(t.kind)), t.column);
      case Tok::Star:
      case Tok::DStar:
        fail(ErrorCode::MisplacedMark, std::string(describe(t.kind)) + " must follow a node expression",
             t.column);
      case Tok::End:
        fail(ErrorCode::DanglingOperator, "expected a node expression", t.column);
      default: dangling(t);
    }
    if (peek().kind == Tok::Star || peek().kind == Tok::DStar) {
      e.mark = take().kind == Tok::Star ? Mark::Top : Mark::Root;
      if (peek().kind == Tok::Star || peek().kind == Tok::DStar) {
        fail(ErrorCode::MisplacedMark, "an expression carries at most one mark", peek().column);
      }
    }
    return e;
  }

  void multiword(Expr& e) {
    e.kind = ExprKind::Multiword;
    while (peek().kind == Tok::Word) e.words.push_back(split_token_index(take().text));
    const auto& t = peek();
    if (t.kind == Tok::RBrack) {
      take();
      if (e.words.empty()) fail(ErrorCode::EmptyGroup, "empty multiword brackets", e.column);
      return;
    }
    if (t.kind == Tok::End) fail(ErrorCode::UnbalancedBracket, "unclosed '['", e.column);
    if (is_closing(t.kind)) {
      fail(ErrorCode::UnbalancedBracket, "'[' closed by " + std::string(describe(t.kind)), t.column);
    }
    fail(ErrorCode::BadInput, "a multiword may contain only tokens, found " + std::string(describe(t.kind)),
         t.column);
  }

  void group(Expr& e) {
    while (peek().kind != Tok::RParen) {
      const auto& t = peek();
      if (t.kind == Tok::End) fail(ErrorCode::UnbalancedBracket, "unclosed '('", e.column);
      if (is_closing(t.kind)) {
        fail(ErrorCode::UnbalancedBracket, "'(' closed by " + std::string(describe(t.kind)), t.column);
      }
      if (is_operator(t.kind)) {
        if (t.kind == Tok::DColon) {
          fail(ErrorCode::MalformedCoordDef, "a coordination definition cannot be nested", t.column);
        }
        dangling(t);
      }
      e.items.push_back(chain_from(expr()));
    }
    take();
    if (e.items.empty()) fail(ErrorCode::EmptyGroup, "empty parentheses", e.column);
    e.kind = e.items.size() == 1 ? ExprKind::ChainGroup : ExprKind::Fudge;
  }

  void set(Expr& e) {
    e.kind = ExprKind::Set;
    while (peek().kind != Tok::RBrace) {
      const auto& t = peek();
      if (t.kind == Tok::End) fail(ErrorCode::UnbalancedBracket, "unclosed '{'", e.column);
      if (is_closing(t.kind)) {
        fail(ErrorCode::UnbalancedBracket, "'{' closed by " + std::string(describe(t.kind)), t.column);
      }
      if (is_operator(t.kind)) {
        fail(ErrorCode::DanglingOperator, "arcs inside braces must be grouped with parentheses", t.column);
      }
      e.elements.push_back(expr());
      if (e.elements.back().kind == ExprKind::Set) {
        fail(ErrorCode::MisplacedSet, "braces cannot be nested directly", e.elements.back().column);
      }
    }
    take();
    if (e.elements.empty()) fail(ErrorCode::EmptyGroup, "empty braces", e.column);
  }

  // Continues a chain whose first expression has been read. Stops at the
  // first token that is neither '<' nor '>'.
  Chain chain_from(Expr first) {
    Chain c;
    c.items.push_back(std::move(first));
    std::vector<Tok> ops;
    std::vector<std::size_t> op_cols;
    while (peek().kind == Tok::Gt || peek().kind == Tok::Lt) {
      const Lexeme op = take();
      const auto next = peek().kind;
      if (next == Tok::End || is_operator(next) || is_closing(next)) dangling(op);
      ops.push_back(op.kind);
      op_cols.push_back(op.column);
      c.items.push_back(expr());
    }

    std::vector<std::optional<std::size_t>> head_of(c.items.size());
    for (std::size_t k = 0; k < ops.size(); ++k) {
      const std::size_t dep = ops[k] == Tok::Gt ? k : k + 1;
      const std::size_t head = ops[k] == Tok::Gt ? k + 1 : k;
      if (is_multi(c.items[head])) {
        fail(ErrorCode::MisplacedSet, "a set of dependents cannot be a head", c.items[head].column);
      }
      if (head_of[dep]) {
        fail(ErrorCode::TwoHeads,
             brief(c.items[dep]) + " is given two heads (" + brief(c.items[*head_of[dep]]) + " and " +
                 brief(c.items[head]) + ")",
             op_cols[k]);
      }
      head_of[dep] = head;
      c.arcs.emplace_back(dep, head);
    }
    for (std::size_t k = 0; k < c.items.size(); ++k) {
      if (!head_of[k]) {
        c.head = k;
      } else if (carries_root(c.items[k])) {
        fail(ErrorCode::TwoHeads,
             brief(c.items[k]) + " is attached to the root and to " + brief(c.items[*head_of[k]]),
             c.items[k].column);
      }
    }
    return c;
  }

  // Top marks are legal only on the head of an item directly inside a fudge
  // expression; every fudge expression has at most one.
  void check_marks(const Chain& c, bool fe_item) {
    for (std::size_t k = 0; k < c.items.size(); ++k) check_marks(c.items[k], fe_item && k == c.head);
  }

  void check_marks(const Expr& e, bool fe_item_head) {
    if (e.mark == Mark::Top && !fe_item_head) {
      fail(ErrorCode::MisplacedMark, "'*' may only mark a member of a fudge expression", e.column);
    }
    switch (e.kind) {
      case ExprKind::ChainGroup: check_marks(e.items.front(), false); break;
      case ExprKind::Fudge:
        for (const auto& item : e.items) check_marks(item, true);
        break;
      case ExprKind::Set:
        for (const auto& el : e.elements) check_marks(el, false);
        break;
      default: break;
    }
  }

  static void designate_tops(Expr& e) {
    for (auto& item : e.items) {
      for (auto& x : item.items) designate_tops(x);
    }
    for (auto& el : e.elements) designate_tops(el);
    if (e.kind != ExprKind::Fudge) return;
    if (std::any_of(e.items.begin(), e.items.end(), [](const Chain& c) { return is_multi(c.head_expr()); })) {
      const auto it = std::find_if(e.items.begin(), e.items.end(),
                                   [](const Chain& c) { return is_multi(c.head_expr()); });
      fail(ErrorCode::MisplacedSet, "a set of dependents cannot be a fudge expression member",
           it->head_expr().column);
    }
    for (std::size_t k = 0; k < e.items.size(); ++k) {
      if (e.items[k].head_expr().mark != Mark::Top) continue;
      if (e.top) {
        fail(ErrorCode::MisplacedMark, "a fudge expression has at most one designated top",
             e.items[k].head_expr().column);
      }
      e.top = k;
    }
  }

  static void designate_tops(Chain& c) {
    for (auto& x : c.items) designate_tops(x);
  }

  FragmentKind classify(const Chain& c) const {
    if (c.items.size() > 1) return FragmentKind::Chain;
    const Expr& e = c.items.front();
    if (e.mark == Mark::Root) return FragmentKind::RootMark;
    switch (e.kind) {
      case ExprKind::Fudge: return FragmentKind::FudgeExpr;
      case ExprKind::Set: return FragmentKind::SetOfDependents;
      case ExprKind::Multiword: return FragmentKind::Multiword;
      case ExprKind::ChainGroup: return FragmentKind::Chain;
      default: return FragmentKind::Mention;
    }
  }

 public:
  Fragment run() {
    Fragment f = parse();
    designate_tops(f.chain);
    for (auto& e : f.conjuncts) designate_tops(e);
    for (auto& e : f.coordinators) designate_tops(e);
    return f;
  }

 private:
  std::vector<Expr> coord_set(const char* what) {
    std::vector<Expr> out;
    const auto& t = peek();
    if (t.kind == Tok::End || is_operator(t.kind)) {
      fail(ErrorCode::MalformedCoordDef, std::string("missing ") + what + " set", t.column);
    }
    Expr e = expr();
    if (e.kind == ExprKind::Set) {
      out = std::move(e.elements);
      if (e.mark != Mark::None) fail(ErrorCode::MisplacedMark, "a set cannot be marked", e.column);
    } else {
      out.push_back(std::move(e));
    }
    for (const auto& x : out) {
      check_marks(x, false);
      if (is_multi(x)) fail(ErrorCode::MisplacedSet, std::string(what) + " must be single nodes", x.column);
      if (x.mark == Mark::Root) {
        fail(ErrorCode::MisplacedMark, std::string(what) + " cannot be attached to the root here",
             x.column);
      }
    }
    return out;
  }

  Fragment coord_def() {
    Fragment f;
    f.kind = FragmentKind::CoordDef;
    f.var = take().text;
    take();  // '::'
    f.conjuncts = coord_set("conjunct");
    if (peek().kind != Tok::DColon) {
      fail(ErrorCode::MalformedCoordDef, "expected '::' before the coordinator set", peek().column);
    }
    take();
    f.coordinators = coord_set("coordinator");
    if (peek().kind != Tok::End) {
      fail(ErrorCode::MalformedCoordDef, "unexpected " + std::string(describe(peek().kind)) +
                                             " after the coordinator set",
           peek().column);
    }
    return f;
  }

  Fragment anaph(Expr first) {
    Fragment f;
    f.kind = FragmentKind::AnaphLink;
    f.operands.push_back(std::move(first));
    while (peek().kind == Tok::Eq) {
      const Lexeme op = take();
      const auto next = peek().kind;
      if (next == Tok::End || is_operator(next) || is_closing(next)) dangling(op);
      f.operands.push_back(expr());
    }
    if (peek().kind == Tok::Gt || peek().kind == Tok::Lt) {
      fail(ErrorCode::BadInput, "an anaphoric link cannot share a fragment with dependency arcs",
           peek().column);
    }
    check_end();
    for (const auto& e : f.operands) {
      if (e.mark != Mark::None) fail(ErrorCode::MisplacedMark, "anaphoric link operands cannot be marked", e.column);
      if (e.kind == ExprKind::Set) fail(ErrorCode::MisplacedSet, "anaphoric links join single nodes", e.column);
      if (e.kind != ExprKind::Token && e.kind != ExprKind::Multiword && e.kind != ExprKind::Var) {
        fail(ErrorCode::BadInput, "anaphoric links join tokens, multiwords or coordination variables",
             e.column);
      }
    }
    return f;
  }

  std::vector<Lexeme> toks_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Assembly

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

class Assembler {
 public:
  Assembler(std::span<const SourceToken> tokens, std::vector<gfl::Line> lines)
      : tokens_(tokens), lines_(std::move(lines)), uf_(tokens.size()), used_(tokens.size(), false) {}

  AnnotationGraph run() {
    AnnotationGraph g(std::vector<SourceToken>(tokens_.begin(), tokens_.end()));
    if (lines_.empty()) {
      for (std::size_t p = 0; p < tokens_.size(); ++p) g.add_lexical({p});
      return g;
    }
    for (const auto& line : lines_) {
      with_line(line.number, [&] { collect(line.fragment); });
    }

    // Lexical nodes, one per union-find class of referenced tokens.
    std::map<std::size_t, std::vector<TokenPosition>> classes;
    for (std::size_t p = 0; p < tokens_.size(); ++p) {
      if (used_[p]) classes[uf_.find(p)].push_back(p);
    }
    std::vector<std::pair<std::vector<TokenPosition>, std::size_t>> ordered;
    for (auto& [rep, positions] : classes) ordered.emplace_back(positions, rep);
    std::sort(ordered.begin(), ordered.end());
    for (const auto& [positions, rep] : ordered) lexical_[rep] = g.add_lexical(positions);

    for (const auto& line : lines_) {
      const auto& f = line.fragment;
      if (f.kind != FragmentKind::CoordDef) continue;
      if (vars_.contains(f.var)) {
        throw GflError(ErrorCode::DuplicateVariable, "variable " + f.var + " is defined twice", line.number);
      }
      vars_[f.var] = g.add_coord(f.var);
    }

    for (const auto& line : lines_) {
      with_line(line.number, [&] { build(g, line.fragment); });
    }
    return g;
  }

 private:
  template <typename F>
  static void with_line(std::size_t number, F&& fn) {
    try {
      fn();
    } catch (const GflError& e) {
      throw e.at_line(number);
    }
  }

  TokenPosition resolve(const TokenRef& ref, std::size_t column) {
    try {
      return resolve_token(ref, tokens_).position;
    } catch (const GflError& e) {
      throw GflError(e.code(), e.what(), 0, column);
    }
  }

  void collect(const Chain& c) {
    for (const auto& e : c.items) collect(e);
  }

  void collect(const Expr& e) {
    switch (e.kind) {
      case ExprKind::Token: used_[resolve(e.token, e.column)] = true; break;
      case ExprKind::Multiword: {
        std::optional<TokenPosition> first;
        for (const auto& w : e.words) {
          const auto p = resolve(w, e.column);
          used_[p] = true;
          if (first) uf_.unite(*first, p);
          first = p;
        }
        break;
      }
      case ExprKind::Var: break;
      case ExprKind::ChainGroup:
      case ExprKind::Fudge:
        for (const auto& item : e.items) collect(item);
        break;
      case ExprKind::Set:
        for (const auto& el : e.elements) collect(el);
        break;
    }
  }

  void collect(const Fragment& f) {
    collect(f.chain);
    for (const auto* list : {&f.conjuncts, &f.coordinators, &f.operands}) {
      for (const auto& e : *list) collect(e);
    }
  }

  NodeId lexical_node(TokenPosition p) { return lexical_.at(uf_.find(p)); }

  NodeId single(AnnotationGraph& g, const Expr& e) {
    auto heads = build(g, e);
    // The parser rejects sets wherever a single node is required.
    return heads.front();
  }

  std::vector<NodeId> build(AnnotationGraph& g, const Chain& c) {
    std::vector<std::vector<NodeId>> heads;
    heads.reserve(c.items.size());
    for (const auto& e : c.items) heads.push_back(build(g, e));
    for (const auto& [dep, head] : c.arcs) {
      for (auto d : heads[dep]) g.add_dep(d, heads[head].front());
    }
    return heads[c.head];
  }

  std::vector<NodeId> build(AnnotationGraph& g, const Expr& e) {
    std::vector<NodeId> out;
    switch (e.kind) {
      case ExprKind::Token: out.push_back(lexical_node(resolve(e.token, e.column))); break;
      case ExprKind::Multiword: out.push_back(lexical_node(resolve(e.words.front(), e.column))); break;
      case ExprKind::Var: {
        auto it = vars_.find(e.var);
        if (it == vars_.end()) {
          throw GflError(ErrorCode::UnknownVariable, "variable " + e.var + " is not defined", 0, e.column);
        }
        out.push_back(it->second);
        break;
      }
      case ExprKind::ChainGroup: out = build(g, e.items.front()); break;
      case ExprKind::Fudge: {
        const NodeId f = g.add_fudge();
        for (std::size_t k = 0; k < e.items.size(); ++k) {
          const auto members = build(g, e.items[k]);
          g.add_member(members.front(), f, e.top && *e.top == k);
        }
        out.push_back(f);
        break;
      }
      case ExprKind::Set:
        for (const auto& el : e.elements) {
          auto heads = build(g, el);
          out.insert(out.end(), heads.begin(), heads.end());
        }
        break;
    }
    if (e.mark == Mark::Root) {
      for (auto n : out) g.add_dep(n, AnnotationGraph::root());
    }
    return out;
  }

  void build(AnnotationGraph& g, const Fragment& f) {
    switch (f.kind) {
      case FragmentKind::CoordDef: {
        const NodeId coord = vars_.at(f.var);
        for (const auto& e : f.conjuncts) g.add_conjunct(single(g, e), coord);
        for (const auto& e : f.coordinators) g.add_coordinator(single(g, e), coord);
        break;
      }
      case FragmentKind::AnaphLink: {
        std::vector<NodeId> nodes;
        for (const auto& e : f.operands) nodes.push_back(single(g, e));
        for (std::size_t k = 1; k < nodes.size(); ++k) {
          if (nodes[k - 1] != nodes[k]) g.add_anaph(nodes[k - 1], nodes[k]);
        }
        break;
      }
      default: build(g, f.chain); break;
    }
  }

  std::span<const SourceToken> tokens_;
  std::vector<gfl::Line> lines_;
  UnionFind uf_;
  std::vector<bool> used_;
  std::map<std::size_t, NodeId> lexical_;
  std::map<std::string, NodeId> vars_;
};

}  // namespace

gfl::Fragment parse_fragment(std::string_view line) { return Parser(line).run(); }

bool is_ignorable_line(std::string_view line) {
  for (char c : line) {
    if (is_space(c)) continue;
    return c == '#';
  }
  return true;
}

std::vector<gfl::Line> parse_gfl(std::string_view text) {
  std::vector<gfl::Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++number;
    if (!is_ignorable_line(line)) {
      try {
        out.push_back(gfl::Line{number, parse_fragment(line)});
      } catch (const GflError& e) {
        throw e.at_line(number);
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

Assembly assemble_annotation(std::span<const SourceToken> tokens, std::string_view text) {
  if (tokens.empty()) throw GflError(ErrorCode::NoTokens, "no tokens");
  Assembler assembler(tokens, parse_gfl(text));
  Assembly out{assembler.run(), {}};
  out.violations = validate(out.graph);
  return out;
}

AnnotationGraph parse_annotation(std::span<const SourceToken> tokens, std::string_view text) {
  auto assembly = assemble_annotation(tokens, text);
  if (!assembly.violations.empty()) throw ValidationError(std::move(assembly.violations));
  return std::move(assembly.graph);
}

AnnotationGraph parse_annotation(std::string_view sentence, std::string_view text) {
  const auto tokens = tokenize_input(sentence);
  return parse_annotation(tokens, text);
}

}  // namespace fudg
