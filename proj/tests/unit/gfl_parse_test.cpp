#include <gtest/gtest.h>

#include "fudg/error.hpp"
#include "fudg/gfl.hpp"

using namespace fudg;

namespace {

ErrorCode fragment_error(std::string_view line) {
  try {
    parse_fragment(line);
  } catch (const GflError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for: " << line;
  return ErrorCode::BadInput;
}

ErrorCode annotation_error(std::string_view sentence, std::string_view text) {
  try {
    parse_annotation(sentence, text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for: " << text;
  return ErrorCode::BadInput;
}

}  // namespace

TEST(ParseFragment, ChainDirections) {
  const auto f = parse_fragment("the > cat < black < jet");
  ASSERT_EQ(f.kind, gfl::FragmentKind::Chain);
  ASSERT_EQ(f.chain.items.size(), 4u);
  EXPECT_EQ(f.chain.head, 1u);
  EXPECT_EQ(f.chain.head_expr().token.word, "cat");
  const std::vector<std::pair<std::size_t, std::size_t>> arcs{{0, 1}, {2, 1}, {3, 2}};
  EXPECT_EQ(f.chain.arcs, arcs);
}

TEST(ParseFragment, Kinds) {
  EXPECT_EQ(parse_fragment("(a b c)").kind, gfl::FragmentKind::FudgeExpr);
  EXPECT_EQ(parse_fragment("{a b} > c").kind, gfl::FragmentKind::Chain);
  EXPECT_EQ(parse_fragment("[break a leg]").kind, gfl::FragmentKind::Multiword);
  EXPECT_EQ(parse_fragment("$a :: {x y} :: {and}").kind, gfl::FragmentKind::CoordDef);
  EXPECT_EQ(parse_fragment("a = b").kind, gfl::FragmentKind::AnaphLink);
  EXPECT_EQ(parse_fragment("D:**").kind, gfl::FragmentKind::RootMark);
  EXPECT_EQ(parse_fragment("word").kind, gfl::FragmentKind::Mention);
}

TEST(ParseFragment, MarksAndTops) {
  const auto f = parse_fragment("(Few* if any) > witches");
  const auto& fe = f.chain.items[0];
  ASSERT_EQ(fe.kind, gfl::ExprKind::Fudge);
  ASSERT_TRUE(fe.top.has_value());
  EXPECT_EQ(*fe.top, 0u);
  const auto nested = parse_fragment("(Vanishingly few (if any)*)");
  EXPECT_EQ(nested.chain.items[0].top, 2u);
  EXPECT_EQ(parse_fragment("Found** < door").chain.items[0].mark, gfl::Mark::Root);
}

TEST(ParseFragment, CoordDef) {
  const auto f = parse_fragment("$a :: {[peanut butter] honey} :: {and}");
  EXPECT_EQ(f.var, "$a");
  ASSERT_EQ(f.conjuncts.size(), 2u);
  EXPECT_EQ(f.conjuncts[0].kind, gfl::ExprKind::Multiword);
  ASSERT_EQ(f.coordinators.size(), 1u);
}

TEST(ParseFragment, Escapes) {
  const auto f = parse_fragment("\\( > \\*");
  ASSERT_EQ(f.chain.items.size(), 2u);
  EXPECT_EQ(f.chain.items[0].token.word, "(");
  EXPECT_EQ(f.chain.items[1].token.word, "*");
}

TEST(ParseFragment, SyntaxErrors) {
  EXPECT_EQ(fragment_error("black < jet > likes"), ErrorCode::TwoHeads);
  EXPECT_EQ(fragment_error("a** > b"), ErrorCode::TwoHeads);
  EXPECT_EQ(fragment_error("(a b"), ErrorCode::UnbalancedBracket);
  EXPECT_EQ(fragment_error("(a b))"), ErrorCode::UnbalancedBracket);
  EXPECT_EQ(fragment_error("[a b}"), ErrorCode::UnbalancedBracket);
  EXPECT_EQ(fragment_error("()"), ErrorCode::EmptyGroup);
  EXPECT_EQ(fragment_error("a >"), ErrorCode::DanglingOperator);
  EXPECT_EQ(fragment_error("< a"), ErrorCode::DanglingOperator);
  EXPECT_EQ(fragment_error("a > > b"), ErrorCode::DanglingOperator);
  EXPECT_EQ(fragment_error("a* > b"), ErrorCode::MisplacedMark);
  EXPECT_EQ(fragment_error("(a* b*)"), ErrorCode::MisplacedMark);
  EXPECT_EQ(fragment_error("a***"), ErrorCode::MisplacedMark);
  EXPECT_EQ(fragment_error("{b c} < a"), ErrorCode::MisplacedSet);
  EXPECT_EQ(fragment_error("$a :: {x} {and}"), ErrorCode::MalformedCoordDef);
  EXPECT_EQ(fragment_error("$a :: {x y}"), ErrorCode::MalformedCoordDef);
}

TEST(ParseGfl, LineNumbersInErrors) {
  try {
    parse_gfl("a > b\n\n# comment\nblack < jet > likes\n");
    FAIL();
  } catch (const GflError& e) {
    EXPECT_EQ(e.code(), ErrorCode::TwoHeads);
    EXPECT_EQ(e.line(), 4u);
  }
}

TEST(ParseGfl, SkipsCommentsAndBlanks) {
  const auto lines = parse_gfl("# note\n\na > b\n  \nc\n");
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0].number, 3u);
  EXPECT_EQ(lines[1].number, 5u);
}

TEST(Assemble, SimpleChain) {
  const auto g = parse_annotation("the jet black cat likes fish", "(the > cat < black < jet) > likes < fish");
  EXPECT_EQ(g.lexical_nodes().size(), 6u);
  EXPECT_EQ(g.deps().size(), 5u);
  const auto cat = *g.lexical_for_token(3);
  const auto likes = *g.lexical_for_token(4);
  EXPECT_EQ(g.heads_of(cat), std::vector<NodeId>{likes});
}

TEST(Assemble, EquivalentSpellings) {
  const auto a = parse_annotation("black cat", "black > cat");
  const auto b = parse_annotation("black cat", "cat < black");
  EXPECT_EQ(a.deps(), b.deps());
}

TEST(Assemble, SetOfDependents) {
  const auto g = parse_annotation("cat likes fish", "{cat fish} > likes");
  const auto likes = *g.lexical_for_token(1);
  EXPECT_EQ(g.heads_of(*g.lexical_for_token(0)), std::vector<NodeId>{likes});
  EXPECT_EQ(g.heads_of(*g.lexical_for_token(2)), std::vector<NodeId>{likes});
}

TEST(Assemble, MultiwordAbsorbsSingleReferences) {
  const auto g = parse_annotation("I 'll wake it up", "[wake up]\nI > 'll < wake < it");
  const auto mw = *g.lexical_for_token(2);
  EXPECT_EQ(g.lexical_for_token(4), mw);
  EXPECT_EQ(g.node(mw).label, "wake_up");
  EXPECT_EQ(g.lexical_nodes().size(), 4u);
}

TEST(Assemble, OnlyReferencedTokensAreLexical) {
  const auto g = parse_annotation("a b c", "a > b");
  EXPECT_EQ(g.lexical_nodes().size(), 2u);
  EXPECT_FALSE(g.lexical_for_token(2).has_value());
}

TEST(Assemble, EmptyTextLexicalizesEverything) {
  const auto g = parse_annotation("a b c", "");
  EXPECT_EQ(g.lexical_nodes().size(), 3u);
  EXPECT_TRUE(g.deps().empty());
}

TEST(Assemble, FudgeNodesAndTops) {
  const auto g = parse_annotation("a b c d e f", "((a b)* c d) < e\nb < f");
  ASSERT_EQ(g.fudge_nodes().size(), 2u);
  EXPECT_EQ(g.members().size(), 5u);
  EXPECT_EQ(g.tops().size(), 1u);
  EXPECT_EQ(g.deps().size(), 2u);
}

TEST(Assemble, EachFudgeOccurrenceIsItsOwnNode) {
  const auto g = parse_annotation("a b c", "(a b)\n(a b) > c");
  EXPECT_EQ(g.fudge_nodes().size(), 2u);
}

TEST(Assemble, Coordination) {
  const auto g = parse_annotation("Sam really adores kittens and abhors puppies",
                                  "$a :: {adores abhors} :: {and}\nSam > $a < really\nadores < kittens\nabhors < puppies");
  const auto coord = g.find_coord("$a");
  ASSERT_TRUE(coord.has_value());
  EXPECT_EQ(g.conjuncts_of(*coord).size(), 2u);
  EXPECT_EQ(g.coordinators_of(*coord).size(), 1u);
  EXPECT_EQ(g.heads_of(*g.lexical_for_token(0)), std::vector<NodeId>{*coord});
}

TEST(Assemble, Anaphora) {
  const auto g = parse_annotation("We are the knights who say Ni", "who = knights");
  EXPECT_EQ(g.anaph().size(), 1u);
}

TEST(Assemble, ReferenceErrors) {
  EXPECT_EQ(annotation_error("a b", "a > c"), ErrorCode::UnknownToken);
  EXPECT_EQ(annotation_error("a b a", "a > b"), ErrorCode::AmbiguousToken);
  EXPECT_EQ(annotation_error("a b a", "a~3 > b"), ErrorCode::BadIndex);
  EXPECT_EQ(annotation_error("a b", "$x > a"), ErrorCode::UnknownVariable);
  EXPECT_EQ(annotation_error("a b c", "$x :: {a b} :: {c}\n$x :: {a b} :: {c}"), ErrorCode::DuplicateVariable);
}

TEST(Assemble, ValidationErrorsAreReported) {
  const auto a = assemble_annotation(tokenize_input("a b"), "a > b\nb > a");
  EXPECT_FALSE(a.violations.empty());
  EXPECT_EQ(annotation_error("a b", "a > b\nb > a"), ErrorCode::ValidationFailed);
}

TEST(Assemble, ErrorCarriesLine) {
  try {
    parse_annotation("a b", "a > b\nb > c");
    FAIL();
  } catch (const GflError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}
