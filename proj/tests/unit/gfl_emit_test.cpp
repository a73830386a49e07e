#include <gtest/gtest.h>

#include <random>

#include "canonical.hpp"
#include "fixtures.hpp"
#include "fudg/corpus.hpp"
#include "fudg/gfl.hpp"
#include "fudg/normalize.hpp"
#include "generators.hpp"

using namespace fudg;

namespace {

void expect_round_trip(const AnnotationGraph& g) {
  const auto text = emit_gfl(g);
  const auto back = parse_annotation(g.tokens(), text);
  EXPECT_EQ(fudg::testing::canonical_form(back), fudg::testing::canonical_form(g)) << text;
}

}  // namespace

TEST(EmitGfl, SnippetCorpusRoundTrips) {
  for (const auto& doc : read_corpus(fudg::testing::read_fixture("snippet_corpus.txt"))) {
    SCOPED_TRACE(doc.id);
    expect_round_trip(parse_annotation(doc.tokens, doc.gfl));
  }
}

TEST(EmitGfl, RandomAnnotationsRoundTrip) {
  std::mt19937_64 rng(41);
  fudg::testing::GenOptions o;
  o.multiword_probability = 0.2;
  o.omit_probability = 0.1;
  int emitted = 0;
  for (int i = 0; i < 300; ++i) {
    const auto g = fudg::testing::random_annotation(rng, o);
    std::string text;
    try {
      text = emit_gfl(g);
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), ErrorCode::NotExpressible);
      continue;
    }
    ++emitted;
    const auto back = parse_annotation(g.tokens(), text);
    ASSERT_EQ(fudg::testing::canonical_form(back), fudg::testing::canonical_form(g)) << text;
  }
  EXPECT_GT(emitted, 150);
}

TEST(EmitGfl, LineOrderDoesNotMatter) {
  std::mt19937_64 rng(42);
  for (const auto& doc : read_corpus(fudg::testing::read_fixture("snippet_corpus.txt"))) {
    std::vector<std::string> lines;
    std::string line;
    for (char c : doc.gfl) {
      if (c == '\n') {
        lines.push_back(line);
        line.clear();
      } else {
        line += c;
      }
    }
    std::shuffle(lines.begin(), lines.end(), rng);
    std::string shuffled;
    for (const auto& l : lines) shuffled += l + "\n";
    const auto a = parse_annotation(doc.tokens, doc.gfl);
    const auto b = parse_annotation(doc.tokens, shuffled);
    EXPECT_EQ(fudg::testing::canonical_form(a), fudg::testing::canonical_form(b)) << doc.id;
  }
}

TEST(EmitGfl, SplittingChainsIsEquivalent) {
  const auto joined = parse_annotation("the jet black cat likes fish", "(the > cat < black < jet) > likes < fish");
  const auto split = parse_annotation("the jet black cat likes fish", "the > cat < black < jet\ncat > likes < fish");
  EXPECT_EQ(fudg::testing::canonical_form(joined), fudg::testing::canonical_form(split));
}

TEST(EmitGfl, TokenReferences) {
  const auto t = tokenize_input("it ( $x * it # >");
  EXPECT_EQ(gfl_token_reference(t[0]), "it~1");
  EXPECT_EQ(gfl_token_reference(t[1]), "\\(");
  EXPECT_EQ(gfl_token_reference(t[2]), "\\$x");
  EXPECT_EQ(gfl_token_reference(t[3]), "\\*");
  EXPECT_EQ(gfl_token_reference(t[5]), "\\#");
  EXPECT_EQ(gfl_token_reference(t[6]), "\\>");
  const auto g = parse_annotation(t, "\\( > it~1\n\\$x > \\#\n\\* < \\>");
  expect_round_trip(g);
}

TEST(EmitGfl, NotExpressible) {
  AnnotationGraph g(tokenize_input("a b c"));
  const auto a = g.add_lexical({0});
  const auto b = g.add_lexical({1});
  const auto c = g.add_lexical({2});
  const auto inner = g.add_fudge();
  g.add_member(a, inner);
  g.add_member(b, inner);
  const auto outer = g.add_fudge();
  g.add_member(inner, outer);
  g.add_member(c, outer);
  g.add_dep(inner, c);
  try {
    emit_gfl(g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotExpressible);
  }
}

TEST(EmitGfl, ReconciledGraphsRoundTrip) {
  const auto g1 = parse_annotation("the mystery door", "[mystery door] > the");
  const auto g2 = parse_annotation("the mystery door", "mystery > door");
  const auto [r1, r2] = reconcile_lexical(g1, g2);
  expect_round_trip(r1);
  expect_round_trip(r2);
}
