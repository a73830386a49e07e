#include <gtest/gtest.h>

#include <random>

#include "agreement_fixture.hpp"
#include "fudg/agreement.hpp"
#include "fudg/gfl.hpp"
#include "generators.hpp"

using namespace fudg;

namespace {

void expect_same(const std::optional<double>& got, const std::optional<double>& want, const char* what) {
  ASSERT_EQ(got.has_value(), want.has_value()) << what;
  if (want) EXPECT_EQ(*got, *want) << what;
}

void expect_report(const AgreementReport& got, const AgreementReport& want) {
  EXPECT_EQ(got.mode, want.mode);
  EXPECT_EQ(got.total, want.total);
  EXPECT_EQ(got.n, want.n);
  EXPECT_EQ(got.n_intersect, want.n_intersect);
  EXPECT_EQ(got.excluded, want.excluded);
  EXPECT_EQ(got.dropped, want.dropped);
  expect_same(got.mean_com1, want.mean_com1, "com1");
  expect_same(got.mean_com2, want.mean_com2, "com2");
  expect_same(got.mean_com_prec12, want.mean_com_prec12, "comPrec12");
  expect_same(got.mean_com_prec21, want.mean_com_prec21, "comPrec21");
  expect_same(got.mean_soft_com_prec12, want.mean_soft_com_prec12, "softComPrec12");
  expect_same(got.mean_soft_com_prec21, want.mean_soft_com_prec21, "softComPrec21");
  expect_same(got.mean_f1, want.mean_f1, "F1");
}

}  // namespace

TEST(Agreement, IdenticalPair) {
  const auto g = parse_annotation("a b c d e f", "((a b)* c d) < e\nb < f");
  const auto com = *promiscuity_exact(g).com;
  EXPECT_EQ(com_prec(g, g), com);
  EXPECT_EQ(soft_com_prec(g, g, CountMode::Exact), com);
  const auto r = pair_agreement(g, g, PromMode::Exact);
  EXPECT_EQ(*r.f1, com);
  EXPECT_TRUE(r.intersection_nonempty);
  const std::vector<std::pair<AnnotationGraph, AnnotationGraph>> one{{g, g}};
  const auto report = corpus_agreement(one, CountMode::Exact);
  EXPECT_EQ(report.n, 1u);
  EXPECT_EQ(report.n_intersect, 1u);
  EXPECT_EQ(*report.mean_f1, com);
}

TEST(Agreement, DomainErrors) {
  const auto a = parse_annotation("a b c", "a > b");
  const auto b = parse_annotation("a b c", "a > b < c");
  try {
    com_prec(a, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DomainMismatch);
  }
  const auto bad = parse_annotation("a b c", "(a* b)\nb > c");
  try {
    soft_com_prec(bad, b, CountMode::Exact);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UndefinedCommitment);
  }
  EXPECT_THROW(com_prec(parse_annotation("a b c d e f g h", ""), parse_annotation("a b c d e f g h", "")), CapExceeded);
  EXPECT_THROW(pair_agreement(a, parse_annotation("a b d", "a > b"), PromMode::Auto), Error);
}

TEST(Agreement, HandComputedPairs) {
  const auto pairs = fudg::testing::fixture_pairs();
  ASSERT_EQ(pairs.size(), fudg::testing::hand_pairs().size());
  for (const auto mode : {CountMode::Exact, CountMode::Kirchhoff}) {
    const auto pm = mode == CountMode::Exact ? PromMode::Exact : PromMode::Kirchhoff;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      SCOPED_TRACE("pair " + std::to_string(i + 1) + " " + std::string(to_string(mode)));
      const auto got = pair_agreement(pairs[i].first, pairs[i].second, pm);
      const auto want = fudg::testing::hand_pair_result(fudg::testing::hand_pairs()[i], mode);
      EXPECT_EQ(got.exceeds_cap, want.exceeds_cap);
      EXPECT_EQ(got.intersection_nonempty, want.intersection_nonempty);
      expect_same(got.com1, want.com1, "com1");
      expect_same(got.com2, want.com2, "com2");
      expect_same(got.com_prec12, want.com_prec12, "comPrec12");
      expect_same(got.com_prec21, want.com_prec21, "comPrec21");
      expect_same(got.soft_com_prec12, want.soft_com_prec12, "softComPrec12");
      expect_same(got.soft_com_prec21, want.soft_com_prec21, "softComPrec21");
      expect_same(got.f1, want.f1, "f1");
    }
  }
}

TEST(Agreement, HandComputedReports) {
  const auto pairs = fudg::testing::fixture_pairs();
  for (const auto mode : {CountMode::Exact, CountMode::Kirchhoff}) {
    SCOPED_TRACE(std::string(to_string(mode)));
    expect_report(corpus_agreement(pairs, mode), fudg::testing::hand_report(mode));
  }
  const auto exact = fudg::testing::hand_report(CountMode::Exact);
  EXPECT_EQ(exact.n, 9u);
  EXPECT_EQ(exact.n_intersect, 6u);
  EXPECT_EQ(exact.dropped, 1u);
  EXPECT_EQ(exact.excluded, 1u);
  const auto kirchhoff = fudg::testing::hand_report(CountMode::Kirchhoff);
  EXPECT_EQ(kirchhoff.n, 10u);
  EXPECT_EQ(kirchhoff.n_intersect, 7u);
}

TEST(Agreement, AutoFallsBackPerPair) {
  const auto pairs = fudg::testing::fixture_pairs();
  const auto over = pair_agreement(pairs[7].first, pairs[7].second, PromMode::Auto);
  EXPECT_EQ(over.mode, CountMode::Kirchhoff);
  const auto under = pair_agreement(pairs[0].first, pairs[0].second, PromMode::Auto);
  EXPECT_EQ(under.mode, CountMode::Exact);
}

TEST(Agreement, IdentitiesOnRandomAnnotations) {
  std::mt19937_64 rng(31);
  int checked = 0;
  while (checked < 100) {
    const auto g = fudg::testing::random_annotation(rng);
    const auto p = promiscuity_exact(g);
    if (!p.com) continue;
    ++checked;
    EXPECT_NEAR(soft_com_prec(g, g, CountMode::Exact), *p.com, 1e-9);
    EXPECT_NEAR(com_prec(g, g), *p.com, 1e-9);
  }
}

TEST(Agreement, SymmetricCounts) {
  std::mt19937_64 rng(32);
  fudg::testing::GenOptions o;
  o.min_words = 5;
  o.max_words = 5;
  for (int i = 0; i < 100; ++i) {
    const auto a = fudg::testing::random_annotation(rng, o);
    const auto b = fudg::testing::random_annotation(rng, o);
    const auto ab = pair_agreement(a, b, PromMode::Exact);
    const auto ba = pair_agreement(b, a, PromMode::Exact);
    EXPECT_EQ(ab.intersection_nonempty, ba.intersection_nonempty);
    ASSERT_EQ(ab.com1.has_value(), ba.com2.has_value());
    if (ab.com1) EXPECT_EQ(*ab.com1, *ba.com2);
    if (ab.soft_com_prec12) {
      EXPECT_EQ(*ab.soft_com_prec12, *ba.soft_com_prec21);
      EXPECT_NEAR(*ab.f1, *ba.f1, 1e-15);
    }
    if (ab.com_prec12) EXPECT_EQ(*ab.com_prec12, *ba.com_prec21);
  }
}
