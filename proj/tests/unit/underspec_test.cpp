#include <gtest/gtest.h>

#include <random>

#include "fudg/gfl.hpp"
#include "fudg/underspec.hpp"
#include "generators.hpp"
#include "oracle.hpp"

using namespace fudg;

namespace {

std::map<NodeId, std::set<NodeId>> as_sets(const std::map<NodeId, std::vector<NodeId>>& m) {
  std::map<NodeId, std::set<NodeId>> out;
  for (const auto& [k, v] : m) out[k] = {v.begin(), v.end()};
  return out;
}

std::vector<std::string> names(const AnnotationGraph& g, const std::vector<NodeId>& ids) {
  std::vector<std::string> out;
  for (auto id : ids) out.push_back(g.display_name(id));
  return out;
}

}  // namespace

TEST(SupportedParents, TwoFudgeExample) {
  const auto g = parse_annotation("a b c d e f", "((a b)* c d) < e\nb < f");
  const auto s = supported_parents(g);
  auto parents_of = [&](TokenPosition p) { return names(g, s.parents.at(*g.lexical_for_token(p))); };
  EXPECT_EQ(parents_of(0), (std::vector<std::string>{"ROOT", "b"}));
  EXPECT_EQ(parents_of(1), (std::vector<std::string>{"ROOT", "a"}));
  EXPECT_EQ(parents_of(2), (std::vector<std::string>{"a", "b", "d"}));
  EXPECT_EQ(parents_of(4), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(parents_of(5), (std::vector<std::string>{"b"}));
  EXPECT_TRUE(s.exact);
  for (const auto& [f, tops] : s.tops) EXPECT_EQ(names(g, tops), (std::vector<std::string>{"a", "b"}));
}

TEST(SupportedParents, DesignatedTop) {
  const auto g = parse_annotation("Few if any witches", "(Few* if any) > witches");
  const auto s = supported_parents(g);
  EXPECT_EQ(names(g, s.parents.at(*g.lexical_for_token(0))), std::vector<std::string>{"witches"});
  EXPECT_EQ(names(g, s.parents.at(*g.lexical_for_token(1))), (std::vector<std::string>{"Few", "any"}));
  const auto tops = possible_tops(g);
  ASSERT_EQ(tops.size(), 1u);
  EXPECT_EQ(names(g, tops.begin()->second), std::vector<std::string>{"Few"});
}

TEST(SupportedParents, NestedDesignatedTop) {
  const auto g = parse_annotation("Vanishingly few if any", "(Vanishingly few (if any)*)");
  const auto tops = possible_tops(g);
  for (const auto& [f, t] : tops) EXPECT_EQ(names(g, t), (std::vector<std::string>{"if", "any"}));
}

TEST(SupportedParents, ConflictIsReported) {
  // b must attach to a, but a is the designated top so b cannot be outside.
  const auto g = parse_annotation("a b c", "(a* b)\nb > c");
  const auto r = compute_support(g);
  EXPECT_FALSE(r.consistent());
  for (const auto& [node, parents] : r.map.parents) EXPECT_TRUE(parents.empty());
  EXPECT_THROW(supported_parents(g), EmptySupportError);
  try {
    supported_edge_graph(g);
    FAIL();
  } catch (const EmptySupportError& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptySupport);
    EXPECT_FALSE(e.nodes().empty());
  }
}

TEST(SupportedParents, UnconstrainedIsComplete) {
  const auto g = parse_annotation("a b c", "");
  const auto seg = supported_edge_graph(g);
  EXPECT_EQ(seg.heads, SupportedEdgeGraph::complete(3).heads);
  EXPECT_EQ(seg.edge_count(), 9u);
  EXPECT_EQ(seg.vertices.back(), AnnotationGraph::root());
}

TEST(SupportedParents, StrategiesAgreeWithOracle) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 150; ++i) {
    const auto g = fudg::testing::random_annotation(rng);
    const auto expected = fudg::testing::oracle(g);
    for (const auto strategy : {SupportStrategy::Exhaustive, SupportStrategy::Witness, SupportStrategy::Auto}) {
      SupportOptions o;
      o.strategy = strategy;
      const auto r = compute_support(g, o);
      ASSERT_EQ(r.consistent(), expected.prom > 0) << i;
      if (expected.prom == 0) continue;
      ASSERT_EQ(as_sets(r.map.parents), expected.parents) << i;
      ASSERT_TRUE(r.map.exact);
    }
  }
}

TEST(SupportedParents, LocalOnlyIsSound) {
  std::mt19937_64 rng(12);
  SupportOptions o;
  o.strategy = SupportStrategy::LocalOnly;
  for (int i = 0; i < 200; ++i) {
    const auto g = fudg::testing::random_annotation(rng);
    const auto expected = fudg::testing::oracle(g);
    const auto r = compute_support(g, o);
    if (expected.prom == 0) continue;
    ASSERT_TRUE(r.consistent()) << i;
    for (const auto& [node, parents] : expected.parents) {
      const auto& got = r.map.parents.at(node);
      for (const auto p : parents) ASSERT_TRUE(std::find(got.begin(), got.end(), p) != got.end()) << i;
    }
  }
}

TEST(SupportedParents, TopsMatchOracle) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 150; ++i) {
    const auto g = fudg::testing::random_annotation(rng);
    const auto expected = fudg::testing::oracle(g);
    if (expected.prom == 0) continue;
    SupportOptions o;
    o.strategy = SupportStrategy::Exhaustive;
    const auto r = compute_support(g, o);
    ASSERT_EQ(as_sets(r.map.tops), expected.tops) << i;
  }
}

TEST(SupportedParents, MonotoneUnderAddedArcs) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 150; ++i) {
    const auto strong = fudg::testing::random_annotation(rng);
    const auto weak = fudg::testing::weaken(strong, rng);
    const auto rs = compute_support(strong);
    const auto rw = compute_support(weak);
    if (!rw.consistent()) {
      ASSERT_FALSE(rs.consistent());
      continue;
    }
    for (const auto& [node, parents] : rs.map.parents) {
      const auto& wider = rw.map.parents.at(node);
      for (const auto p : parents) ASSERT_TRUE(std::find(wider.begin(), wider.end(), p) != wider.end()) << i;
    }
  }
}

TEST(SupportedParents, LocalInferenceExactOnChains) {
  const auto g = parse_annotation(fudg::testing::sentence(7), fudg::testing::fudge_chain(7));
  SupportOptions local;
  local.strategy = SupportStrategy::LocalOnly;
  const auto expected = fudg::testing::oracle(g);
  EXPECT_EQ(as_sets(supported_parents(g, local).parents), expected.parents);
  EXPECT_EQ(as_sets(supported_parents(g, local).tops), expected.tops);
}

TEST(EdgeGraph, FromSupportMap) {
  const auto g = parse_annotation("a b", "a > b");
  const auto seg = edge_graph_of(g, supported_parents(g));
  EXPECT_EQ(seg.heads, (std::vector<std::vector<std::uint32_t>>{{1}, {2}}));
  EXPECT_EQ(seg.root_index(), 2u);
  EXPECT_EQ(seg.lexical_count(), 2u);
}
