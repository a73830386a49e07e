#include "fudg/stats.hpp"

#include <numeric>

namespace fudg {

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

std::pair<std::size_t, std::size_t> utterance_range(const AnnotationGraph& g) {
  const auto root = AnnotationGraph::root();
  DisjointSets sets(g.node_count());
  std::vector<bool> attached(g.node_count(), false);
  std::size_t lo = 0;
  for (const auto& a : g.deps()) {
    if (a.to == root) {
      ++lo;
      attached[a.from.value] = true;
    } else {
      sets.unite(a.from.value, a.to.value);
    }
  }
  for (const auto* arcs : {&g.members(), &g.conjuncts(), &g.coordinators()}) {
    for (const auto& a : *arcs) sets.unite(a.from.value, a.to.value);
  }
  std::vector<bool> component_attached(g.node_count(), false);
  for (std::size_t i = 1; i < g.node_count(); ++i) {
    if (attached[i]) component_attached[sets.find(i)] = true;
  }
  std::vector<bool> seen(g.node_count(), false);
  std::size_t loose = 0;
  for (std::size_t i = 1; i < g.node_count(); ++i) {
    const auto c = sets.find(i);
    if (seen[c]) continue;
    seen[c] = true;
    if (!component_attached[c]) ++loose;
  }
  return {lo, lo + loose};
}

StatsReport annotation_stats(std::span<const AnnotationGraph> corpus, PromMode mode, std::uint64_t cap,
                             const SupportOptions& options) {
  StatsReport out;
  out.mode = mode;
  double com_sum = 0;
  std::size_t com_count = 0;
  for (const auto& g : corpus) {
    ++out.documents;
    std::size_t covered = 0;
    for (const auto id : g.lexical_nodes()) {
      const auto size = g.node(id).tokens.size();
      covered += size;
      if (size == 1) {
        ++out.single_word_nodes;
      } else {
        ++out.multiword_nodes;
      }
    }
    out.omitted_tokens += g.tokens().size() - covered;
    out.coordination_nodes += g.coord_nodes().size();
    out.fudge_nodes += g.fudge_nodes().size();
    out.anaph_links += g.anaph().size();
    const auto [lo, hi] = utterance_range(g);
    out.utterances_lo += lo;
    out.utterances_hi += hi;

    const auto result = promiscuity(g, mode, cap, options);
    if (result.exceeds_cap && mode == PromMode::Exact) {
      ++out.over_cap;
      continue;
    }
    if (result.prom == 0) {
      ++out.inconsistent;
      continue;
    }
    auto& h = out.prom_histogram;
    if (result.prom == 1) {
      ++h[0];
    } else {
      ++h[1];
      BigInt threshold = 10;
      for (std::size_t b = 2; b < kHistogramBuckets; ++b, threshold *= 10) {
        if (result.prom >= threshold) ++h[b];
      }
    }
    if (result.com) {
      com_sum += *result.com;
      ++com_count;
    }
  }
  if (com_count > 0) out.mean_com = com_sum / static_cast<double>(com_count);
  return out;
}

}  // namespace fudg
