#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "fudg/annotation.hpp"
#include "fudg/enumeration.hpp"

namespace fudg {

/// Cumulative promiscuity buckets: =1, >1, >=10, >=100, >=1000, >=10000.
inline constexpr std::size_t kHistogramBuckets = 6;

struct StatsReport {
  std::size_t documents = 0;
  std::size_t single_word_nodes = 0;
  std::size_t multiword_nodes = 0;
  /// Input tokens not covered by any lexical node.
  std::size_t omitted_tokens = 0;
  std::size_t coordination_nodes = 0;
  std::size_t anaph_links = 0;
  std::size_t fudge_nodes = 0;
  /// Explicit root attachments, and those plus the connected components
  /// not attached to the root.
  std::size_t utterances_lo = 0;
  std::size_t utterances_hi = 0;
  std::array<std::size_t, kHistogramBuckets> prom_histogram{};
  /// Mean commitment over documents where it is defined.
  std::optional<double> mean_com;
  /// Documents supporting no analysis.
  std::size_t inconsistent = 0;
  /// Documents left out of the histogram because exact counting was refused.
  std::size_t over_cap = 0;
  PromMode mode = PromMode::Auto;
};

/// Utterance bounds of one annotation.
std::pair<std::size_t, std::size_t> utterance_range(const AnnotationGraph& g);

StatsReport annotation_stats(std::span<const AnnotationGraph> corpus, PromMode mode,
                             std::uint64_t cap = kDefaultCap, const SupportOptions& options = {});

}  // namespace fudg
