#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "fudg/annotation.hpp"

namespace fudg::testing {

struct GenOptions {
  std::size_t min_words = 1;
  std::size_t max_words = 6;
  std::size_t max_fudges = 3;
  double arc_probability = 0.35;
  double root_probability = 0.15;
  double top_probability = 0.35;
  double multiword_probability = 0.0;
  double omit_probability = 0.0;
};

/// Sentence "w0 w1 ..." of `count` words.
std::string sentence(std::size_t count);

/// "(w0 w1 w2) < w3", "(w3 w4 w5) < w6", ... over `count` words.
std::string fudge_chain(std::size_t count);

/// A random annotation that passes validate(): fudge expressions over
/// words and earlier fudges (so nesting is acyclic), optional top
/// designations, dependency arcs between units and arcs to the root. It may
/// still support no analysis.
AnnotationGraph random_annotation(std::mt19937_64& rng, const GenOptions& options = {});

/// A uniformly random rooted tree written out as dependency arcs.
AnnotationGraph random_tree_annotation(std::mt19937_64& rng, std::size_t words);

/// Same sentence as `g`, with a random subset of its constraints removed.
AnnotationGraph weaken(const AnnotationGraph& g, std::mt19937_64& rng, double keep = 0.7);

}  // namespace fudg::testing
