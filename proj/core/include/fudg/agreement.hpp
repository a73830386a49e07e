#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fudg/annotation.hpp"
#include "fudg/enumeration.hpp"
#include "fudg/underspec.hpp"

namespace fudg {

/// com(a1) * |supp(a1) & supp(a2)| / |supp(a1)|. The annotations must share
/// their lexical nodes (see reconcile_lexical); otherwise
/// Error(DomainMismatch). Throws CapExceeded when a1's supported edge graph
/// has more than `cap` trees and Error(UndefinedCommitment) when a1 supports
/// no analysis.
double com_prec(const AnnotationGraph& a1, const AnnotationGraph& a2, std::uint64_t cap = kDefaultCap,
                const SupportOptions& options = {});

/// com(a1) * sum |P1(l) & P2(l)| / sum |P1(l)| over the shared lexical nodes,
/// where P are supported-parent sets and com(a1) is counted with `mode`.
/// Throws Error(UndefinedCommitment) when either annotation is inconsistent
/// and CapExceeded when exact counting is refused.
double soft_com_prec(const AnnotationGraph& a1, const AnnotationGraph& a2, CountMode mode,
                     std::uint64_t cap = kDefaultCap, const SupportOptions& options = {});

/// Both directions of agreement between two annotations of one sentence,
/// after lexical reconciliation and coordination simplification.
struct PairResult {
  CountMode mode = CountMode::Exact;
  /// Exact counting was requested but refused for either annotation; no
  /// other field is set.
  bool exceeds_cap = false;
  /// Commitment of the reconciled annotations (undefined when inconsistent).
  std::optional<double> com1;
  std::optional<double> com2;
  /// Commitment of the annotations as given, before reconciliation.
  std::optional<double> raw_com1;
  std::optional<double> raw_com2;
  /// Exact mode only.
  std::optional<double> com_prec12;
  std::optional<double> com_prec21;
  /// Undefined when either reconciled annotation is inconsistent.
  std::optional<double> soft_com_prec12;
  std::optional<double> soft_com_prec21;
  /// Harmonic mean of the two soft directions (0 when both are 0).
  std::optional<double> f1;
  /// Some analysis is supported by both annotations. In Kirchhoff mode this
  /// comes from a bounded search; `intersection_exact` is false when the
  /// search gave up.
  bool intersection_nonempty = false;
  bool intersection_exact = true;
};

/// `mode` Auto counts exactly when both reconciled annotations fit under the
/// cap and falls back to Kirchhoff otherwise. Throws
/// Error(TokenListMismatch) for different sentences.
PairResult pair_agreement(const AnnotationGraph& a1, const AnnotationGraph& a2, PromMode mode,
                          std::uint64_t cap = kDefaultCap, const SupportOptions& options = {});

struct AgreementReport {
  CountMode mode = CountMode::Exact;
  /// Pairs submitted.
  std::size_t total = 0;
  /// Pairs measured; exact mode drops pairs that exceed the cap.
  std::size_t n = 0;
  std::size_t n_intersect = 0;
  /// Measured pairs whose agreement is undefined because an annotation is
  /// inconsistent; they count in `n` but not in the means.
  std::size_t excluded = 0;
  std::size_t dropped = 0;
  /// Arithmetic means over the measured pairs where the value is defined;
  /// unset when there is none.
  std::optional<double> mean_com1;
  std::optional<double> mean_com2;
  std::optional<double> mean_com_prec12;
  std::optional<double> mean_com_prec21;
  std::optional<double> mean_soft_com_prec12;
  std::optional<double> mean_soft_com_prec21;
  std::optional<double> mean_f1;
};

AgreementReport corpus_agreement(std::span<const std::pair<AnnotationGraph, AnnotationGraph>> pairs,
                                 CountMode mode, std::uint64_t cap = kDefaultCap,
                                 const SupportOptions& options = {});

/// Aggregates already computed pair results of one mode.
AgreementReport summarize_agreement(std::span<const PairResult> results, CountMode mode);

}  // namespace fudg
