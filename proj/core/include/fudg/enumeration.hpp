#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "fudg/annotation.hpp"
#include "fudg/bigint.hpp"
#include "fudg/underspec.hpp"

namespace fudg {

inline constexpr std::uint64_t kDefaultCap = 100'000;

namespace detail {
class TreeSearch;
}

/// Lazily yields every spanning in-tree of a supported edge graph, each
/// exactly once and in a deterministic order.
class ArborescenceEnumerator {
 public:
  ArborescenceEnumerator(const SupportedEdgeGraph& g, std::uint64_t cap = kDefaultCap);
  ~ArborescenceEnumerator();
  ArborescenceEnumerator(ArborescenceEnumerator&&) noexcept;
  ArborescenceEnumerator& operator=(ArborescenceEnumerator&&) noexcept;

  /// The next tree, or nullopt at the end. Throws CapExceeded when a tree
  /// beyond the cap exists.
  std::optional<Analysis> next();

  std::uint64_t produced() const noexcept { return produced_; }

 private:
  std::unique_ptr<detail::TreeSearch> search_;
  std::uint64_t cap_;
  std::uint64_t produced_ = 0;
};

/// All spanning in-trees; throws CapExceeded when there are more than `cap`.
std::vector<Analysis> enumerate_arborescences(const SupportedEdgeGraph& g, std::uint64_t cap = kDefaultCap);

enum class CountMode { Exact, Kirchhoff };

std::string_view to_string(CountMode mode) noexcept;

struct PromiscuityResult {
  BigInt prom = 0;
  /// Set when exact counting was refused because the supported edge graph
  /// has more trees than the cap. A result in Exact mode then carries no
  /// count; in Auto mode it falls back to the Kirchhoff bound.
  bool exceeds_cap = false;
  /// Undefined when prom = 0.
  std::optional<double> com;
  /// Lexical nodes plus the root.
  std::size_t n = 1;
  CountMode mode = CountMode::Exact;
};

/// The number of supported analyses, found by enumerating the spanning trees
/// of the supported edge graph and filtering them by compatibility.
/// Coordination is simplified and anaphoric links are ignored. Throws
/// CapExceeded when the supported edge graph has more than `cap` trees; the
/// partial count is 0 because the check happens before enumerating.
PromiscuityResult promiscuity_exact(const AnnotationGraph& g, std::uint64_t cap = kDefaultCap,
                                    const SupportOptions& options = {});

enum class PromMode { Exact, Kirchhoff, Auto };

/// Never throws CapExceeded: Exact reports exceeds_cap instead and Auto
/// falls back to the Kirchhoff bound.
PromiscuityResult promiscuity(const AnnotationGraph& g, PromMode mode, std::uint64_t cap = kDefaultCap,
                              const SupportOptions& options = {});

/// 1 - ln(prom) / ln(n^(n-2)). Defined as 1 for n <= 2. Throws
/// Error(PromOutOfRange) unless 1 <= prom <= n^(n-2); the upper endpoint
/// gives exactly 0.
double commitment(const BigInt& prom, std::size_t n);

}  // namespace fudg
