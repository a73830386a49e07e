#pragma once

// Backtracking search over the spanning in-trees of a candidate-parent
// graph. Vertices are 0..m-1 and the root is m. After every choice the
// search checks that all vertices can still reach the root, so without a
// pruning predicate it never reaches a dead end.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "constraints.hpp"

namespace fudg::detail {

class TreeSearch {
 public:
  /// `order` is the preferred assignment order; vertices with a single
  /// candidate always go first. Without it vertices are taken by
  /// increasing candidate count.
  explicit TreeSearch(std::span<const std::vector<std::uint32_t>> heads, std::span<const std::uint32_t> order = {})
      : heads_(heads.begin(), heads.end()),
        preferred_(order.begin(), order.end()),
        m_(static_cast<std::uint32_t>(heads.size())),
        parent_(heads.size(), kUnassigned),
        rev_(heads.size() + 1),
        reached_(heads.size() + 1, false) {
    for (std::uint32_t u = 0; u < m_; ++u) {
      for (auto h : heads_[u]) rev_[h].push_back(u);
    }
  }

  /// Pins `v -> p` before the search starts.
  void fix(std::uint32_t v, std::uint32_t p) {
    if (std::find(heads_[v].begin(), heads_[v].end(), p) == heads_[v].end()) {
      heads_[v].push_back(p);
      rev_[p].push_back(v);
    }
    parent_[v] = p;
  }

  /// Advances to the next complete tree accepted by `prune`, which sees
  /// partial assignments (kUnassigned entries) and returns false to cut the
  /// branch. Each tentative assignment consumes one unit of `budget` when
  /// given; running out stops the search with budget_exhausted() set.
  template <typename Prune>
  bool next(Prune&& prune, std::uint64_t* budget = nullptr) {
    if (done_) return false;
    if (!started_) {
      started_ = true;
      if (preferred_.empty()) {
        for (std::uint32_t v = 0; v < m_; ++v) {
          if (parent_[v] == kUnassigned) order_.push_back(v);
        }
        std::stable_sort(order_.begin(), order_.end(),
                         [&](auto a, auto b) { return heads_[a].size() < heads_[b].size(); });
      } else {
        for (auto v : preferred_) {
          if (parent_[v] == kUnassigned) order_.push_back(v);
        }
        std::stable_partition(order_.begin(), order_.end(), [&](auto v) { return heads_[v].size() <= 1; });
      }
      choice_.assign(order_.size() + 1, 0);
      if (!fixed_acyclic() || !feasible() || !prune(std::span<const std::uint32_t>(parent_))) {
        done_ = true;
        return false;
      }
      level_ = 0;
    } else {
      if (order_.empty()) {
        done_ = true;
        return false;
      }
      level_ = order_.size() - 1;
      parent_[order_[level_]] = kUnassigned;
    }

    while (true) {
      if (level_ == order_.size()) return true;
      const auto u = order_[level_];
      const auto& hs = heads_[u];
      bool found = false;
      while (choice_[level_] < hs.size()) {
        const auto h = hs[choice_[level_]++];
        if (would_cycle(u, h)) continue;
        if (budget) {
          if (*budget == 0) {
            exhausted_ = true;
            done_ = true;
            return false;
          }
          --*budget;
        }
        parent_[u] = h;
        if (feasible() && prune(std::span<const std::uint32_t>(parent_))) {
          found = true;
          break;
        }
        parent_[u] = kUnassigned;
      }
      if (found) {
        ++level_;
        if (level_ < order_.size()) choice_[level_] = 0;
        continue;
      }
      if (level_ == 0) {
        done_ = true;
        return false;
      }
      --level_;
      parent_[order_[level_]] = kUnassigned;
    }
  }

  bool next() {
    return next([](std::span<const std::uint32_t>) { return true; });
  }

  std::span<const std::uint32_t> parent() const noexcept { return parent_; }
  bool budget_exhausted() const noexcept { return exhausted_; }

 private:
  bool would_cycle(std::uint32_t u, std::uint32_t h) const {
    auto x = h;
    while (true) {
      if (x == u) return true;
      if (x == m_ || parent_[x] == kUnassigned) return false;
      x = parent_[x];
    }
  }

  bool fixed_acyclic() const {
    for (std::uint32_t v = 0; v < m_; ++v) {
      if (parent_[v] == kUnassigned) continue;
      std::uint32_t x = parent_[v];
      std::uint32_t steps = 0;
      while (x != m_ && parent_[x] != kUnassigned) {
        if (x == v || ++steps > m_) return false;
        x = parent_[x];
      }
      if (x == v) return false;
    }
    return true;
  }

  // Every vertex reaches the root through fixed edges of assigned vertices
  // and any candidate edge of unassigned ones.
  bool feasible() {
    std::fill(reached_.begin(), reached_.end(), false);
    queue_.clear();
    queue_.push_back(m_);
    reached_[m_] = true;
    std::size_t count = 0;
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      const auto w = queue_[qi];
      for (auto u : rev_[w]) {
        if (reached_[u]) continue;
        if (parent_[u] != kUnassigned && parent_[u] != w) continue;
        reached_[u] = true;
        ++count;
        queue_.push_back(u);
      }
    }
    return count == m_;
  }

  std::vector<std::vector<std::uint32_t>> heads_;
  std::vector<std::uint32_t> preferred_;
  std::uint32_t m_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::vector<std::uint32_t>> rev_;
  std::vector<bool> reached_;
  std::vector<std::uint32_t> queue_;
  std::vector<std::uint32_t> order_;
  std::vector<std::size_t> choice_;
  std::size_t level_ = 0;
  bool started_ = false;
  bool done_ = false;
  bool exhausted_ = false;
};

}  // namespace fudg::detail
