#include <cmath>

#include "constraints.hpp"
#include "counting.hpp"
#include "fudg/enumeration.hpp"
#include "fudg/error.hpp"
#include "fudg/kirchhoff.hpp"
#include "support_index.hpp"
#include "tree_search.hpp"

namespace fudg {

std::string_view to_string(CountMode mode) noexcept {
  return mode == CountMode::Exact ? "exact" : "kirchhoff";
}

ArborescenceEnumerator::ArborescenceEnumerator(const SupportedEdgeGraph& g, std::uint64_t cap)
    : search_(std::make_unique<detail::TreeSearch>(g.heads)), cap_(cap) {}

ArborescenceEnumerator::~ArborescenceEnumerator() = default;
ArborescenceEnumerator::ArborescenceEnumerator(ArborescenceEnumerator&&) noexcept = default;
ArborescenceEnumerator& ArborescenceEnumerator::operator=(ArborescenceEnumerator&&) noexcept = default;

std::optional<Analysis> ArborescenceEnumerator::next() {
  if (!search_->next()) return std::nullopt;
  if (produced_ == cap_) throw CapExceeded(cap_, produced_);
  ++produced_;
  const auto p = search_->parent();
  return Analysis{std::vector<std::uint32_t>(p.begin(), p.end())};
}

std::vector<Analysis> enumerate_arborescences(const SupportedEdgeGraph& g, std::uint64_t cap) {
  std::vector<Analysis> out;
  ArborescenceEnumerator e(g, cap);
  while (auto t = e.next()) out.push_back(std::move(*t));
  return out;
}

double commitment(const BigInt& prom, std::size_t n) {
  auto out_of_range = [&]() {
    return Error(ErrorCode::PromOutOfRange, "promiscuity " + to_string(prom) + " is outside [1, n^(n-2)] for n = " +
                                                std::to_string(n));
  };
  if (n <= 2) {
    if (prom != 1) throw out_of_range();
    return 1.0;
  }
  const BigInt max = pow_bigint(n, n - 2);
  if (prom < 1 || prom > max) throw out_of_range();
  if (prom == 1) return 1.0;
  if (prom == max) return 0.0;
  return 1.0 - log_bigint(prom) / (static_cast<double>(n - 2) * std::log(static_cast<double>(n)));
}

namespace {

void set_com(PromiscuityResult& r) {
  if (r.prom >= 1) r.com = commitment(r.prom, r.n);
}

PromiscuityResult kirchhoff_of(const detail::Prepared& p, const detail::IndexSupport& s) {
  PromiscuityResult r;
  r.mode = CountMode::Kirchhoff;
  r.n = p.c.m + 1;
  r.prom = s.consistent() ? detail::count_in_trees(s.parents) : BigInt(0);
  set_com(r);
  return r;
}

PromiscuityResult exact_of(const detail::Prepared& p, const detail::IndexSupport& s, std::uint64_t cap) {
  PromiscuityResult r;
  r.mode = CountMode::Exact;
  r.n = p.c.m + 1;
  if (!s.consistent()) return r;
  if (detail::count_in_trees(s.parents) > cap) throw CapExceeded(cap, 0);
  detail::Evaluator eval(p.c);
  const auto order = detail::search_order(p.c);
  detail::TreeSearch search(s.parents, order);
  auto prune = [&](std::span<const std::uint32_t> partial) { return eval(partial) != detail::Verdict::Violated; };
  std::uint64_t count = 0;
  while (search.next(prune)) ++count;
  r.prom = count;
  set_com(r);
  return r;
}

}  // namespace

PromiscuityResult promiscuity_exact(const AnnotationGraph& g, std::uint64_t cap, const SupportOptions& options) {
  const auto p = detail::prepare(g);
  return exact_of(p, detail::index_support(p.c, options), cap);
}

PromiscuityResult promiscuity_kirchhoff(const AnnotationGraph& g, const SupportOptions& options) {
  const auto p = detail::prepare(g);
  return kirchhoff_of(p, detail::index_support(p.c, options));
}

PromiscuityResult promiscuity(const AnnotationGraph& g, PromMode mode, std::uint64_t cap,
                              const SupportOptions& options) {
  const auto p = detail::prepare(g);
  const auto s = detail::index_support(p.c, options);
  if (mode == PromMode::Kirchhoff) return kirchhoff_of(p, s);
  try {
    return exact_of(p, s, cap);
  } catch (const CapExceeded&) {
    PromiscuityResult r = mode == PromMode::Auto ? kirchhoff_of(p, s) : PromiscuityResult{};
    r.n = p.c.m + 1;
    r.exceeds_cap = true;
    return r;
  }
}

}  // namespace fudg
