#include "fudg/agreement.hpp"

#include <algorithm>

#include "constraints.hpp"
#include "counting.hpp"
#include "fudg/error.hpp"
#include "fudg/normalize.hpp"
#include "support_index.hpp"
#include "tree_search.hpp"

namespace fudg {

namespace {

struct Side {
  detail::Prepared p;
  detail::IndexSupport s;
  BigInt kirchhoff;
};

Side side_of(const AnnotationGraph& g, const SupportOptions& options) {
  Side out{detail::prepare(g), {}, 0};
  out.s = detail::index_support(out.p.c, options);
  if (out.s.consistent()) out.kirchhoff = detail::count_in_trees(out.s.parents);
  return out;
}

void require_same_lexical(const AnnotationGraph& g1, const Side& s1, const AnnotationGraph& g2, const Side& s2) {
  bool same = s1.p.lexical.size() == s2.p.lexical.size();
  for (std::size_t i = 0; same && i < s1.p.lexical.size(); ++i) {
    same = g1.node(s1.p.lexical[i]).tokens == g2.node(s2.p.lexical[i]).tokens;
  }
  if (!same) {
    throw Error(ErrorCode::DomainMismatch, "annotations do not share their lexical nodes; reconcile them first");
  }
}

// Trees satisfying every evaluator, searched over the intersection of the
// candidate sets. Stops after the first tree when `first_only`.
struct JointCount {
  std::uint64_t count = 0;
  bool exhausted = false;
};

JointCount joint_count(const Side& a, const Side& b, bool first_only, std::uint64_t* budget) {
  JointCount out;
  if (!a.s.consistent() || !b.s.consistent()) return out;
  const auto m = a.p.c.m;
  std::vector<std::vector<std::uint32_t>> heads(m);
  for (std::size_t v = 0; v < m; ++v) {
    std::set_intersection(a.s.parents[v].begin(), a.s.parents[v].end(), b.s.parents[v].begin(),
                          b.s.parents[v].end(), std::back_inserter(heads[v]));
    if (heads[v].empty()) return out;
  }
  detail::Evaluator ea(a.p.c);
  detail::Evaluator eb(b.p.c);
  auto prune = [&](std::span<const std::uint32_t> p) {
    return ea(p) != detail::Verdict::Violated && eb(p) != detail::Verdict::Violated;
  };
  const auto order = detail::search_order(a.p.c);
  detail::TreeSearch search(heads, order);
  while (search.next(prune, budget)) {
    ++out.count;
    if (first_only) break;
  }
  out.exhausted = search.budget_exhausted();
  return out;
}

BigInt exact_count(const Side& s, std::uint64_t cap) {
  if (!s.s.consistent()) return 0;
  if (s.kirchhoff > cap) throw CapExceeded(cap, 0);
  detail::Evaluator eval(s.p.c);
  const auto order = detail::search_order(s.p.c);
  detail::TreeSearch search(s.s.parents, order);
  auto prune = [&](std::span<const std::uint32_t> p) { return eval(p) != detail::Verdict::Violated; };
  std::uint64_t count = 0;
  while (search.next(prune)) ++count;
  return count;
}

std::optional<double> com_of(const BigInt& prom, std::size_t n) {
  if (prom < 1) return std::nullopt;
  return commitment(prom, n);
}

// sum |P1 & P2| / sum |P1|.
double parent_overlap(const Side& a, const Side& b) {
  std::size_t shared = 0;
  std::size_t total = 0;
  for (std::size_t v = 0; v < a.s.parents.size(); ++v) {
    std::vector<std::uint32_t> both;
    std::set_intersection(a.s.parents[v].begin(), a.s.parents[v].end(), b.s.parents[v].begin(),
                          b.s.parents[v].end(), std::back_inserter(both));
    shared += both.size();
    total += a.s.parents[v].size();
  }
  return total == 0 ? 1.0 : static_cast<double>(shared) / static_cast<double>(total);
}

}  // namespace

double com_prec(const AnnotationGraph& a1, const AnnotationGraph& a2, std::uint64_t cap,
                const SupportOptions& options) {
  const Side s1 = side_of(a1, options);
  const Side s2 = side_of(a2, options);
  require_same_lexical(a1, s1, a2, s2);
  const BigInt prom = exact_count(s1, cap);
  if (prom < 1) throw Error(ErrorCode::UndefinedCommitment, "the first annotation supports no analysis");
  const auto joint = joint_count(s1, s2, false, nullptr);
  return commitment(prom, s1.p.c.m + 1) * static_cast<double>(joint.count) / prom.convert_to<double>();
}

double soft_com_prec(const AnnotationGraph& a1, const AnnotationGraph& a2, CountMode mode, std::uint64_t cap,
                     const SupportOptions& options) {
  const Side s1 = side_of(a1, options);
  const Side s2 = side_of(a2, options);
  require_same_lexical(a1, s1, a2, s2);
  if (!s1.s.consistent() || !s2.s.consistent()) {
    throw Error(ErrorCode::UndefinedCommitment, "an annotation supports no analysis");
  }
  const BigInt prom = mode == CountMode::Exact ? exact_count(s1, cap) : s1.kirchhoff;
  const auto com = com_of(prom, s1.p.c.m + 1);
  if (!com) throw Error(ErrorCode::UndefinedCommitment, "the first annotation supports no analysis");
  return *com * parent_overlap(s1, s2);
}

PairResult pair_agreement(const AnnotationGraph& a1, const AnnotationGraph& a2, PromMode mode, std::uint64_t cap,
                          const SupportOptions& options) {
  auto [r1, r2] = reconcile_lexical(a1, a2);
  const Side s1 = side_of(r1, options);
  const Side s2 = side_of(r2, options);
  const auto n = s1.p.c.m + 1;

  PairResult r;
  const bool fits = s1.kirchhoff <= cap && s2.kirchhoff <= cap;
  bool exact = false;
  switch (mode) {
    case PromMode::Exact:
      if (!fits) {
        r.mode = CountMode::Exact;
        r.exceeds_cap = true;
        return r;
      }
      exact = true;
      break;
    case PromMode::Kirchhoff: exact = false; break;
    case PromMode::Auto: exact = fits; break;
  }
  r.mode = exact ? CountMode::Exact : CountMode::Kirchhoff;

  const PromMode raw_mode = exact ? PromMode::Auto : PromMode::Kirchhoff;
  r.raw_com1 = promiscuity(a1, raw_mode, cap, options).com;
  r.raw_com2 = promiscuity(a2, raw_mode, cap, options).com;

  const BigInt prom1 = exact ? exact_count(s1, cap) : (s1.s.consistent() ? s1.kirchhoff : BigInt(0));
  const BigInt prom2 = exact ? exact_count(s2, cap) : (s2.s.consistent() ? s2.kirchhoff : BigInt(0));
  r.com1 = com_of(prom1, n);
  r.com2 = com_of(prom2, n);

  if (r.com1 && r.com2 && s1.s.consistent() && s2.s.consistent()) {
    const double p = *r.com1 * parent_overlap(s1, s2);
    const double q = *r.com2 * parent_overlap(s2, s1);
    r.soft_com_prec12 = p;
    r.soft_com_prec21 = q;
    r.f1 = p + q == 0.0 ? 0.0 : 2.0 * p * q / (p + q);
  }

  if (exact) {
    const auto joint = joint_count(s1, s2, false, nullptr);
    r.intersection_nonempty = joint.count > 0;
    if (r.com1) r.com_prec12 = *r.com1 * static_cast<double>(joint.count) / prom1.convert_to<double>();
    if (r.com2) r.com_prec21 = *r.com2 * static_cast<double>(joint.count) / prom2.convert_to<double>();
  } else {
    std::uint64_t budget = options.witness_budget * 10;
    const auto joint = joint_count(s1, s2, true, &budget);
    r.intersection_nonempty = joint.count > 0;
    r.intersection_exact = joint.count > 0 || !joint.exhausted;
  }
  return r;
}

AgreementReport summarize_agreement(std::span<const PairResult> results, CountMode mode) {
  AgreementReport out;
  out.mode = mode;
  out.total = results.size();
  struct Mean {
    double sum = 0;
    std::size_t count = 0;
    void add(const std::optional<double>& v) {
      if (v) {
        sum += *v;
        ++count;
      }
    }
    std::optional<double> get() const {
      if (count == 0) return std::nullopt;
      return sum / static_cast<double>(count);
    }
  };
  Mean com1, com2, cp12, cp21, s12, s21, f1;
  for (const auto& r : results) {
    if (r.exceeds_cap) {
      ++out.dropped;
      continue;
    }
    ++out.n;
    if (r.intersection_nonempty) ++out.n_intersect;
    com1.add(r.com1);
    com2.add(r.com2);
    cp12.add(r.com_prec12);
    cp21.add(r.com_prec21);
    if (!r.f1) {
      ++out.excluded;
      continue;
    }
    s12.add(r.soft_com_prec12);
    s21.add(r.soft_com_prec21);
    f1.add(r.f1);
  }
  out.mean_com1 = com1.get();
  out.mean_com2 = com2.get();
  out.mean_com_prec12 = cp12.get();
  out.mean_com_prec21 = cp21.get();
  out.mean_soft_com_prec12 = s12.get();
  out.mean_soft_com_prec21 = s21.get();
  out.mean_f1 = f1.get();
  return out;
}

AgreementReport corpus_agreement(std::span<const std::pair<AnnotationGraph, AnnotationGraph>> pairs,
                                 CountMode mode, std::uint64_t cap, const SupportOptions& options) {
  std::vector<PairResult> results;
  results.reserve(pairs.size());
  const PromMode pm = mode == CountMode::Exact ? PromMode::Exact : PromMode::Kirchhoff;
  for (const auto& [a1, a2] : pairs) results.push_back(pair_agreement(a1, a2, pm, cap, options));
  return summarize_agreement(results, mode);
}

}  // namespace fudg
