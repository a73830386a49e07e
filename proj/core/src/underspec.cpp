#include "fudg/underspec.hpp"

#include <algorithm>
#include <set>

#include <boost/dynamic_bitset.hpp>

#include "counting.hpp"
#include "fudg/normalize.hpp"
#include "support_index.hpp"
#include "tree_search.hpp"

namespace fudg {

namespace detail {

namespace {

using Bits = boost::dynamic_bitset<>;

std::vector<std::uint32_t> to_list(const Bits& b) {
  std::vector<std::uint32_t> out;
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) {
    out.push_back(static_cast<std::uint32_t>(i));
  }
  return out;
}

// Bit sets over lexical vertices plus the root (bit m).
class LocalInference {
 public:
  explicit LocalInference(const Constraints& c)
      : c_(c), m_(c.m), n_(c.m + 1), lex_in_(c.m), fudge_in_(c.fudges.size()) {
    upward();
    forced_descendants();
    for (std::size_t k = 0; k < c_.fudges.size(); ++k) {
      const auto& spec = c_.fudges[k];
      for (std::size_t j = 0; j < spec.members.size(); ++j) {
        const auto& u = spec.members[j];
        if (u.kind == Unit::Kind::Lexical) lex_in_[u.index].emplace_back(k, j);
        if (u.kind == Unit::Kind::Fudge) fudge_in_[u.index].emplace_back(k, j);
      }
    }
    downward();
    tighten();
  }

  const std::vector<Bits>& candidates() const { return cand_; }

  std::vector<std::vector<std::uint32_t>> parents() const {
    std::vector<std::vector<std::uint32_t>> out(m_);
    for (std::size_t v = 0; v < m_; ++v) out[v] = to_list(parents_[v]);
    return out;
  }

 private:
  Bits single(std::size_t i) const {
    Bits b(n_);
    b.set(i);
    return b;
  }

  Bits all() const {
    Bits b(n_);
    b.set();
    return b;
  }

  Bits unit_cand(const Unit& u) const {
    switch (u.kind) {
      case Unit::Kind::Lexical: return single(u.index);
      case Unit::Kind::Root: return single(m_);
      case Unit::Kind::Fudge: return cand_[u.index];
    }
    return Bits(n_);
  }

  Bits unit_yield(const Unit& u) const {
    switch (u.kind) {
      case Unit::Kind::Lexical: return single(u.index);
      case Unit::Kind::Root: return Bits(n_);
      case Unit::Kind::Fudge: return yield_[u.index];
    }
    return Bits(n_);
  }

  // The lexical node that is the unit's top in every analysis, if any.
  std::optional<std::size_t> known_top(const Unit& u) const {
    switch (u.kind) {
      case Unit::Kind::Lexical: return u.index;
      case Unit::Kind::Root: return std::nullopt;
      case Unit::Kind::Fudge:
        if (cand_[u.index].count() == 1) return cand_[u.index].find_first();
        return std::nullopt;
    }
    return std::nullopt;
  }

  void upward() {
    for (const auto& spec : c_.fudges) {
      Bits cand(n_);
      Bits yield(n_);
      for (const auto& u : spec.members) {
        cand |= unit_cand(u);
        yield |= unit_yield(u);
      }
      if (spec.designated) cand = unit_cand(spec.members[*spec.designated]);
      cand_.push_back(std::move(cand));
      yield_.push_back(std::move(yield));
    }
  }

  // below_[t]: lexical nodes that lie strictly under t in every analysis.
  void forced_descendants() {
    below_.assign(m_, Bits(n_));
    for (const auto& [child, head] : c_.arcs) {
      if (auto t = known_top(head)) below_[*t] |= unit_yield(child);
    }
    for (std::size_t k = 0; k < c_.fudges.size(); ++k) {
      if (cand_[k].count() != 1) continue;
      const auto t = cand_[k].find_first();
      below_[t] |= yield_[k];
      below_[t].reset(t);
    }
    for (std::size_t y = 0; y < m_; ++y) {
      for (std::size_t t = 0; t < m_; ++t) {
        if (below_[t].test(y)) below_[t] |= below_[y];
      }
    }
  }

  Bits under(const Bits& nodes) const {
    Bits out = nodes;
    for (auto y = nodes.find_first(); y != Bits::npos; y = nodes.find_next(y)) {
      if (y < m_) out |= below_[y];
    }
    return out;
  }

  // Where the top of `unit` may attach because of its membership in
  // fudge expression `k` as member `j`.
  Bits membership(std::size_t k, std::size_t j, const Bits& unit_candidates) const {
    const auto& spec = c_.fudges[k];
    if (spec.designated && *spec.designated == j) return attach_[k];
    Bits out(n_);
    for (std::size_t i = 0; i < spec.members.size(); ++i) {
      if (i != j) out |= unit_cand(spec.members[i]);
    }
    if (unit_candidates.intersects(cand_[k])) out |= attach_[k];
    return out;
  }

  void downward() {
    const auto nf = c_.fudges.size();
    attach_.assign(nf, Bits(n_));
    // Containing expressions come later in `fudges`, so walk backwards.
    for (std::size_t k = nf; k-- > 0;) {
      Bits a = all();
      Bits excluded = under(yield_[k]);
      for (const auto& [child, head] : c_.arcs) {
        if (child.kind == Unit::Kind::Fudge && child.index == k) a &= unit_cand(head);
        if (head.kind == Unit::Kind::Fudge && head.index == k) excluded |= under(unit_yield(child));
      }
      for (const auto& [f, j] : fudge_in_[k]) a &= membership(f, j, cand_[k]);
      a -= excluded;
      attach_[k] = std::move(a);
    }

    parents_.assign(m_, Bits(n_));
    for (std::size_t v = 0; v < m_; ++v) {
      Bits a = all();
      const Unit self{Unit::Kind::Lexical, static_cast<std::uint32_t>(v)};
      for (const auto& [child, head] : c_.arcs) {
        if (child == self) a &= unit_cand(head);
      }
      const Bits mine = single(v);
      for (const auto& [f, j] : lex_in_[v]) a &= membership(f, j, mine);
      a.reset(v);
      a -= below_[v];
      parents_[v] = std::move(a);
    }
  }

  // Vertices outside `blocked` that reach the root without entering it.
  Bits escapes(const Bits& blocked) const {
    Bits reached(n_);
    reached.set(m_);
    std::vector<std::size_t> queue{m_};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const auto w = queue[qi];
      for (std::size_t u = 0; u < m_; ++u) {
        if (!reached.test(u) && !blocked.test(u) && parents_[u].test(w)) {
          reached.set(u);
          queue.push_back(u);
        }
      }
    }
    return reached;
  }

  // Nodes under `group` in every analysis: the ones that cannot reach the
  // root around it.
  Bits trapped(const Bits& group) const {
    Bits out = escapes(group);
    out.flip();
    out -= group;
    out.reset(m_);
    return out;
  }

  bool narrow(Bits& target, const Bits& allowed) {
    const Bits before = target;
    target &= allowed;
    return target != before;
  }

  // Propagates to a fixpoint: a member top that cannot attach inside its
  // expression is the expression's top; once the top is known the other
  // member tops attach inside; a member top attaches either inside the
  // expression or where the expression's top may attach, which excludes
  // everything trapped under its yield; a dependent attaches to a
  // candidate top of its head.
  void tighten() {
    const auto nf = c_.fudges.size();
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t v = 0; v < m_; ++v) {
        Bits none(n_);
        none.set(v);
        changed |= narrow(parents_[v], ~trapped(none));
      }
      for (const auto& [child, head] : c_.arcs) {
        if (const auto t = known_top(child)) changed |= narrow(parents_[*t], unit_cand(head));
      }
      for (std::size_t k = 0; k < nf; ++k) {
        const auto& spec = c_.fudges[k];
        Bits inside(n_);
        for (const auto& u : spec.members) inside |= unit_cand(u);
        Bits outside = ~(yield_[k] | trapped(yield_[k]));
        for (const auto& [child, head] : c_.arcs) {
          if (child.kind == Unit::Kind::Fudge && child.index == k) outside &= unit_cand(head);
        }
        for (const auto& u : spec.members) {
          const auto t = known_top(u);
          if (!t) continue;
          if (!parents_[*t].intersects(inside) && cand_[k].test(*t)) changed |= narrow(cand_[k], single(*t));
          if (!cand_[k].test(*t)) {
            changed |= narrow(parents_[*t], inside);
          } else {
            changed |= narrow(parents_[*t], inside | outside);
          }
        }
      }
      for (std::size_t v = 0; v < m_; ++v) {
        if (parents_[v].none()) return;
      }
    }
  }

  const Constraints& c_;
  std::size_t m_;
  std::size_t n_;
  std::vector<Bits> cand_;
  std::vector<Bits> yield_;
  std::vector<Bits> below_;
  std::vector<Bits> attach_;
  std::vector<Bits> parents_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> lex_in_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> fudge_in_;
};

std::vector<std::vector<std::uint32_t>> lexical_only(const std::vector<Bits>& sets, std::size_t m) {
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& b : sets) {
    auto list = to_list(b);
    list.erase(std::remove_if(list.begin(), list.end(), [m](auto x) { return x >= m; }), list.end());
    out.push_back(std::move(list));
  }
  return out;
}

void mark_inconsistent(IndexSupport& s, std::vector<std::uint32_t> empty, std::size_t m) {
  if (empty.empty()) {
    for (std::uint32_t v = 0; v < m; ++v) empty.push_back(v);
  }
  for (auto& p : s.parents) p.clear();
  for (auto& t : s.tops) t.clear();
  s.empty = std::move(empty);
  s.exact = true;
}

// Every supported analysis, read off a pruned search over the local
// candidate graph.
void refine_exhaustive(const Constraints& c, IndexSupport& s) {
  const auto m = c.m;
  std::vector<std::set<std::uint32_t>> parents(m);
  std::vector<std::set<std::uint32_t>> tops(c.fudges.size());
  Evaluator eval(c);
  const auto order = search_order(c);
  TreeSearch search(s.parents, order);
  auto prune = [&](std::span<const std::uint32_t> p) { return eval(p) != Verdict::Violated; };
  bool any = false;
  while (search.next(prune)) {
    any = true;
    const auto p = search.parent();
    for (std::size_t v = 0; v < m; ++v) parents[v].insert(p[v]);
    eval(p);
    const auto t = eval.tops();
    for (std::size_t k = 0; k < tops.size(); ++k) tops[k].insert(t[k]);
  }
  if (!any) {
    mark_inconsistent(s, {}, m);
    return;
  }
  for (std::size_t v = 0; v < m; ++v) s.parents[v].assign(parents[v].begin(), parents[v].end());
  for (std::size_t k = 0; k < tops.size(); ++k) s.tops[k].assign(tops[k].begin(), tops[k].end());
  s.exact = true;
}

// Confirms each candidate edge by finding one supported analysis that uses
// it; every analysis found confirms all of its edges at once.
void refine_witness(const Constraints& c, IndexSupport& s, std::uint64_t budget_per_edge) {
  const auto m = c.m;
  std::vector<std::set<std::uint32_t>> confirmed(m);
  std::vector<std::vector<std::uint32_t>> kept(m);
  Evaluator eval(c);
  auto prune = [&](std::span<const std::uint32_t> p) { return eval(p) != Verdict::Violated; };
  const auto order = search_order(c);
  bool exact = true;
  for (std::uint32_t v = 0; v < m; ++v) {
    for (auto h : s.parents[v]) {
      if (confirmed[v].contains(h)) {
        kept[v].push_back(h);
        continue;
      }
      TreeSearch search(s.parents, order);
      search.fix(v, h);
      std::uint64_t budget = budget_per_edge;
      if (search.next(prune, &budget)) {
        const auto p = search.parent();
        for (std::uint32_t u = 0; u < m; ++u) confirmed[u].insert(p[u]);
        kept[v].push_back(h);
      } else if (search.budget_exhausted()) {
        exact = false;
        kept[v].push_back(h);
      }
    }
  }
  std::vector<std::uint32_t> empty;
  for (std::uint32_t v = 0; v < m; ++v) {
    if (kept[v].empty()) empty.push_back(v);
  }
  if (!empty.empty()) {
    mark_inconsistent(s, std::move(empty), m);
    return;
  }
  s.parents = std::move(kept);
  s.exact = exact;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> local_tops(const Constraints& c) {
  return lexical_only(LocalInference(c).candidates(), c.m);
}

std::vector<std::vector<std::uint32_t>> local_parents(const Constraints& c) {
  return LocalInference(c).parents();
}

IndexSupport index_support(const Constraints& c, const SupportOptions& options) {
  LocalInference local(c);
  IndexSupport s;
  s.parents = local.parents();
  s.tops = lexical_only(local.candidates(), c.m);

  std::vector<std::uint32_t> empty;
  for (std::uint32_t v = 0; v < c.m; ++v) {
    if (s.parents[v].empty()) empty.push_back(v);
  }
  if (!empty.empty()) {
    mark_inconsistent(s, std::move(empty), c.m);
    return s;
  }
  // Without fudge expressions the inference is already exact.
  if (c.fudges.empty()) return s;

  switch (options.strategy) {
    case SupportStrategy::LocalOnly: s.exact = false; break;
    case SupportStrategy::Exhaustive: refine_exhaustive(c, s); break;
    case SupportStrategy::Witness: refine_witness(c, s, options.witness_budget); break;
    case SupportStrategy::Auto:
      if (count_in_trees(s.parents) <= options.exhaustive_limit) {
        refine_exhaustive(c, s);
      } else {
        refine_witness(c, s, options.witness_budget);
      }
      break;
  }
  return s;
}

Prepared prepare(const AnnotationGraph& g) {
  Prepared p;
  if (g.coord_nodes().empty()) {
    p.c = compile(g);
    p.lexical = p.c.lexical_ids;
    p.fudges = p.c.fudge_ids;
    return p;
  }
  const auto simplified = simplify_coordination_traced(g);
  p.c = compile(simplified.graph);
  for (auto id : p.c.lexical_ids) p.lexical.push_back(simplified.origin[id.value]);
  for (auto id : p.c.fudge_ids) p.fudges.push_back(simplified.origin[id.value]);
  return p;
}

}  // namespace detail

namespace {

std::string names_of(const AnnotationGraph& g, const std::vector<NodeId>& nodes) {
  std::string out;
  for (auto id : nodes) {
    if (!out.empty()) out += ", ";
    out += g.display_name(id);
  }
  return out;
}

std::vector<NodeId> to_nodes(const detail::Prepared& p, const std::vector<std::uint32_t>& indices) {
  std::vector<NodeId> out;
  for (auto i : indices) out.push_back(i == p.c.m ? AnnotationGraph::root() : p.lexical[i]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::map<NodeId, std::vector<NodeId>> possible_tops(const AnnotationGraph& g) {
  const auto p = detail::prepare(g);
  const auto tops = detail::local_tops(p.c);
  std::map<NodeId, std::vector<NodeId>> out;
  for (std::size_t k = 0; k < tops.size(); ++k) out[p.fudges[k]] = to_nodes(p, tops[k]);
  return out;
}

SupportResult compute_support(const AnnotationGraph& g, const SupportOptions& options) {
  const auto p = detail::prepare(g);
  const auto s = detail::index_support(p.c, options);
  SupportResult out;
  for (std::size_t v = 0; v < p.c.m; ++v) out.map.parents[p.lexical[v]] = to_nodes(p, s.parents[v]);
  for (std::size_t k = 0; k < s.tops.size(); ++k) out.map.tops[p.fudges[k]] = to_nodes(p, s.tops[k]);
  out.map.exact = s.exact;
  out.empty = to_nodes(p, s.empty);
  return out;
}

SupportMap supported_parents(const AnnotationGraph& g, const SupportOptions& options) {
  auto result = compute_support(g, options);
  if (!result.consistent()) throw EmptySupportError(result.empty, names_of(g, result.empty));
  return std::move(result.map);
}

std::size_t SupportedEdgeGraph::edge_count() const noexcept {
  std::size_t total = 0;
  for (const auto& h : heads) total += h.size();
  return total;
}

SupportedEdgeGraph SupportedEdgeGraph::complete(std::size_t lexical_count) {
  SupportedEdgeGraph g;
  g.heads.resize(lexical_count);
  for (std::uint32_t v = 0; v < lexical_count; ++v) {
    for (std::uint32_t h = 0; h <= lexical_count; ++h) {
      if (h != v) g.heads[v].push_back(h);
    }
  }
  return g;
}

SupportedEdgeGraph edge_graph_of(const AnnotationGraph& g, const SupportMap& map) {
  SupportedEdgeGraph out;
  out.vertices = g.lexical_nodes();
  const auto m = out.vertices.size();
  std::map<NodeId, std::uint32_t> index;
  for (std::uint32_t i = 0; i < m; ++i) index[out.vertices[i]] = i;
  out.heads.resize(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    auto it = map.parents.find(out.vertices[i]);
    if (it == map.parents.end()) continue;
    for (auto h : it->second) {
      out.heads[i].push_back(h == AnnotationGraph::root() ? static_cast<std::uint32_t>(m) : index.at(h));
    }
    std::sort(out.heads[i].begin(), out.heads[i].end());
  }
  out.vertices.push_back(AnnotationGraph::root());
  return out;
}

SupportedEdgeGraph supported_edge_graph(const AnnotationGraph& g, const SupportOptions& options) {
  return edge_graph_of(g, supported_parents(g, options));
}

}  // namespace fudg
