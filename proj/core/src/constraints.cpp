#include "constraints.hpp"

#include <algorithm>

#include "fudg/error.hpp"

namespace fudg::detail {

Constraints compile(const AnnotationGraph& g) {
  if (!g.coord_nodes().empty()) {
    throw Error(ErrorCode::InvalidArgument,
                "annotation still contains coordination nodes; simplify coordination first");
  }
  Constraints c;
  c.lexical_ids = g.lexical_nodes();
  c.m = c.lexical_ids.size();

  const auto n = g.node_count();
  std::vector<Unit> unit(n);
  unit[0] = Unit{Unit::Kind::Root, c.root()};
  for (std::uint32_t i = 0; i < c.lexical_ids.size(); ++i) {
    unit[c.lexical_ids[i].value] = Unit{Unit::Kind::Lexical, i};
  }

  // Post-order over member arcs puts nested expressions first.
  const auto fudges = g.fudge_nodes();
  std::vector<std::uint8_t> state(n, 0);
  auto visit = [&](auto&& self, NodeId f) -> void {
    state[f.value] = 1;
    for (auto m : g.members_of(f)) {
      if (g.kind(m) != NodeKind::Fudge) continue;
      if (state[m.value] == 1) {
        throw Error(ErrorCode::CyclicNesting, "fudge expression membership is cyclic");
      }
      if (state[m.value] == 0) self(self, m);
    }
    state[f.value] = 2;
    unit[f.value] = Unit{Unit::Kind::Fudge, static_cast<std::uint32_t>(c.fudge_ids.size())};
    c.fudge_ids.push_back(f);
  };
  for (auto f : fudges) {
    if (state[f.value] == 0) visit(visit, f);
  }

  for (auto f : c.fudge_ids) {
    FudgeSpec spec;
    const auto designated = g.designated_top(f);
    for (auto m : g.members_of(f)) {
      const auto kind = g.kind(m);
      if (kind != NodeKind::Lexical && kind != NodeKind::Fudge) {
        throw Error(ErrorCode::InvalidArgument, "fudge member must be a lexical or fudge node");
      }
      if (designated && *designated == m) spec.designated = spec.members.size();
      spec.members.push_back(unit[m.value]);
    }
    c.fudges.push_back(std::move(spec));
  }

  for (const auto& arc : g.deps()) {
    if (arc.from == AnnotationGraph::root()) {
      throw Error(ErrorCode::InvalidArgument, "the root node cannot have a head");
    }
    c.arcs.emplace_back(unit[arc.from.value], unit[arc.to.value]);
  }
  return c;
}

std::vector<std::uint32_t> search_order(const Constraints& c) {
  std::vector<std::uint32_t> order;
  std::vector<bool> placed(c.m, false);
  auto place = [&](std::uint32_t v) {
    if (!placed[v]) {
      placed[v] = true;
      order.push_back(v);
    }
  };
  std::vector<std::vector<std::uint32_t>> yield(c.fudges.size());
  for (std::size_t k = 0; k < c.fudges.size(); ++k) {
    for (const auto& u : c.fudges[k].members) {
      if (u.kind == Unit::Kind::Lexical) {
        yield[k].push_back(u.index);
      } else if (u.kind == Unit::Kind::Fudge) {
        yield[k].insert(yield[k].end(), yield[u.index].begin(), yield[u.index].end());
      }
    }
    for (auto v : yield[k]) place(v);
    for (const auto& [child, head] : c.arcs) {
      if (head.kind == Unit::Kind::Fudge && head.index == k && child.kind == Unit::Kind::Lexical) place(child.index);
    }
  }
  for (std::uint32_t v = 0; v < c.m; ++v) place(v);
  return order;
}

Evaluator::Evaluator(const Constraints& c) : c_(&c), tops_(c.fudges.size(), kUnassigned) {}

std::uint32_t Evaluator::unit_top(const Unit& u) const {
  switch (u.kind) {
    case Unit::Kind::Lexical: return u.index;
    case Unit::Kind::Root: return c_->root();
    case Unit::Kind::Fudge: return tops_[u.index];
  }
  return kUnassigned;
}

Verdict Evaluator::operator()(std::span<const std::uint32_t> parent) {
  const auto& c = *c_;
  bool unknown = false;
  std::fill(tops_.begin(), tops_.end(), kUnassigned);

  for (std::size_t k = 0; k < c.fudges.size(); ++k) {
    const auto& f = c.fudges[k];
    auto& set = scratch_;
    set.clear();
    bool complete = true;
    for (const auto& member : f.members) {
      const auto t = unit_top(member);
      if (t == kUnassigned) {
        complete = false;
        break;
      }
      set.push_back(t);
    }
    if (!complete) {
      unknown = true;
      continue;
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    auto in_set = [&](std::uint32_t v) { return std::binary_search(set.begin(), set.end(), v); };

    std::size_t external = 0;
    std::uint32_t external_node = kUnassigned;
    bool open = false;
    for (auto s : set) {
      const auto p = parent[s];
      if (p == kUnassigned) {
        open = true;
      } else if (!in_set(p)) {
        ++external;
        external_node = s;
      }
    }
    if (external > 1) return Verdict::Violated;

    std::uint32_t top = kUnassigned;
    if (f.designated) {
      top = unit_top(f.members[*f.designated]);
      if (external == 1 && external_node != top) return Verdict::Violated;
      if (parent[top] != kUnassigned && in_set(parent[top])) return Verdict::Violated;
    } else if (external == 1) {
      top = external_node;
    }
    if (!open && external == 0) return Verdict::Violated;
    if (open) unknown = true;
    tops_[k] = top;
  }

  for (const auto& [child, head] : c.arcs) {
    const auto ct = unit_top(child);
    const auto ht = unit_top(head);
    if (ct == kUnassigned || ht == kUnassigned || parent[ct] == kUnassigned) {
      unknown = true;
      continue;
    }
    if (parent[ct] != ht) return Verdict::Violated;
  }
  return unknown ? Verdict::Unknown : Verdict::Satisfied;
}

}  // namespace fudg::detail
