#include "fudg/validate.hpp"

#include <algorithm>
#include <map>

#include "fudg/normalize.hpp"

namespace fudg {

std::string_view to_string(ViolationCode code) noexcept {
  switch (code) {
    case ViolationCode::TwoHeads: return "TwoHeads";
    case ViolationCode::Cycle: return "Cycle";
    case ViolationCode::RootHasHead: return "RootHasHead";
    case ViolationCode::BadEndpoint: return "BadEndpoint";
    case ViolationCode::FudgeTooSmall: return "FudgeTooSmall";
    case ViolationCode::MultipleTops: return "MultipleTops";
    case ViolationCode::CyclicNesting: return "CyclicNesting";
    case ViolationCode::CoordMissingConjunct: return "CoordMissingConjunct";
    case ViolationCode::CoordMissingCoordinator: return "CoordMissingCoordinator";
    case ViolationCode::TokenShared: return "TokenShared";
  }
  return "Unknown";
}

namespace {

std::string summarize(const std::vector<Violation>& violations) {
  std::string msg;
  for (const auto& v : violations) {
    if (!msg.empty()) msg += "; ";
    msg += std::string(to_string(v.code)) + ": " + v.message;
  }
  return msg;
}

class Validator {
 public:
  explicit Validator(const AnnotationGraph& g) : g_(g) {}

  std::vector<Violation> run() {
    check_tokens();
    check_endpoints();
    check_heads_and_cycles(g_, {});
    check_fudges();
    check_coordination();
    if (out_.empty() && !g_.coord_nodes().empty()) {
      // Coordination becomes ordinary dependencies for every metric; the
      // single-head and acyclicity rules must survive that rewrite too.
      const auto simplified = simplify_coordination_traced(g_);
      check_heads_and_cycles(simplified.graph, simplified.origin);
    }
    return std::move(out_);
  }

 private:
  void add(ViolationCode code, std::vector<NodeId> nodes, std::string message) {
    Violation v{code, std::move(nodes), std::move(message)};
    if (std::find(out_.begin(), out_.end(), v) == out_.end()) out_.push_back(std::move(v));
  }

  std::string name(NodeId id) const { return g_.display_name(id); }

  void check_tokens() {
    std::map<TokenPosition, NodeId> owner;
    for (auto id : g_.lexical_nodes()) {
      for (auto p : g_.node(id).tokens) {
        auto [it, inserted] = owner.emplace(p, id);
        if (!inserted) {
          add(ViolationCode::TokenShared, {it->second, id},
              "token '" + g_.tokens()[p].surface() + "' belongs to " + name(it->second) + " and " +
                  name(id));
        }
      }
    }
  }

  void check_endpoints() {
    for (const auto& a : g_.deps()) {
      if (a.from == AnnotationGraph::root()) {
        add(ViolationCode::RootHasHead, {a.from}, "the root node cannot have a head");
      }
    }
    auto expect_target = [&](const std::set<Arc>& arcs, NodeKind kind, const char* what) {
      for (const auto& a : arcs) {
        if (g_.kind(a.to) != kind || a.from == AnnotationGraph::root()) {
          add(ViolationCode::BadEndpoint, {a.from, a.to},
              std::string(what) + " arc " + name(a.from) + " -> " + name(a.to) + " is malformed");
        }
      }
    };
    expect_target(g_.members(), NodeKind::Fudge, "member");
    expect_target(g_.conjuncts(), NodeKind::Coord, "conjunct");
    expect_target(g_.coordinators(), NodeKind::Coord, "coordinator");
    for (const auto& a : g_.tops()) {
      if (!g_.members().contains(a)) {
        add(ViolationCode::BadEndpoint, {a.from, a.to},
            "designated top " + name(a.from) + " is not a member of " + name(a.to));
      }
    }
    for (const auto& a : g_.anaph()) {
      if (a.from == AnnotationGraph::root() || a.to == AnnotationGraph::root()) {
        add(ViolationCode::BadEndpoint, {a.from, a.to}, "anaphoric link touches the root node");
      }
    }
  }

  // `origin` maps node ids of `graph` back to the validated graph; empty
  // means the identity.
  void check_heads_and_cycles(const AnnotationGraph& graph, const std::vector<NodeId>& origin) {
    auto back = [&](NodeId id) { return origin.empty() ? id : origin[id.value]; };
    const auto n = graph.node_count();
    std::vector<std::vector<NodeId>> heads(n);
    for (const auto& a : graph.deps()) heads[a.from.value].push_back(a.to);
    for (std::uint32_t i = 0; i < n; ++i) {
      if (heads[i].size() > 1) {
        std::vector<NodeId> nodes{back(NodeId{i})};
        std::string list;
        for (auto h : heads[i]) {
          nodes.push_back(back(h));
          if (!list.empty()) list += ", ";
          list += name(back(h));
        }
        add(ViolationCode::TwoHeads, nodes, name(back(NodeId{i})) + " has more than one head (" + list + ")");
      }
    }
    // Cycle detection over dependency arcs only.
    std::vector<std::uint8_t> state(n, 0);
    for (std::uint32_t start = 0; start < n; ++start) {
      if (state[start] != 0) continue;
      std::vector<std::pair<std::uint32_t, std::size_t>> stack{{start, 0}};
      std::vector<std::uint32_t> path{start};
      state[start] = 1;
      while (!stack.empty()) {
        auto& [v, idx] = stack.back();
        if (idx < heads[v].size()) {
          const auto w = heads[v][idx++].value;
          if (state[w] == 1) {
            auto it = std::find(path.begin(), path.end(), w);
            std::vector<NodeId> cycle;
            std::string desc;
            for (; it != path.end(); ++it) {
              cycle.push_back(back(NodeId{*it}));
              desc += name(back(NodeId{*it})) + " -> ";
            }
            desc += name(back(NodeId{w}));
            add(ViolationCode::Cycle, cycle, "dependency cycle " + desc);
          } else if (state[w] == 0) {
            state[w] = 1;
            stack.emplace_back(w, 0);
            path.push_back(w);
          }
        } else {
          state[v] = 2;
          stack.pop_back();
          path.pop_back();
        }
      }
    }
  }

  void check_fudges() {
    for (auto f : g_.fudge_nodes()) {
      const auto members = g_.members_of(f);
      if (members.size() < 2) {
        add(ViolationCode::FudgeTooSmall, {f},
            name(f) + " has " + std::to_string(members.size()) + " member(s); at least 2 are required");
      }
      std::size_t tops = 0;
      for (const auto& a : g_.tops()) tops += (a.to == f);
      if (tops > 1) add(ViolationCode::MultipleTops, {f}, name(f) + " has more than one designated top");
    }
    // Membership nesting must be acyclic.
    const auto n = g_.node_count();
    std::vector<std::vector<NodeId>> inner(n);
    for (const auto& a : g_.members()) inner[a.to.value].push_back(a.from);
    std::vector<std::uint8_t> state(n, 0);
    bool reported = false;
    auto visit = [&](auto&& self, std::uint32_t v) -> void {
      state[v] = 1;
      for (auto w : inner[v]) {
        if (state[w.value] == 1 && !reported) {
          add(ViolationCode::CyclicNesting, {NodeId{v}, w},
              "fudge expressions " + name(NodeId{v}) + " and " + name(w) + " contain each other");
          reported = true;
        } else if (state[w.value] == 0) {
          self(self, w.value);
        }
      }
      state[v] = 2;
    };
    for (std::uint32_t v = 0; v < n; ++v) {
      if (state[v] == 0) visit(visit, v);
    }
  }

  void check_coordination() {
    for (auto c : g_.coord_nodes()) {
      if (g_.conjuncts_of(c).empty()) {
        add(ViolationCode::CoordMissingConjunct, {c}, name(c) + " has no conjuncts");
      }
      if (g_.coordinators_of(c).empty()) {
        add(ViolationCode::CoordMissingCoordinator, {c}, name(c) + " has no coordinators");
      }
    }
  }

  const AnnotationGraph& g_;
  std::vector<Violation> out_;
};

}  // namespace

std::vector<Violation> validate(const AnnotationGraph& g) { return Validator(g).run(); }

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(ErrorCode::ValidationFailed, summarize(violations)), violations_(std::move(violations)) {}

void require_valid(const AnnotationGraph& g) {
  auto violations = validate(g);
  if (!violations.empty()) throw ValidationError(std::move(violations));
}

}  // namespace fudg
