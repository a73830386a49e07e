#include <algorithm>
#include <set>

#include "fudg/error.hpp"
#include "fudg/gfl.hpp"

namespace fudg {

std::string gfl_token_reference(const SourceToken& token) {
  const std::string& w = token.word;
  std::string out;
  const bool operator_like = w == "<" || w == ">" || w == "=" || w == "::";
  for (std::size_t i = 0; i < w.size(); ++i) {
    const char c = w[i];
    const bool special = c == '(' || c == ')' || c == '[' || c == ']' || c == '{' || c == '}' ||
                         c == '\\' || c == '*';
    const bool leading = i == 0 && (c == '$' || c == '#' || operator_like);
    if (special || leading) out += '\\';
    out += c;
  }
  if (token.occurrence_count > 1) out += "~" + std::to_string(token.occurrence);
  return out;
}

namespace {

[[noreturn]] void inexpressible(const std::string& why) {
  throw Error(ErrorCode::NotExpressible, "annotation cannot be written as GFL: " + why);
}

class Emitter {
 public:
  explicit Emitter(const AnnotationGraph& g) : g_(g), referenced_(g.node_count(), false) {}

  std::string run() {
    if (g_.lexical_nodes().empty() && !g_.tokens().empty()) {
      inexpressible("an annotation without lexical nodes reads back as one node per token");
    }
    classify_fudges();

    std::vector<std::string> lines;
    for (auto c : g_.coord_nodes()) lines.push_back(coord_line(c));
    for (const auto& a : g_.deps()) {
      if (is_fudge(a.from) || is_fudge(a.to)) continue;
      if (a.to == AnnotationGraph::root()) {
        lines.push_back(ref(a.from) + "**");
      } else {
        lines.push_back(ref(a.from) + " > " + ref(a.to));
      }
    }
    for (auto f : g_.fudge_nodes()) {
      if (anchor_[f.value] == Anchor::None) lines.push_back(top_level(f));
    }
    for (const auto& a : g_.anaph()) {
      if (is_fudge(a.from) || is_fudge(a.to)) inexpressible("anaphoric link on a fudge node");
      lines.push_back(ref(a.from) + " = " + ref(a.to));
    }
    for (auto id : g_.lexical_nodes()) {
      if (!referenced_[id.value]) lines.push_back(ref(id));
    }

    std::string out;
    for (const auto& l : lines) out += l + "\n";
    return out;
  }

 private:
  enum class Anchor { None, Member, Coordination, Dependent };

  bool is_fudge(NodeId id) const { return g_.kind(id) == NodeKind::Fudge; }

  void classify_fudges() {
    anchor_.assign(g_.node_count(), Anchor::None);
    std::vector<std::size_t> count(g_.node_count(), 0);
    auto bump = [&](NodeId id, Anchor a) {
      if (!is_fudge(id)) return;
      anchor_[id.value] = a;
      ++count[id.value];
    };
    for (const auto& a : g_.members()) bump(a.from, Anchor::Member);
    for (const auto& a : g_.conjuncts()) bump(a.from, Anchor::Coordination);
    for (const auto& a : g_.coordinators()) bump(a.from, Anchor::Coordination);
    for (const auto& a : g_.deps()) {
      if (is_fudge(a.to)) bump(a.from, Anchor::Dependent);
    }
    for (auto f : g_.fudge_nodes()) {
      if (count[f.value] > 1) inexpressible(g_.display_name(f) + " would have to be written twice");
      if (g_.members_of(f).size() < 2) inexpressible(g_.display_name(f) + " has fewer than two members");
      const auto heads = g_.heads_of(f);
      std::size_t plain = 0;
      for (auto h : heads) plain += !is_fudge(h);
      if (plain > 1) inexpressible(g_.display_name(f) + " has several heads");
      if (plain == 0) continue;
      const bool to_root = std::find(heads.begin(), heads.end(), AnnotationGraph::root()) != heads.end();
      switch (anchor_[f.value]) {
        case Anchor::None: break;
        case Anchor::Member:
          if (!to_root) inexpressible("nested " + g_.display_name(f) + " has a head of its own");
          for (const auto& a : g_.tops()) {
            if (a.from == f) inexpressible("designated " + g_.display_name(f) + " is also attached to the root");
          }
          break;
        default: inexpressible(g_.display_name(f) + " has a head and is also embedded elsewhere");
      }
    }
  }

  std::string ref(NodeId id) {
    const auto& n = g_.node(id);
    switch (n.kind) {
      case NodeKind::Lexical: {
        referenced_[id.value] = true;
        if (n.tokens.size() == 1) return gfl_token_reference(g_.tokens()[n.tokens.front()]);
        std::string s = "[";
        for (auto p : n.tokens) {
          if (s.size() > 1) s += ' ';
          s += gfl_token_reference(g_.tokens()[p]);
        }
        return s + "]";
      }
      case NodeKind::Coord: return n.label;
      case NodeKind::Root: inexpressible("the root node cannot be referenced");
      case NodeKind::Fudge: return wrapped(id);
    }
    return {};
  }

  std::string fudge_text(NodeId f) {
    if (!visiting_.insert(f.value).second) inexpressible("cyclic fudge structure");
    const auto top = g_.designated_top(f);
    std::string s = "(";
    for (auto m : g_.members_of(f)) {
      if (s.size() > 1) s += ' ';
      s += ref(m);
      if (top && *top == m) {
        s += '*';
      } else if (is_fudge(m)) {
        const auto heads = g_.heads_of(m);
        if (std::find(heads.begin(), heads.end(), AnnotationGraph::root()) != heads.end()) s += "**";
      }
    }
    visiting_.erase(f.value);
    return s + ")";
  }

  std::string incoming(NodeId f) {
    std::string s;
    for (const auto& a : g_.deps()) {
      if (a.to != f) continue;
      s += s.empty() ? "{" : " ";
      s += ref(a.from);
    }
    return s.empty() ? s : s + "}";
  }

  std::string wrapped(NodeId f) {
    const auto deps = incoming(f);
    if (deps.empty()) return fudge_text(f);
    return "(" + deps + " > " + fudge_text(f) + ")";
  }

  std::string top_level(NodeId f) {
    const auto deps = incoming(f);
    std::string s = deps.empty() ? fudge_text(f) : deps + " > " + fudge_text(f);
    for (auto h : g_.heads_of(f)) {
      if (is_fudge(h)) continue;
      if (h == AnnotationGraph::root()) {
        s = deps.empty() ? s + "**" : "(" + s + ")**";
      } else {
        s += " > " + ref(h);
      }
    }
    return s;
  }

  std::string coord_line(NodeId c) {
    const auto conjuncts = g_.conjuncts_of(c);
    const auto coordinators = g_.coordinators_of(c);
    if (conjuncts.empty() || coordinators.empty()) {
      inexpressible(g_.display_name(c) + " lacks conjuncts or coordinators");
    }
    auto list = [&](const std::vector<NodeId>& nodes) {
      std::string s = "{";
      for (auto n : nodes) {
        if (n == AnnotationGraph::root()) inexpressible("the root node cannot be coordinated");
        if (s.size() > 1) s += ' ';
        s += ref(n);
      }
      return s + "}";
    };
    return g_.node(c).label + " :: " + list(conjuncts) + " :: " + list(coordinators);
  }

  const AnnotationGraph& g_;
  std::vector<Anchor> anchor_;
  std::vector<bool> referenced_;
  std::set<std::uint32_t> visiting_;
};

}  // namespace

std::string emit_gfl(const AnnotationGraph& g) { return Emitter(g).run(); }

}  // namespace fudg
