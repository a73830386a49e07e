#include "fudg/json_io.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace fudg {

namespace {

Json arcs_to_json(const std::set<Arc>& arcs) {
  auto out = Json::array();
  for (const auto& a : arcs) out.push_back(Json::array({a.from.value, a.to.value}));
  return out;
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

[[noreturn]] void bad(const std::string& message) { throw Error(ErrorCode::BadInput, message); }

std::uint32_t node_ref(const nlohmann::json& v, std::size_t count) {
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= count) bad("arc endpoint is not a node id");
  return v.get<std::uint32_t>();
}

std::vector<Arc> arcs_from_json(const nlohmann::json& j, const char* field, std::size_t count) {
  std::vector<Arc> out;
  if (!j.contains(field)) return out;
  const auto& arr = j.at(field);
  if (!arr.is_array()) bad(std::string("\"") + field + "\" must be an array");
  for (const auto& pair : arr) {
    if (!pair.is_array() || pair.size() != 2) bad(std::string("\"") + field + "\" entries must be [from, to]");
    out.push_back(Arc{NodeId{node_ref(pair[0], count)}, NodeId{node_ref(pair[1], count)}});
  }
  return out;
}

std::string_view mode_name(PromMode mode) {
  switch (mode) {
    case PromMode::Exact: return "exact";
    case PromMode::Kirchhoff: return "kirchhoff";
    case PromMode::Auto: return "auto";
  }
  return "auto";
}

}  // namespace

Json graph_to_json(const AnnotationGraph& g) {
  Json j;
  auto words = Json::array();
  for (const auto& t : g.tokens()) words.push_back(t.surface());
  j["tokens"] = words;
  auto nodes = Json::array();
  for (std::uint32_t i = 0; i < g.node_count(); ++i) {
    const auto& n = g.node(NodeId{i});
    Json node;
    node["id"] = i;
    node["kind"] = to_string(n.kind);
    node["tokens"] = n.tokens;
    node["label"] = n.label;
    nodes.push_back(node);
  }
  j["nodes"] = nodes;
  j["deps"] = arcs_to_json(g.deps());
  j["members"] = arcs_to_json(g.members());
  j["tops"] = arcs_to_json(g.tops());
  j["conjuncts"] = arcs_to_json(g.conjuncts());
  j["coordinators"] = arcs_to_json(g.coordinators());
  j["anaph"] = arcs_to_json(g.anaph());
  return j;
}

AnnotationGraph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object()) bad("graph must be an object");
  if (!j.contains("tokens") || !j.at("tokens").is_array()) bad("graph needs a \"tokens\" array");
  if (!j.contains("nodes") || !j.at("nodes").is_array()) bad("graph needs a \"nodes\" array");
  std::string sentence;
  for (const auto& t : j.at("tokens")) {
    if (!t.is_string()) bad("tokens must be strings");
    if (!sentence.empty()) sentence += ' ';
    sentence += t.get<std::string>();
  }
  AnnotationGraph g(sentence.empty() ? std::vector<SourceToken>{} : tokenize_input(sentence));
  const auto& nodes = j.at("nodes");
  try {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const auto& n = nodes[i];
      if (!n.is_object()) bad("nodes must be objects");
      if (n.contains("id") && n.at("id") != i) bad("nodes must be listed in id order");
      const auto kind = n.value("kind", std::string{});
      if (i == 0) {
        if (kind != "root") bad("node 0 must be the root");
        continue;
      }
      if (kind == "lexical") {
        g.add_lexical(n.at("tokens").get<std::vector<TokenPosition>>());
      } else if (kind == "fudge") {
        g.add_fudge();
      } else if (kind == "coord") {
        g.add_coord(n.value("label", std::string{}));
      } else {
        bad("unknown node kind \"" + kind + "\"");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    bad(e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::BadInput) throw;
    bad(e.what());
  }
  if (nodes.empty()) bad("node 0 must be the root");
  const auto count = g.node_count();
  const auto tops = arcs_from_json(j, "tops", count);
  for (const auto& a : arcs_from_json(j, "deps", count)) g.add_dep(a.from, a.to);
  for (const auto& a : arcs_from_json(j, "members", count)) {
    g.add_member(a.from, a.to, std::find(tops.begin(), tops.end(), a) != tops.end());
  }
  for (const auto& a : tops) g.add_member(a.from, a.to, true);
  for (const auto& a : arcs_from_json(j, "conjuncts", count)) g.add_conjunct(a.from, a.to);
  for (const auto& a : arcs_from_json(j, "coordinators", count)) g.add_coordinator(a.from, a.to);
  for (const auto& a : arcs_from_json(j, "anaph", count)) g.add_anaph(a.from, a.to);
  return g;
}

Json analysis_to_json(const AnnotationGraph& g, const Analysis& t) {
  const auto lex = g.lexical_nodes();
  auto out = Json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto h = t.head[i];
    const auto head = h == t.root_index() ? AnnotationGraph::root() : lex.at(h);
    out.push_back(Json::array({lex.at(i).value, head.value}));
  }
  return out;
}

Analysis analysis_from_json(const AnnotationGraph& g, const nlohmann::json& j) {
  const auto lex = g.lexical_nodes();
  std::map<std::uint32_t, std::uint32_t> index;
  for (std::uint32_t i = 0; i < lex.size(); ++i) index[lex[i].value] = i;
  const auto m = static_cast<std::uint32_t>(lex.size());
  Analysis t{std::vector<std::uint32_t>(m, std::numeric_limits<std::uint32_t>::max())};
  if (!j.is_array()) bad("analysis must be an array of [child, head] pairs");
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() || !pair[1].is_number_unsigned()) {
      bad("analysis entries must be [child, head]");
    }
    const auto c = index.find(pair[0].get<std::uint32_t>());
    if (c == index.end()) bad("analysis child is not a lexical node");
    const auto hv = pair[1].get<std::uint32_t>();
    std::uint32_t h = m;
    if (hv != AnnotationGraph::root().value) {
      const auto it = index.find(hv);
      if (it == index.end()) bad("analysis head is not a lexical node or the root");
      h = it->second;
    }
    if (t.head[c->second] != std::numeric_limits<std::uint32_t>::max()) bad("analysis names a child twice");
    t.head[c->second] = h;
  }
  for (auto h : t.head) {
    if (h == std::numeric_limits<std::uint32_t>::max()) bad("analysis leaves a lexical node without a head");
  }
  return t;
}

Json support_to_json(const AnnotationGraph& g, const SupportResult& support) {
  auto entries = [&](const std::map<NodeId, std::vector<NodeId>>& m, const char* key) {
    auto out = Json::array();
    for (const auto& [node, set] : m) {
      Json e;
      e["node"] = node.value;
      e["name"] = g.display_name(node);
      auto ids = Json::array();
      auto names = Json::array();
      for (const auto p : set) {
        ids.push_back(p.value);
        names.push_back(g.display_name(p));
      }
      e[key] = ids;
      e["names"] = names;
      out.push_back(e);
    }
    return out;
  };
  Json j;
  j["parents"] = entries(support.map.parents, "parents");
  j["tops"] = entries(support.map.tops, "tops");
  j["exact"] = support.map.exact;
  auto empty = Json::array();
  for (const auto id : support.empty) empty.push_back(id.value);
  j["emptySupport"] = empty;
  return j;
}

Json bigint_to_json(const BigInt& value) {
  if (value >= 0 && value <= (BigInt(1) << 53)) return Json(value.convert_to<std::uint64_t>());
  return Json(to_string(value));
}

Json promiscuity_to_json(const PromiscuityResult& r) {
  Json j;
  j["prom"] = r.exceeds_cap && r.mode == CountMode::Exact ? Json(nullptr) : bigint_to_json(r.prom);
  j["com"] = optional_number(r.com);
  j["n"] = r.n;
  j["mode"] = to_string(r.mode);
  j["exceedsCap"] = r.exceeds_cap;
  return j;
}

Json violation_to_json(const AnnotationGraph& g, const Violation& v) {
  Json j;
  j["code"] = to_string(v.code);
  j["message"] = v.message;
  auto nodes = Json::array();
  auto names = Json::array();
  for (const auto id : v.nodes) {
    nodes.push_back(id.value);
    names.push_back(g.display_name(id));
  }
  j["nodes"] = nodes;
  j["names"] = names;
  return j;
}

Json violations_to_json(const AnnotationGraph& g, const std::vector<Violation>& vs) {
  auto out = Json::array();
  for (const auto& v : vs) out.push_back(violation_to_json(g, v));
  return out;
}

Json error_to_json(const Error& e) {
  Json j;
  j["code"] = to_string(e.code());
  j["message"] = e.what();
  if (const auto* gfl = dynamic_cast<const GflError*>(&e)) {
    j["line"] = gfl->line();
    j["column"] = gfl->column() ? Json(*gfl->column()) : Json(nullptr);
  }
  if (const auto* empty = dynamic_cast<const EmptySupportError*>(&e)) {
    auto nodes = Json::array();
    for (const auto id : empty->nodes()) nodes.push_back(id.value);
    j["nodes"] = nodes;
  }
  if (const auto* invalid = dynamic_cast<const ValidationError*>(&e)) {
    auto vs = Json::array();
    for (const auto& v : invalid->violations()) {
      Json vj;
      vj["code"] = to_string(v.code);
      vj["message"] = v.message;
      auto nodes = Json::array();
      for (const auto id : v.nodes) nodes.push_back(id.value);
      vj["nodes"] = nodes;
      vs.push_back(vj);
    }
    j["violations"] = vs;
  }
  return j;
}

Json pair_to_json(const PairResult& r) {
  Json j;
  j["mode"] = to_string(r.mode);
  j["exceedsCap"] = r.exceeds_cap;
  j["com1"] = optional_number(r.com1);
  j["com2"] = optional_number(r.com2);
  j["rawCom1"] = optional_number(r.raw_com1);
  j["rawCom2"] = optional_number(r.raw_com2);
  j["comPrec12"] = optional_number(r.com_prec12);
  j["comPrec21"] = optional_number(r.com_prec21);
  j["softComPrec12"] = optional_number(r.soft_com_prec12);
  j["softComPrec21"] = optional_number(r.soft_com_prec21);
  j["f1"] = optional_number(r.f1);
  j["intersectionNonempty"] = r.intersection_nonempty;
  j["intersectionExact"] = r.intersection_exact;
  return j;
}

Json report_to_json(const AgreementReport& r) {
  Json j;
  j["mode"] = to_string(r.mode);
  j["total"] = r.total;
  j["n"] = r.n;
  j["nIntersect"] = r.n_intersect;
  j["excluded"] = r.excluded;
  j["dropped"] = r.dropped;
  j["meanCom1"] = optional_number(r.mean_com1);
  j["meanCom2"] = optional_number(r.mean_com2);
  j["meanComPrec12"] = optional_number(r.mean_com_prec12);
  j["meanComPrec21"] = optional_number(r.mean_com_prec21);
  j["meanSoftComPrec12"] = optional_number(r.mean_soft_com_prec12);
  j["meanSoftComPrec21"] = optional_number(r.mean_soft_com_prec21);
  j["meanF1"] = optional_number(r.mean_f1);
  j["f1"] = "harmonic mean of softComPrec12 and softComPrec21";
  return j;
}

Json stats_to_json(const StatsReport& r) {
  Json j;
  j["mode"] = mode_name(r.mode);
  j["documents"] = r.documents;
  j["singleWordNodes"] = r.single_word_nodes;
  j["multiwordNodes"] = r.multiword_nodes;
  j["omittedTokens"] = r.omitted_tokens;
  j["coordinationNodes"] = r.coordination_nodes;
  j["anaphLinks"] = r.anaph_links;
  j["fudgeNodes"] = r.fudge_nodes;
  j["utterances"] = Json::array({r.utterances_lo, r.utterances_hi});
  Json h;
  static constexpr const char* kBuckets[kHistogramBuckets] = {"=1", ">1", ">=10", ">=100", ">=1000", ">=10000"};
  for (std::size_t b = 0; b < kHistogramBuckets; ++b) h[kBuckets[b]] = r.prom_histogram[b];
  j["promHistogram"] = h;
  j["meanCom"] = optional_number(r.mean_com);
  j["inconsistent"] = r.inconsistent;
  j["overCap"] = r.over_cap;
  return j;
}

}  // namespace fudg
