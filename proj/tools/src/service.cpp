#include "fudg/toolkit/service.hpp"

#include <cstdlib>
#include <ostream>

#include <httplib.h>

#include "fudg/compatibility.hpp"
#include "fudg/gfl.hpp"

namespace fudg::toolkit {

namespace {

[[noreturn]] void bad_request(const std::string& message) { throw Error(ErrorCode::BadInput, message); }

nlohmann::json parse_body(std::string_view body) {
  try {
    auto j = nlohmann::json::parse(body);
    if (!j.is_object()) bad_request("request body must be a JSON object");
    return j;
  } catch (const nlohmann::json::parse_error& e) {
    bad_request(std::string("malformed JSON: ") + e.what());
  }
}

std::string sentence_of(const nlohmann::json& tokens) {
  if (tokens.is_string()) return tokens.get<std::string>();
  if (!tokens.is_array()) bad_request("\"tokens\" must be a string or an array of strings");
  std::string s;
  for (const auto& t : tokens) {
    if (!t.is_string()) bad_request("\"tokens\" must be a string or an array of strings");
    if (!s.empty()) s += ' ';
    s += t.get<std::string>();
  }
  return s;
}

// {"graph": ...} or {"tokens": ..., "gfl": ...}.
AnnotationGraph annotation_of(const nlohmann::json& j) {
  if (!j.is_object()) bad_request("annotation must be an object");
  if (j.contains("graph")) return graph_from_json(j.at("graph"));
  if (!j.contains("tokens")) bad_request("annotation needs \"graph\" or \"tokens\"");
  const auto& gfl = j.contains("gfl") ? j.at("gfl") : nlohmann::json("");
  if (!gfl.is_string()) bad_request("\"gfl\" must be a string");
  return parse_annotation(sentence_of(j.at("tokens")), gfl.get<std::string>());
}

std::uint64_t cap_of(const nlohmann::json& j, std::uint64_t fallback) {
  if (!j.contains("cap")) return fallback;
  if (!j.at("cap").is_number_unsigned()) bad_request("\"cap\" must be a nonnegative integer");
  return j.at("cap").get<std::uint64_t>();
}

PromMode mode_of(const nlohmann::json& j) {
  if (!j.contains("mode")) return PromMode::Auto;
  if (!j.at("mode").is_string()) bad_request("\"mode\" must be a string");
  return parse_mode(j.at("mode").get<std::string>());
}

Response error_response(const Error& e) {
  Json j;
  j["error"] = error_to_json(e);
  return {400, j.dump()};
}

template <typename F>
Response guarded(F&& f) {
  try {
    return {200, f().dump()};
  } catch (const Error& e) {
    return error_response(e);
  } catch (const nlohmann::json::exception& e) {
    return error_response(Error(ErrorCode::BadInput, e.what()));
  }
}

}  // namespace

std::uint64_t default_cap() {
  if (const char* env = std::getenv("FUDG_CAP")) {
    char* end = nullptr;
    const auto value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return kDefaultCap;
}

PromMode parse_mode(std::string_view name) {
  if (name == "exact") return PromMode::Exact;
  if (name == "kirchhoff") return PromMode::Kirchhoff;
  if (name == "auto") return PromMode::Auto;
  throw Error(ErrorCode::BadInput, "unknown mode \"" + std::string(name) + "\"; expected exact, kirchhoff or auto");
}

Json parse_json(const AnnotationGraph& g) {
  Json j;
  j["graph"] = graph_to_json(g);
  j["violations"] = violations_to_json(g, validate(g));
  return j;
}

Json analyze_json(const AnnotationGraph& g, PromMode mode, std::uint64_t cap, std::size_t samples) {
  require_valid(g);
  Json j = promiscuity_to_json(promiscuity(g, mode, cap));
  const auto support = compute_support(g);
  auto s = support_to_json(g, support);
  j["emptySupport"] = s["emptySupport"];
  s.erase("emptySupport");
  j["support"] = s;
  auto analyses = Json::array();
  if (samples > 0 && support.consistent()) {
    const CompatibilityChecker checker(g);
    ArborescenceEnumerator trees(edge_graph_of(g, support.map), cap);
    try {
      while (analyses.size() < samples) {
        auto t = trees.next();
        if (!t) break;
        if (checker.supports(*t)) analyses.push_back(analysis_to_json(g, *t));
      }
    } catch (const CapExceeded&) {
    }
  }
  j["analyses"] = analyses;
  return j;
}

Response handle_parse(std::string_view body) {
  return guarded([&] { return parse_json(annotation_of(parse_body(body))); });
}

Response handle_analyze(std::string_view body, std::uint64_t cap) {
  return guarded([&] {
    const auto j = parse_body(body);
    std::size_t k = 0;
    if (j.contains("k")) {
      if (!j.at("k").is_number_unsigned()) bad_request("\"k\" must be a nonnegative integer");
      k = j.at("k").get<std::size_t>();
      if (k > kMaxSamples) bad_request("\"k\" must be at most " + std::to_string(kMaxSamples));
    }
    return analyze_json(annotation_of(j), mode_of(j), cap_of(j, cap), k);
  });
}

Response handle_agree(std::string_view body, std::uint64_t cap) {
  return guarded([&] {
    const auto j = parse_body(body);
    if (!j.contains("a1") || !j.contains("a2")) bad_request("request needs \"a1\" and \"a2\"");
    const auto a1 = annotation_of(j.at("a1"));
    const auto a2 = annotation_of(j.at("a2"));
    require_valid(a1);
    require_valid(a2);
    return pair_to_json(pair_agreement(a1, a2, mode_of(j), cap_of(j, cap)));
  });
}

Response handle_health() {
  Json j;
  j["status"] = "ok";
  return {200, j.dump()};
}

struct ApiServer::Impl {
  ServeOptions options;
  httplib::Server server;
};

ApiServer::ApiServer(const ServeOptions& options) : impl_(std::make_unique<Impl>()) {
  impl_->options = options;
  auto& server = impl_->server;
  server.set_payload_max_length(options.max_payload);
  auto bind = [](auto handler) {
    return [handler](const httplib::Request& req, httplib::Response& res) {
      const Response r = handler(req.body);
      res.status = r.status;
      res.set_content(r.body, "application/json");
    };
  };
  const auto cap = options.cap;
  server.Post("/v1/parse", bind([](std::string_view b) { return handle_parse(b); }));
  server.Post("/v1/analyze", bind([cap](std::string_view b) { return handle_analyze(b, cap); }));
  server.Post("/v1/agree", bind([cap](std::string_view b) { return handle_agree(b, cap); }));
  server.Get("/v1/health", [](const httplib::Request&, httplib::Response& res) {
    const auto r = handle_health();
    res.status = r.status;
    res.set_content(r.body, "application/json");
  });
}

ApiServer::~ApiServer() = default;

int ApiServer::bind() {
  const auto& o = impl_->options;
  if (o.port == 0) return impl_->server.bind_to_any_port(o.host);
  return impl_->server.bind_to_port(o.host, o.port) ? o.port : -1;
}

bool ApiServer::listen() { return impl_->server.listen_after_bind(); }

void ApiServer::stop() { impl_->server.stop(); }

bool serve(const ServeOptions& options, std::ostream& log) {
  ApiServer server(options);
  const int port = server.bind();
  if (port < 0) {
    log << "cannot bind " << options.host << ":" << options.port << "\n";
    return false;
  }
  log << "listening on http://" << options.host << ":" << port << "/v1\n";
  log.flush();
  return server.listen();
}

}  // namespace fudg::toolkit
