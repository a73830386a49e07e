#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include "fudg/corpus.hpp"
#include "fudg/enumeration.hpp"
#include "fudg/json_io.hpp"

namespace fudg::toolkit {

inline constexpr std::size_t kMaxSamples = 20;
inline constexpr std::size_t kDefaultMaxPayload = 1 << 20;

/// The cap from the FUDG_CAP environment variable, or kDefaultCap.
std::uint64_t default_cap();

/// {"graph": ..., "violations": [...]}. GFL errors propagate as GflError.
Json parse_json(const AnnotationGraph& g);

/// Promiscuity fields merged with "support", "emptySupport" and up to
/// `samples` supported analyses in enumeration order.
Json analyze_json(const AnnotationGraph& g, PromMode mode, std::uint64_t cap, std::size_t samples);

PromMode parse_mode(std::string_view name);

struct Response {
  int status = 200;
  std::string body;
};

/// Stateless request handlers; bodies are JSON. Errors give status 400 and
/// {"error": {...}}.
Response handle_parse(std::string_view body);
Response handle_analyze(std::string_view body, std::uint64_t cap);
Response handle_agree(std::string_view body, std::uint64_t cap);
Response handle_health();

struct ServeOptions {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::size_t max_payload = kDefaultMaxPayload;
  std::uint64_t cap = kDefaultCap;
};

/// The /v1 API on an httplib server. Port 0 binds any free port.
class ApiServer {
 public:
  explicit ApiServer(const ServeOptions& options);
  ~ApiServer();
  ApiServer(const ApiServer&) = delete;
  ApiServer& operator=(const ApiServer&) = delete;

  /// The bound port, or -1 on failure.
  int bind();
  /// Blocks until stop().
  bool listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Blocks serving the /v1 API. Returns false when the socket cannot be
/// bound.
bool serve(const ServeOptions& options, std::ostream& log);

}  // namespace fudg::toolkit
