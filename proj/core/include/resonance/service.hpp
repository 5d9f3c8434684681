#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "resonance/cluster_solution.hpp"
#include "resonance/semantic_matrix.hpp"

namespace resonance {

using QueryParams = std::multimap<std::string, std::string>;

struct HttpResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
  std::vector<std::pair<std::string, std::string>> headers;
};

/// Request handling for the HTTP API, independent of any server library.
///
///   GET /relate?input=&show=&type=   context network
///   GET /entity?kind=&key=           entity metadata
///   GET /solutions                   loaded solutions with cluster counts
///   GET /compare?solutions=a,b&show= solution comparison network
///
/// Handlers never mutate state; identical requests yield identical bodies.
class ContextService {
 public:
  /// `index` may be null, in which case every endpoint answers 503.
  /// `assignments` are optional raw solutions keyed by id; when two compared
  /// solutions are both present, /compare adds an overlap summary.
  explicit ContextService(std::shared_ptr<const SemanticMatrix> index,
                          std::map<std::string, ClusterSolution> assignments = {});

  /// `params` are already percent-decoded.
  HttpResponse Handle(std::string_view path, const QueryParams& params) const;

  HttpResponse Relate(const QueryParams& params) const;
  HttpResponse Entity(const QueryParams& params) const;
  HttpResponse Solutions(const QueryParams& params) const;
  HttpResponse Compare(const QueryParams& params) const;

 private:
  std::shared_ptr<const SemanticMatrix> index_;
  std::map<std::string, ClusterSolution> assignments_;
};

struct ServerOptions {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::filesystem::path ui_dir;  // served under /ui when set
};

/// cpp-httplib front end for a ContextService. Adds an open CORS header to
/// every response.
class HttpServer {
 public:
  HttpServer(const ContextService& service, ServerOptions options);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds the socket; port 0 picks a free port. Returns false on failure.
  bool Bind();
  int port() const noexcept { return port_; }

  /// Serves until Stop() is called from another thread.
  bool Listen();
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  ServerOptions options_;
  int port_ = 0;
};

}  // namespace resonance
