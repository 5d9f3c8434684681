#include <httplib.h>

#include <iostream>

#include "resonance/service.hpp"

namespace resonance {
namespace {

QueryParams ToParams(const httplib::Request& req) {
  QueryParams params;
  for (const auto& [name, value] : req.params) params.emplace(name, value);
  return params;
}

}  // namespace

struct HttpServer::Impl {
  httplib::Server server;
};

HttpServer::HttpServer(const ContextService& service, ServerOptions options)
    : impl_(std::make_unique<Impl>()), options_(std::move(options)) {
  auto& server = impl_->server;
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
  for (const char* path : {"/relate", "/entity", "/solutions", "/compare"}) {
    server.Get(path, [&service, path](const httplib::Request& req, httplib::Response& res) {
      const HttpResponse r = service.Handle(path, ToParams(req));
      res.status = r.status;
      for (const auto& [name, value] : r.headers) res.set_header(name, value);
      res.set_content(r.body, r.content_type);
    });
  }
  server.set_error_handler([&service](const httplib::Request& req, httplib::Response& res) {
    if (res.status != 404 || !res.body.empty()) return;
    const HttpResponse r = service.Handle(req.path, {});
    res.set_content(r.body, r.content_type);
  });
  if (!options_.ui_dir.empty() && !server.set_mount_point("/ui", options_.ui_dir.string())) {
    std::cerr << "warning: UI directory " << options_.ui_dir << " not found\n";
  }
}

HttpServer::~HttpServer() = default;

bool HttpServer::Bind() {
  if (options_.port == 0) {
    port_ = impl_->server.bind_to_any_port(options_.host);
    return port_ > 0;
  }
  if (!impl_->server.bind_to_port(options_.host, options_.port)) return false;
  port_ = options_.port;
  return true;
}

bool HttpServer::Listen() { return impl_->server.listen_after_bind(); }

void HttpServer::Stop() { impl_->server.stop(); }

}  // namespace resonance
