// Copyright 2026 The mextree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "httplib.h"
#include "mextree/pipeline.hpp"
#include "mextree/service.hpp"

namespace mextree {

namespace {

void send(httplib::Response& res, const HttpReply& reply) {
  res.status = reply.status;
  res.set_content(reply.body, reply.content_type);
}

std::string status_error_name(int status) {
  switch (status) {
    case 404: return "NotFound";
    case 405: return "MethodNotAllowed";
    case 413: return "PayloadTooLarge";
    default: return "BadRequest";
  }
}

}  // namespace

struct HttpService::Impl {
  ServiceConfig config;
  httplib::Server server;
  int port = -1;
};

HttpService::HttpService(ServiceConfig config) : impl_(std::make_unique<Impl>()) {
  config.validate();
  impl_->config = std::move(config);
  const ServiceConfig& cfg = impl_->config;
  httplib::Server& server = impl_->server;

  server.set_payload_max_length(cfg.body_limit);
  server.set_default_headers({
      {"Access-Control-Allow-Origin", "*"},
      {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
      {"Access-Control-Allow-Headers", "Content-Type"},
  });
  server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (res.body.empty()) {
      res.set_content(dump_json(error_json(status_error_name(res.status),
                                           httplib::status_message(res.status))),
                      "application/json");
    }
  });

  server.Options(R"(/v1/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });
  server.Get("/v1/health", [](const httplib::Request&, httplib::Response& res) {
    send(res, handle_health());
  });
  server.Post("/v1/tree", [&cfg](const httplib::Request& req, httplib::Response& res) {
    send(res, handle_tree(req.body, req.get_header_value("Content-Type"), cfg));
  });
  server.Post("/v1/tree/svg", [&cfg](const httplib::Request& req, httplib::Response& res) {
    send(res, handle_tree_svg(req.body, req.get_header_value("Content-Type"), cfg));
  });
  server.Post("/v1/compare", [&cfg](const httplib::Request& req, httplib::Response& res) {
    send(res, handle_compare(req.body, cfg));
  });
  server.Post("/v1/convert", [&cfg](const httplib::Request& req, httplib::Response& res) {
    send(res, handle_convert(req.body, cfg));
  });
}

HttpService::~HttpService() { stop(); }

int HttpService::bind() {
  if (impl_->server.bind_to_port(impl_->config.host, impl_->config.port)) {
    impl_->port = impl_->config.port;
  }
  return impl_->port;
}

int HttpService::bind_any_port() {
  impl_->port = impl_->server.bind_to_any_port(impl_->config.host);
  return impl_->port;
}

bool HttpService::listen() { return impl_->server.listen_after_bind(); }

void HttpService::stop() {
  if (impl_->server.is_running()) impl_->server.stop();
}

void HttpService::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace mextree
