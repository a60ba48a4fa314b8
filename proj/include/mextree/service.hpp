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

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "mextree/render.hpp"

namespace mextree {

struct ServiceConfig {
  std::string host = "0.0.0.0";
  int port = 8080;
  // Base URL of an external LaTeX -> MathML converter; the LaTeX source is
  // POSTed to it as text/plain and the MathML response body used as is.
  std::optional<std::string> converter_url;
  RenderOptions render;
  std::size_t body_limit = 1 << 20;

  // Applies MEXTREE_PORT and MEXTREE_CONVERTER_URL; throws
  // Error(kInvalidOptions) on a malformed port.
  static ServiceConfig from_environment(ServiceConfig base);
  static ServiceConfig from_environment() { return from_environment(ServiceConfig{}); }

  void validate() const;
};

// Converter client. Throws Error with kConverterUnconfigured,
// kConverterUnreachable or kConverterBadResponse.
std::string convert_latex(std::string_view latex, const ServiceConfig& config);

struct HttpReply {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

// Request handlers independent of the HTTP transport.
HttpReply handle_tree(std::string_view body, std::string_view content_type,
                      const ServiceConfig& config);
HttpReply handle_tree_svg(std::string_view body, std::string_view content_type,
                          const ServiceConfig& config);
HttpReply handle_compare(std::string_view body, const ServiceConfig& config);
HttpReply handle_convert(std::string_view body, const ServiceConfig& config);
HttpReply handle_health();

// HTTP front end: POST /v1/tree, POST /v1/tree/svg, POST /v1/compare,
// POST /v1/convert, GET /v1/health. Responses carry permissive CORS headers.
class HttpService {
 public:
  explicit HttpService(ServiceConfig config);
  ~HttpService();
  HttpService(const HttpService&) = delete;
  HttpService& operator=(const HttpService&) = delete;

  // Binds config.host:config.port and returns the port, or -1 on failure.
  int bind();
  // Binds config.host on a free port chosen by the system.
  int bind_any_port();
  // Blocks until stop() is called.
  bool listen();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace mextree
