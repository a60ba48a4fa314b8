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
#include "mextree/error.hpp"
#include "mextree/service.hpp"

namespace mextree {

std::string convert_latex(std::string_view latex, const ServiceConfig& config) {
  if (!config.converter_url) {
    throw Error(ErrorCode::kConverterUnconfigured, "no LaTeX converter URL configured");
  }
  const std::string& url = *config.converter_url;
  constexpr std::string_view kScheme = "http://";
  if (url.rfind(kScheme, 0) != 0) {
    throw Error(ErrorCode::kConverterUnreachable, "unsupported converter URL: " + url);
  }
  std::size_t slash = url.find('/', kScheme.size());
  std::string origin = slash == std::string::npos ? url : url.substr(0, slash);
  std::string path = slash == std::string::npos ? "/" : url.substr(slash);

  httplib::Client client(origin);
  client.set_connection_timeout(5);
  client.set_read_timeout(30);
  auto result = client.Post(path, std::string(latex), "text/plain; charset=utf-8");
  if (!result) {
    throw Error(ErrorCode::kConverterUnreachable,
                "converter request failed: " + httplib::to_string(result.error()));
  }
  if (result->status < 200 || result->status >= 300) {
    throw Error(ErrorCode::kConverterBadResponse,
                "converter answered HTTP " + std::to_string(result->status));
  }
  if (result->body.empty()) {
    throw Error(ErrorCode::kConverterBadResponse, "converter returned an empty body");
  }
  return result->body;
}

}  // namespace mextree
