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

#include <cstdlib>
#include <string>

#include "mextree/error.hpp"
#include "mextree/service.hpp"

namespace mextree {

ServiceConfig ServiceConfig::from_environment(ServiceConfig base) {
  if (const char* port = std::getenv("MEXTREE_PORT"); port != nullptr && *port != '\0') {
    std::size_t used = 0;
    int value = -1;
    try {
      value = std::stoi(port, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != std::char_traits<char>::length(port)) {
      throw Error(ErrorCode::kInvalidOptions,
                  std::string("MEXTREE_PORT is not a number: ") + port);
    }
    base.port = value;
  }
  if (const char* url = std::getenv("MEXTREE_CONVERTER_URL"); url != nullptr && *url != '\0') {
    base.converter_url = url;
  }
  base.validate();
  return base;
}

void ServiceConfig::validate() const {
  if (port < 1 || port > 65535) {
    throw Error(ErrorCode::kInvalidOptions, "port must be in [1, 65535]");
  }
  if (body_limit == 0) {
    throw Error(ErrorCode::kInvalidOptions, "body limit must be positive");
  }
  if (converter_url && converter_url->rfind("http://", 0) != 0) {
    throw Error(ErrorCode::kInvalidOptions, "converter URL must start with http://");
  }
  render.validate();
}

}  // namespace mextree
