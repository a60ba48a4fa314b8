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

#include <array>

#include "mextree/pipeline.hpp"
#include "mextree/service.hpp"

namespace mextree {

namespace {

constexpr auto kMathMLTypes = std::to_array<std::string_view>({
    "application/mathml+xml", "text/xml", "application/xml",
});

std::string_view media_type(std::string_view content_type) {
  auto semi = content_type.find(';');
  if (semi != std::string_view::npos) content_type = content_type.substr(0, semi);
  while (!content_type.empty() && content_type.back() == ' ') content_type.remove_suffix(1);
  return content_type;
}

HttpReply error_reply(int status, const Json& body) {
  return {status, "application/json", dump_json(body)};
}

int status_for(const Error& error) {
  switch (error.code()) {
    case ErrorCode::kConverterUnconfigured: return 503;
    case ErrorCode::kConverterUnreachable:
    case ErrorCode::kConverterBadResponse: return 502;
    default: return 400;
  }
}

// Runs a handler body, mapping failures to structured error replies.
template <typename F>
HttpReply guarded(F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return error_reply(status_for(e), error_json(e));
  } catch (const std::exception& e) {
    return error_reply(500, error_json("Internal", e.what()));
  }
}

std::optional<HttpReply> reject_content_type(std::string_view content_type) {
  std::string_view type = media_type(content_type);
  if (type.empty()) return std::nullopt;
  for (std::string_view accepted : kMathMLTypes) {
    if (type == accepted) return std::nullopt;
  }
  return error_reply(415, error_json("UnsupportedMediaType",
                                     "expected application/mathml+xml, got " +
                                         std::string(type)));
}

}  // namespace

HttpReply handle_tree(std::string_view body, std::string_view content_type,
                      const ServiceConfig& config) {
  if (auto rejected = reject_content_type(content_type)) return *rejected;
  return guarded([&] {
    return HttpReply{200, "application/json", tree_json(tree_for(body, config.render))};
  });
}

HttpReply handle_tree_svg(std::string_view body, std::string_view content_type,
                          const ServiceConfig& config) {
  if (auto rejected = reject_content_type(content_type)) return *rejected;
  return guarded([&] {
    ExpressionTree tree = tree_for(body, config.render);
    return HttpReply{200, "image/svg+xml", tree_svg(tree, config.render)};
  });
}

HttpReply handle_compare(std::string_view body, const ServiceConfig& config) {
  return guarded([&] {
    Json request = Json::parse(body, nullptr, false);
    if (request.is_discarded() || !request.is_object()) {
      return error_reply(400, error_json("InvalidRequest", "body must be a JSON object"));
    }
    for (const char* key : {"mathmlA", "mathmlB"}) {
      if (!request.contains(key) || !request.at(key).is_string()) {
        return error_reply(400, error_json("InvalidRequest",
                                           std::string("missing string field '") + key + "'"));
      }
    }
    bool has_spec = request.contains("spec") && !request.at("spec").is_null();
    bool has_measure = request.contains("measure") && !request.at("measure").is_null();
    if (has_spec == has_measure) {
      return error_reply(400, error_json("InvalidRequest",
                                         "exactly one of 'spec' and 'measure' is required"));
    }
    CompareRequest compare;
    compare.mathml_a = request.at("mathmlA").get<std::string>();
    compare.mathml_b = request.at("mathmlB").get<std::string>();
    if (has_spec) {
      compare.spec = spec_from_json(request.at("spec").dump());
    } else {
      const Json& measure = request.at("measure");
      auto parsed = measure.is_string() ? parse_measure(measure.get<std::string>())
                                        : std::nullopt;
      if (!parsed) {
        return error_reply(400, error_json("InvalidRequest",
                                           "measure must be \"identical\" or \"taxonomic\""));
      }
      compare.measure = parsed;
    }
    return HttpReply{200, "application/json",
                     compare_json(run_compare(compare, config.render))};
  });
}

HttpReply handle_convert(std::string_view body, const ServiceConfig& config) {
  return guarded([&] {
    return HttpReply{200, "application/mathml+xml", convert_latex(body, config)};
  });
}

HttpReply handle_health() {
  return {200, "application/json", dump_json(Json{{"status", "ok"}})};
}

}  // namespace mextree
