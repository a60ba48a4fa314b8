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

#include "mextree/pipeline.hpp"

namespace mextree {

namespace {

ShorthandTable shorthand_for(const RenderOptions& options) {
  return ShorthandTable::with_power_glyph(options.caret_style);
}

}  // namespace

std::optional<Measure> parse_measure(std::string_view text) {
  if (text == "identical") return Measure::kIdentical;
  if (text == "taxonomic") return Measure::kTaxonomic;
  return std::nullopt;
}

ExpressionTree tree_for(std::string_view mathml, const RenderOptions& options) {
  options.validate();
  return parse_tree(mathml, shorthand_for(options));
}

std::string tree_json(const ExpressionTree& tree) { return to_view_model(tree); }

std::string tree_svg(const ExpressionTree& tree, const RenderOptions& options) {
  return to_svg(layout(tree, options), options).text;
}

CompareResult run_compare(const CompareRequest& request, const RenderOptions& options) {
  if (request.spec.has_value() == request.measure.has_value()) {
    throw Error(ErrorCode::kInvalidSpec, "exactly one of spec and measure is required");
  }
  ExpressionTree a = tree_for(request.mathml_a, options);
  ExpressionTree b = tree_for(request.mathml_b, options);

  SimilaritySpec spec;
  if (request.spec) {
    spec = *request.spec;
  } else if (*request.measure == Measure::kIdentical) {
    spec = resolve_conflicts(identical_pairs(a, b), a, b);
  } else {
    spec = resolve_conflicts(taxonomic_pairs(a, b), a, b);
  }

  std::vector<Violation> violations = validate_spec(spec, a, b);
  for (const Violation& v : violations) {
    if (v.hard()) {
      throw SpecViolationError(std::move(violations));
    }
  }

  MergedTree merged = merge(a, b, spec);
  if (request.collapse) merged = collapse_unmarked(merged);
  return CompareResult{std::move(a), std::move(b), std::move(spec), std::move(merged)};
}

std::string merged_json(const MergedTree& merged) { return to_view_model(merged); }

std::string merged_svg(const MergedTree& merged, const RenderOptions& options) {
  return to_svg(layout(merged, options), options).text;
}

std::string compare_json(const CompareResult& result) {
  Json out;
  out["treeA"] = view_model_json(result.tree_a);
  out["treeB"] = view_model_json(result.tree_b);
  out["merged"] = view_model_json(result.merged);
  out["spec"] = Json::parse(spec_to_json(result.spec));
  out["warnings"] = violations_json(result.merged.warnings);
  return dump_json(out);
}

Json error_json(std::string_view name, std::string_view message,
                std::optional<std::size_t> offset) {
  Json out;
  out["error"] = std::string(name);
  out["message"] = std::string(message);
  if (offset) out["offset"] = *offset;
  return out;
}

Json error_json(const Error& error) {
  Json out = error_json(error_name(error.code()), error.what(), error.offset());
  if (const auto* spec_error = dynamic_cast<const SpecViolationError*>(&error)) {
    out["violations"] = violations_json(spec_error->violations());
  }
  return out;
}

Json violations_json(const std::vector<Violation>& violations) {
  Json out = Json::array();
  for (const Violation& v : violations) {
    Json item;
    item["kind"] = std::string(to_string(v.kind));
    item["id"] = v.id;
    item["side"] = v.side ? Json(*v.side == Side::kA ? "A" : "B") : Json(nullptr);
    item["hard"] = v.hard();
    item["message"] = v.message;
    out.push_back(std::move(item));
  }
  return out;
}

SpecViolationError::SpecViolationError(std::vector<Violation> violations)
    : Error(ErrorCode::kSpecViolation, summarize(violations)),
      violations_(std::move(violations)) {}

std::string SpecViolationError::summarize(const std::vector<Violation>& violations) {
  std::string out = "similarity spec rejected";
  for (const Violation& v : violations) {
    if (v.hard()) out += "; " + v.message;
  }
  return out;
}

}  // namespace mextree
