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

// Parse and compare pipelines shared by the CLI and the HTTP service, so
// both produce the same bytes for the same input and options.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mextree/error.hpp"
#include "mextree/exprtree.hpp"
#include "mextree/render.hpp"
#include "mextree/similarity.hpp"
#include "mextree/treemerge.hpp"
#include "mextree/viewmodel.hpp"

namespace mextree {

enum class Measure { kIdentical, kTaxonomic };

std::optional<Measure> parse_measure(std::string_view text);

// Tree built with the power glyph chosen by options.caret_style.
ExpressionTree tree_for(std::string_view mathml, const RenderOptions& options);

std::string tree_json(const ExpressionTree& tree);
std::string tree_svg(const ExpressionTree& tree, const RenderOptions& options);

// Hard spec violations, carried along for error payloads.
class SpecViolationError : public Error {
 public:
  explicit SpecViolationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  static std::string summarize(const std::vector<Violation>& violations);
  std::vector<Violation> violations_;
};

struct CompareRequest {
  std::string mathml_a;
  std::string mathml_b;
  // Exactly one of spec and measure.
  std::optional<SimilaritySpec> spec;
  std::optional<Measure> measure;
  bool collapse = true;
};

struct CompareResult {
  ExpressionTree tree_a;
  ExpressionTree tree_b;
  SimilaritySpec spec;
  MergedTree merged;
};

// Throws Error(kInvalidSpec) unless exactly one of spec/measure is set, and
// Error(kSpecViolation) for hard spec violations.
CompareResult run_compare(const CompareRequest& request, const RenderOptions& options);

std::string merged_json(const MergedTree& merged);
std::string merged_svg(const MergedTree& merged, const RenderOptions& options);

// {"treeA", "treeB", "merged", "spec", "warnings"}
std::string compare_json(const CompareResult& result);

// {"error": name, "message": ..., "offset"?: n}
Json error_json(std::string_view name, std::string_view message,
                std::optional<std::size_t> offset = std::nullopt);
Json error_json(const Error& error);

// Violations as [{"kind", "id", "side", "message"}]
Json violations_json(const std::vector<Violation>& violations);

}  // namespace mextree
