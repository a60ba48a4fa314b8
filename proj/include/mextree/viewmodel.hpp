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

// JSON view model shared by the CLI, the HTTP service and the web widgets.
// The schema is documented in schema/tree.schema.json. Keys are emitted in a
// fixed order and documents end with a newline.

#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "mextree/exprtree.hpp"
#include "mextree/treemerge.hpp"

namespace mextree {

using Json = nlohmann::ordered_json;

// {"infix": ..., "spans": {id: [begin, end], ...}, "root": node}
Json view_model_json(const ExpressionTree& tree);

// {"roots": [node, ...]}
Json view_model_json(const MergedTree& tree);

std::string dump_json(const Json& json);

std::string to_view_model(const ExpressionTree& tree);
std::string to_view_model(const MergedTree& tree);

// Inverse of to_view_model for the fields the view model carries (id, kind,
// display, glyph, ambiguous, qualifierRole, head, children). Throws
// Error(kInvalidSpec) on schema mismatch.
ExpressionTree expression_tree_from_view_model(std::string_view json);
MergedTree merged_tree_from_view_model(std::string_view json);

}  // namespace mextree
