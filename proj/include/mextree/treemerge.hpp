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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mextree/exprtree.hpp"
#include "mextree/similarity.hpp"

namespace mextree {

enum class Origin { kA, kB, kBoth };

std::string_view to_string(Origin origin);

struct MergedNode {
  Origin origin = Origin::kA;
  std::optional<std::string> source_a;
  std::optional<std::string> source_b;
  std::optional<Grade> grade;
  bool collapsed = false;
  std::size_t hidden_count = 0;

  NodeKind kind = NodeKind::kLeafIdentifier;
  std::string display;
  std::optional<std::string> glyph;
  bool ambiguous = false;
  std::optional<QualifierRole> qualifier_role;
  std::vector<MergedNode> children;

  // Keys of unified nodes that belong under this B-side node but are drawn
  // under their A-side parent; rendered as reference edges.
  std::vector<std::string> refs;

  // "A/<id>", "B/<id>" or "A/<id>|B/<id>"; unique within a merged tree.
  std::string key() const;

  const std::string& label() const { return glyph && !ambiguous ? *glyph : display; }

  friend bool operator==(const MergedNode&, const MergedNode&) = default;
};

struct MergedTree {
  // One root when the roots were unified, otherwise A's root then B's.
  std::vector<MergedNode> roots;
  SimilaritySpec spec;  // the pairs actually applied
  std::vector<Violation> warnings;

  std::size_t rendered_count() const;
  std::size_t hidden_total() const;
};

// Combines two trees. Identical pairs become single origin=Both subtrees
// attached under the A-side parent (the B-side parent keeps a reference);
// nested identical pairs are absorbed by the outermost; identical pairs over
// unequal subtrees degrade to similar. Similar pairs keep both nodes.
// Throws Error(kSpecViolation) when validate_spec reports a hard violation.
MergedTree merge(const ExpressionTree& a, const ExpressionTree& b,
                 const SimilaritySpec& spec);

// Replaces every maximal subtree without graded nodes (or references to
// them) by a placeholder "… (n)" with hidden_count = n.
MergedTree collapse_unmarked(const MergedTree& tree);

}  // namespace mextree
