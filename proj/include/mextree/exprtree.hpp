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
#include <unordered_map>
#include <utility>
#include <vector>

#include "mextree/parallel.hpp"
#include "mextree/symbols.hpp"

namespace mextree {

enum class NodeKind {
  kFunctionHead,
  kLeafIdentifier,
  kLeafNumber,
  kLeafSymbol,
  kQualifier,
  kAmbiguousGroup,
};

enum class QualifierRole {
  kBvar,
  kLowlimit,
  kUplimit,
  kDegree,
  kDomainOfApplication,
  kInterval,
  kCondition,
};

std::string_view to_string(NodeKind kind);
std::string_view to_string(QualifierRole role);
std::optional<NodeKind> parse_node_kind(std::string_view text);
std::optional<QualifierRole> parse_qualifier_role(std::string_view text);

// Shorthand glyphs for content elements, keyed by pragmatic element name.
// Strict symbols are looked up through the inverse of the standard
// content-dictionary mapping.
class ShorthandTable {
 public:
  // U+2061 FUNCTION APPLICATION; the key for the invisible application symbol.
  static constexpr std::string_view kFunctionApplication = "⁡";

  static const ShorthandTable& standard();

  // Standard table with the power glyph replaced ("^" or "∧").
  static ShorthandTable with_power_glyph(std::string glyph);

  ShorthandTable& set(std::string key, std::string glyph);

  std::optional<std::string> lookup(std::string_view element) const;
  std::optional<std::string> lookup(const StrictSymbol& symbol) const;

  const std::map<std::string, std::string, std::less<>>& entries() const {
    return entries_;
  }

 private:
  std::map<std::string, std::string, std::less<>> entries_;
};

inline std::optional<std::string> shorthand_lookup(const ShorthandTable& table,
                                                   std::string_view element) {
  return table.lookup(element);
}
inline std::optional<std::string> shorthand_lookup(const ShorthandTable& table,
                                                   const StrictSymbol& symbol) {
  return table.lookup(symbol);
}

// One node of the apply-free tree. An <apply> is fused with its first child:
// the node carries the application's id, the head's id as an alias, and the
// head's label; the remaining children of the <apply> become its children.
struct ExprNode {
  std::string id;
  std::string head_id;  // empty unless fused from an <apply>/<bind>
  NodeKind kind = NodeKind::kLeafIdentifier;
  std::string element;  // content element name of the head ("plus", "ci", ...)
  std::string display;
  std::optional<std::string> glyph;
  std::optional<StrictSymbol> symbol;
  bool ambiguous = false;
  std::optional<QualifierRole> qualifier_role;
  // Set when the head is itself an application; its display is the complete
  // presentation of that application.
  std::shared_ptr<const ExprNode> compound_head;
  std::vector<ExprNode> children;

  // Label shown in drawings: the glyph, except for ambiguous nodes, which
  // show everything their content element encloses.
  const std::string& label() const { return glyph && !ambiguous ? *glyph : display; }
};

bool operator==(const ExprNode& a, const ExprNode& b);

// Half-open range of Unicode code points in the infix overview.
struct CharSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const CharSpan&, const CharSpan&) = default;
};

struct InfixOverview {
  std::string text;
  // Preorder node order.
  std::vector<std::pair<std::string, CharSpan>> spans;
};

// Deterministic linearization: heads followed by parenthesized
// comma-separated arguments; binary operators with a glyph are written infix
// with spaces, parenthesizing nested infix operands.
InfixOverview infix_overview(const ExprNode& root);

class ExpressionTree {
 public:
  // Tree over an already built root, e.g. reconstructed from a view model.
  explicit ExpressionTree(ExprNode root,
                          std::shared_ptr<const ParallelExpression> source = {});
  // Keeps a previously computed overview instead of linearizing again.
  ExpressionTree(ExprNode root, std::optional<InfixOverview> overview,
                 std::shared_ptr<const ParallelExpression> source = {});

  const ExprNode& root() const { return *root_; }
  const std::string& infix() const { return overview_.text; }
  const std::vector<std::pair<std::string, CharSpan>>& spans() const {
    return overview_.spans;
  }
  std::optional<CharSpan> span_of(std::string_view id) const;

  // Resolves node ids and head-id aliases.
  const ExprNode* find(std::string_view id) const;
  const ExprNode* parent(const ExprNode& node) const;
  std::size_t size() const { return preorder_.size(); }
  const std::vector<const ExprNode*>& preorder() const { return preorder_; }

  // Null for trees not built from markup.
  const ParallelExpression* source() const { return source_.get(); }

 private:
  std::shared_ptr<const ExprNode> root_;
  std::shared_ptr<const ParallelExpression> source_;
  InfixOverview overview_;
  std::vector<const ExprNode*> preorder_;
  std::unordered_map<std::string, const ExprNode*> by_id_;
  std::unordered_map<const ExprNode*, const ExprNode*> parents_;
};

// Apply-free construction. Throws Error(kEmptyApply) for an application
// without children.
ExpressionTree build_tree(const ParallelExpression& expr,
                          const ShorthandTable& shorthand = ShorthandTable::standard());

// parse_parallel followed by build_tree.
ExpressionTree parse_tree(std::string_view mathml,
                          const ShorthandTable& shorthand = ShorthandTable::standard());

}  // namespace mextree
