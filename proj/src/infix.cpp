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

#include <algorithm>
#include <array>

#include "mextree/exprtree.hpp"

namespace mextree {

namespace {

// Operators written between their operands when they carry a glyph.
constexpr auto kInfixOperators = std::to_array<std::string_view>({
    "approx", "divide", "eq", "geq", "gt", "in", "leq", "lt", "minus", "neq",
    "plus", "power", "times", ShorthandTable::kFunctionApplication,
});

std::string operator_name(const ExprNode& node) {
  if (node.symbol && node.symbol->name == ShorthandTable::kFunctionApplication) {
    return node.symbol->name;
  }
  if (node.symbol && node.symbol->cd != kIdentifierCd &&
      node.symbol->cd != kNumberCd) {
    return CdMappingTable::standard().pragmatic_name(*node.symbol).value_or("");
  }
  return node.element;
}

bool written_infix(const ExprNode& node) {
  if (node.kind != NodeKind::kFunctionHead || !node.glyph ||
      node.compound_head != nullptr || node.children.size() < 2) {
    return false;
  }
  bool qualified = std::any_of(node.children.begin(), node.children.end(),
                               [](const ExprNode& c) { return c.qualifier_role.has_value(); });
  if (qualified) return false;
  std::string name = operator_name(node);
  return std::find(kInfixOperators.begin(), kInfixOperators.end(), name) !=
         kInfixOperators.end();
}

class Linearizer {
 public:
  InfixOverview run(const ExprNode& root) {
    emit(root);
    std::vector<std::pair<std::string, CharSpan>> ordered;
    ordered.reserve(spans_.size());
    collect(root, ordered);
    return {std::move(text_), std::move(ordered)};
  }

 private:
  void append(std::string_view s) {
    text_ += s;
    for (char c : s) {
      if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++length_;
    }
  }

  void emit(const ExprNode& node) {
    std::size_t begin = length_;
    if (node.children.empty() && node.kind != NodeKind::kFunctionHead) {
      append(node.label());
    } else if (written_infix(node)) {
      for (std::size_t i = 0; i < node.children.size(); ++i) {
        if (i > 0) {
          append(" ");
          append(*node.glyph);
          append(" ");
        }
        const ExprNode& child = node.children[i];
        bool wrap = written_infix(child);
        if (wrap) append("(");
        emit(child);
        if (wrap) append(")");
      }
    } else {
      append(node.label());
      append("(");
      for (std::size_t i = 0; i < node.children.size(); ++i) {
        if (i > 0) append(", ");
        emit(node.children[i]);
      }
      append(")");
    }
    spans_.emplace(&node, CharSpan{begin, length_});
  }

  void collect(const ExprNode& node,
               std::vector<std::pair<std::string, CharSpan>>& out) const {
    out.emplace_back(node.id, spans_.at(&node));
    for (const ExprNode& child : node.children) collect(child, out);
  }

  std::string text_;
  std::size_t length_ = 0;
  std::unordered_map<const ExprNode*, CharSpan> spans_;
};

}  // namespace

InfixOverview infix_overview(const ExprNode& root) {
  return Linearizer().run(root);
}

}  // namespace mextree
