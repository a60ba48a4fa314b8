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

#include "mextree/exprtree.hpp"

#include <algorithm>
#include <array>

#include "mextree/error.hpp"

namespace mextree {

namespace {

constexpr std::array<std::pair<QualifierRole, std::string_view>, 7> kRoles = {{
    {QualifierRole::kBvar, "bvar"},
    {QualifierRole::kLowlimit, "lowlimit"},
    {QualifierRole::kUplimit, "uplimit"},
    {QualifierRole::kDegree, "degree"},
    {QualifierRole::kDomainOfApplication, "domainofapplication"},
    {QualifierRole::kInterval, "interval"},
    {QualifierRole::kCondition, "condition"},
}};

constexpr std::array<std::pair<NodeKind, std::string_view>, 6> kKinds = {{
    {NodeKind::kFunctionHead, "function_head"},
    {NodeKind::kLeafIdentifier, "leaf_identifier"},
    {NodeKind::kLeafNumber, "leaf_number"},
    {NodeKind::kLeafSymbol, "leaf_symbol"},
    {NodeKind::kQualifier, "qualifier"},
    {NodeKind::kAmbiguousGroup, "ambiguous_group"},
}};

// Content containers rendered with their element name as head.
constexpr auto kContainers = std::to_array<std::string_view>({
    "interval", "lambda", "list", "matrix", "matrixrow", "otherwise", "piece",
    "piecewise", "set", "vector",
});

int qualifier_rank(const ExprNode& node) {
  if (!node.qualifier_role) return 5;
  switch (*node.qualifier_role) {
    case QualifierRole::kBvar: return 0;
    case QualifierRole::kLowlimit: return 1;
    case QualifierRole::kUplimit: return 2;
    case QualifierRole::kDegree: return 4;
    default: return 3;
  }
}

std::string trimmed_text(const XmlElement& e) {
  std::string text = e.text();
  auto is_ws = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  auto first = std::find_if_not(text.begin(), text.end(), is_ws);
  auto last = std::find_if_not(text.rbegin(), text.rend(), is_ws).base();
  return first < last ? std::string(first, last) : std::string();
}

bool is_application(const XmlElement& e) {
  return e.name == "apply" || e.name == "bind";
}

class Builder {
 public:
  Builder(const ParallelExpression& expr, const ShorthandTable& shorthand)
      : expr_(expr), shorthand_(shorthand) {
    if (const XmlElement* p = expr.pmml_root()) index_presentation(*p);
  }

  ExprNode build(const XmlElement& e) {
    if (e.name == "semantics") {
      auto kids = e.elements();
      if (kids.empty() || kids.front()->name == "annotation" ||
          kids.front()->name == "annotation-xml") {
        throw Error(ErrorCode::kContentRootMissing,
                    "content <semantics> without a content child");
      }
      return build(*kids.front());
    }
    if (is_application(e)) return build_application(e);

    ExprNode node;
    node.id = expr_.id_of(e);
    node.element = e.name;
    auto kids = e.elements();
    if (e.name == "ci" || e.name == "cn" || e.name == "csymbol" ||
        e.name == "cs" || kids.empty()) {
      fill_leaf(node, e);
    } else {
      bool container = std::find(kContainers.begin(), kContainers.end(),
                                 e.name) != kContainers.end();
      node.kind = container ? NodeKind::kFunctionHead : NodeKind::kAmbiguousGroup;
      node.display = linked_text(e).value_or(e.name);
      for (const XmlElement* child : kids) node.children.push_back(build(*child));
    }
    apply_ambiguity(node, e, nullptr);
    return node;
  }

 private:
  void index_presentation(const XmlElement& e) {
    pmml_order_.emplace(&e, pmml_order_.size());
    for (const XmlElement* child : e.elements()) index_presentation(*child);
  }

  std::optional<std::string> linked_text(const XmlElement& content) const {
    if (const XmlElement* p = expr_.presentation_for(content)) {
      std::string text = presentation_text(*p);
      if (!text.empty()) return text;
    }
    return std::nullopt;
  }

  bool is_ambiguous(const XmlElement& e) const {
    const std::string& id = expr_.id_of(e);
    return expr_.unresolved().count(id) != 0 || expr_.shares_presentation(id);
  }

  // Every presentation element linked from the subtree, outermost only, in
  // presentation document order.
  std::string enclosed_text(const XmlElement& content) const {
    std::vector<const XmlElement*> targets;
    auto gather = [&](auto&& self, const XmlElement& c) -> void {
      if (const XmlElement* p = expr_.presentation_for(c)) targets.push_back(p);
      for (const XmlElement* child : c.elements()) self(self, *child);
    };
    gather(gather, content);
    std::sort(targets.begin(), targets.end(), [&](auto* a, auto* b) {
      return pmml_order_.at(a) < pmml_order_.at(b);
    });
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    std::string out;
    std::vector<const XmlElement*> taken;
    for (const XmlElement* t : targets) {
      bool nested = std::any_of(taken.begin(), taken.end(), [&](auto* outer) {
        return outer->span.begin <= t->span.begin && t->span.end <= outer->span.end;
      });
      if (nested) continue;
      taken.push_back(t);
      out += presentation_text(*t);
    }
    return out;
  }

  void apply_ambiguity(ExprNode& node, const XmlElement& element,
                       const XmlElement* head) {
    const XmlElement* source = nullptr;
    if (is_ambiguous(element)) {
      source = &element;
    } else if (head != nullptr && is_ambiguous(*head)) {
      source = head;
    }
    if (source == nullptr) return;
    node.ambiguous = true;
    std::string enclosed = enclosed_text(*source);
    if (!enclosed.empty()) node.display = std::move(enclosed);
  }

  void fill_leaf(ExprNode& node, const XmlElement& e) {
    std::string text = trimmed_text(e);
    if (e.name == "ci") {
      node.kind = NodeKind::kLeafIdentifier;
      node.symbol = StrictSymbol{std::string(kIdentifierCd), text};
    } else if (e.name == "cn") {
      node.kind = NodeKind::kLeafNumber;
      node.symbol = StrictSymbol{std::string(kNumberCd), text};
    } else {
      node.kind = NodeKind::kLeafSymbol;
      if (e.name == "csymbol") {
        const std::string* cd = e.attribute("cd");
        node.symbol = StrictSymbol{cd ? *cd : std::string("csymbol"), text};
      }
    }
    fill_label(node, e, text);
  }

  void fill_label(ExprNode& node, const XmlElement& e, const std::string& text) {
    bool textual = e.name == "ci" || e.name == "cn" || e.name == "csymbol" ||
                   e.name == "cs";
    std::string fallback = textual && !text.empty() ? text : e.name;
    node.display = linked_text(e).value_or(fallback);
    if (textual && text == ShorthandTable::kFunctionApplication) {
      node.glyph = shorthand_.lookup(text);
    } else if (node.symbol && node.symbol->cd != kIdentifierCd &&
               node.symbol->cd != kNumberCd) {
      node.glyph = shorthand_.lookup(*node.symbol);
    } else if (!textual) {
      node.glyph = shorthand_.lookup(e.name);
    }
  }

  ExprNode build_application(const XmlElement& e) {
    auto kids = e.elements();
    if (kids.empty()) {
      throw Error(ErrorCode::kEmptyApply,
                  "<" + e.name + "> without children (id " + expr_.id_of(e) + ")");
    }
    const XmlElement& head = *kids.front();
    ExprNode node;
    node.id = expr_.id_of(e);
    node.head_id = expr_.id_of(head);
    node.kind = NodeKind::kFunctionHead;

    if (is_application(head)) {
      auto inner = std::make_shared<ExprNode>(build(head));
      node.element = head.name;
      auto text = linked_text(head);
      node.display = text ? *text : "(" + infix_overview(*inner).text + ")";
      node.compound_head = std::move(inner);
    } else {
      node.element = head.name;
      std::string text = trimmed_text(head);
      if (head.name == "ci") {
        node.symbol = StrictSymbol{std::string(kIdentifierCd), text};
      } else if (head.name == "cn") {
        node.symbol = StrictSymbol{std::string(kNumberCd), text};
      } else if (head.name == "csymbol") {
        const std::string* cd = head.attribute("cd");
        node.symbol = StrictSymbol{cd ? *cd : std::string("csymbol"), text};
      }
      fill_label(node, head, text);
    }

    for (std::size_t i = 1; i < kids.size(); ++i) {
      const XmlElement& arg = *kids[i];
      auto role = parse_qualifier_role(arg.name);
      if (role) {
        ExprNode q;
        q.id = expr_.id_of(arg);
        q.kind = NodeKind::kQualifier;
        q.element = arg.name;
        q.qualifier_role = role;
        q.display = linked_text(arg).value_or(arg.name);
        for (const XmlElement* child : arg.elements()) {
          q.children.push_back(build(*child));
        }
        apply_ambiguity(q, arg, nullptr);
        node.children.push_back(std::move(q));
      } else {
        node.children.push_back(build(arg));
      }
    }
    std::stable_sort(node.children.begin(), node.children.end(),
                     [](const ExprNode& a, const ExprNode& b) {
                       return qualifier_rank(a) < qualifier_rank(b);
                     });
    apply_ambiguity(node, e, &head);
    return node;
  }

  const ParallelExpression& expr_;
  const ShorthandTable& shorthand_;
  std::unordered_map<const XmlElement*, std::size_t> pmml_order_;
};

}  // namespace

std::string_view to_string(NodeKind kind) {
  for (const auto& [k, name] : kKinds) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::string_view to_string(QualifierRole role) {
  for (const auto& [r, name] : kRoles) {
    if (r == role) return name;
  }
  return "unknown";
}

std::optional<NodeKind> parse_node_kind(std::string_view text) {
  for (const auto& [k, name] : kKinds) {
    if (name == text) return k;
  }
  return std::nullopt;
}

std::optional<QualifierRole> parse_qualifier_role(std::string_view text) {
  for (const auto& [r, name] : kRoles) {
    if (name == text) return r;
  }
  return std::nullopt;
}

bool operator==(const ExprNode& a, const ExprNode& b) {
  bool heads_equal = (a.compound_head == nullptr) == (b.compound_head == nullptr) &&
                     (a.compound_head == nullptr || *a.compound_head == *b.compound_head);
  return heads_equal && a.id == b.id && a.head_id == b.head_id &&
         a.kind == b.kind && a.element == b.element && a.display == b.display &&
         a.glyph == b.glyph && a.symbol == b.symbol &&
         a.ambiguous == b.ambiguous && a.qualifier_role == b.qualifier_role &&
         a.children == b.children;
}

ExpressionTree::ExpressionTree(ExprNode root,
                               std::shared_ptr<const ParallelExpression> source)
    : ExpressionTree(std::move(root), std::nullopt, std::move(source)) {}

ExpressionTree::ExpressionTree(ExprNode root, std::optional<InfixOverview> overview,
                               std::shared_ptr<const ParallelExpression> source)
    : root_(std::make_shared<const ExprNode>(std::move(root))),
      source_(std::move(source)),
      overview_(overview ? std::move(*overview) : infix_overview(*root_)) {
  auto index = [&](auto&& self, const ExprNode& node, const ExprNode* parent) -> void {
    preorder_.push_back(&node);
    by_id_.emplace(node.id, &node);
    if (parent != nullptr) parents_.emplace(&node, parent);
    for (const ExprNode& child : node.children) self(self, child, &node);
  };
  index(index, *root_, nullptr);
  // Head aliases never shadow a node id.
  for (const ExprNode* node : preorder_) {
    if (!node->head_id.empty()) by_id_.emplace(node->head_id, node);
  }
}

std::optional<CharSpan> ExpressionTree::span_of(std::string_view id) const {
  for (const auto& [node_id, span] : overview_.spans) {
    if (node_id == id) return span;
  }
  return std::nullopt;
}

const ExprNode* ExpressionTree::find(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  return it == by_id_.end() ? nullptr : it->second;
}

const ExprNode* ExpressionTree::parent(const ExprNode& node) const {
  auto it = parents_.find(&node);
  return it == parents_.end() ? nullptr : it->second;
}

ExpressionTree build_tree(const ParallelExpression& expr,
                          const ShorthandTable& shorthand) {
  Builder builder(expr, shorthand);
  ExprNode root = builder.build(expr.cmml_root());
  return ExpressionTree(std::move(root),
                        std::make_shared<const ParallelExpression>(expr));
}

ExpressionTree parse_tree(std::string_view mathml, const ShorthandTable& shorthand) {
  return build_tree(parse_parallel(mathml), shorthand);
}

}  // namespace mextree
