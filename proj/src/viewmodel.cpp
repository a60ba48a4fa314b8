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

#include "mextree/viewmodel.hpp"

#include "mextree/error.hpp"

namespace mextree {

namespace {

Json optional_string(const std::optional<std::string>& value) {
  return value ? Json(*value) : Json(nullptr);
}

Json node_json(const ExprNode& node) {
  Json out;
  out["id"] = node.id;
  out["kind"] = std::string(to_string(node.kind));
  out["display"] = node.display;
  out["glyph"] = optional_string(node.glyph);
  out["ambiguous"] = node.ambiguous;
  out["qualifierRole"] = node.qualifier_role
                             ? Json(std::string(to_string(*node.qualifier_role)))
                             : Json(nullptr);
  if (node.compound_head) out["head"] = node_json(*node.compound_head);
  Json children = Json::array();
  for (const ExprNode& child : node.children) children.push_back(node_json(child));
  out["children"] = std::move(children);
  return out;
}

Json node_json(const MergedNode& node) {
  Json out;
  out["id"] = node.key();
  out["kind"] = std::string(to_string(node.kind));
  out["display"] = node.display;
  out["glyph"] = optional_string(node.glyph);
  out["ambiguous"] = node.ambiguous;
  out["qualifierRole"] = node.qualifier_role
                             ? Json(std::string(to_string(*node.qualifier_role)))
                             : Json(nullptr);
  out["origin"] = std::string(to_string(node.origin));
  out["grade"] = node.grade ? Json(std::string(to_string(*node.grade))) : Json(nullptr);
  out["collapsed"] = node.collapsed;
  out["hiddenCount"] = node.hidden_count;
  out["sourceA"] = optional_string(node.source_a);
  out["sourceB"] = optional_string(node.source_b);
  out["refs"] = node.refs;
  Json children = Json::array();
  for (const MergedNode& child : node.children) children.push_back(node_json(child));
  out["children"] = std::move(children);
  return out;
}

[[noreturn]] void mismatch(const std::string& what) {
  throw Error(ErrorCode::kInvalidSpec, "view model: " + what);
}

const Json& field(const Json& object, const char* key) {
  if (!object.is_object() || !object.contains(key)) {
    mismatch(std::string("missing field '") + key + "'");
  }
  return object.at(key);
}

std::string string_field(const Json& object, const char* key) {
  const Json& value = field(object, key);
  if (!value.is_string()) mismatch(std::string("field '") + key + "' is not a string");
  return value.get<std::string>();
}

std::optional<std::string> nullable_string(const Json& object, const char* key) {
  const Json& value = field(object, key);
  if (value.is_null()) return std::nullopt;
  if (!value.is_string()) mismatch(std::string("field '") + key + "' is not a string");
  return value.get<std::string>();
}

bool bool_field(const Json& object, const char* key) {
  const Json& value = field(object, key);
  if (!value.is_boolean()) mismatch(std::string("field '") + key + "' is not a boolean");
  return value.get<bool>();
}

template <typename Node>
void read_common(const Json& j, Node& node) {
  auto kind = parse_node_kind(string_field(j, "kind"));
  if (!kind) mismatch("unknown kind");
  node.kind = *kind;
  node.display = string_field(j, "display");
  node.glyph = nullable_string(j, "glyph");
  node.ambiguous = bool_field(j, "ambiguous");
  if (auto role = nullable_string(j, "qualifierRole")) {
    node.qualifier_role = parse_qualifier_role(*role);
    if (!node.qualifier_role) mismatch("unknown qualifierRole");
  }
}

ExprNode read_expr_node(const Json& j) {
  ExprNode node;
  node.id = string_field(j, "id");
  read_common(j, node);
  if (j.contains("head")) {
    node.compound_head = std::make_shared<const ExprNode>(read_expr_node(j.at("head")));
  }
  const Json& children = field(j, "children");
  if (!children.is_array()) mismatch("children is not an array");
  for (const Json& child : children) node.children.push_back(read_expr_node(child));
  return node;
}

MergedNode read_merged_node(const Json& j) {
  MergedNode node;
  read_common(j, node);
  std::string origin = string_field(j, "origin");
  if (origin == "A") {
    node.origin = Origin::kA;
  } else if (origin == "B") {
    node.origin = Origin::kB;
  } else if (origin == "both") {
    node.origin = Origin::kBoth;
  } else {
    mismatch("unknown origin");
  }
  if (auto grade = nullable_string(j, "grade")) {
    if (*grade == "identical") {
      node.grade = Grade::kIdentical;
    } else if (*grade == "similar") {
      node.grade = Grade::kSimilar;
    } else {
      mismatch("unknown grade");
    }
  }
  node.collapsed = bool_field(j, "collapsed");
  const Json& hidden = field(j, "hiddenCount");
  if (!hidden.is_number_unsigned()) mismatch("hiddenCount is not a count");
  node.hidden_count = hidden.get<std::size_t>();
  node.source_a = nullable_string(j, "sourceA");
  node.source_b = nullable_string(j, "sourceB");
  const Json& refs = field(j, "refs");
  if (!refs.is_array()) mismatch("refs is not an array");
  for (const Json& ref : refs) {
    if (!ref.is_string()) mismatch("ref is not a string");
    node.refs.push_back(ref.get<std::string>());
  }
  const Json& children = field(j, "children");
  if (!children.is_array()) mismatch("children is not an array");
  for (const Json& child : children) node.children.push_back(read_merged_node(child));
  if (node.key() != string_field(j, "id")) mismatch("id does not match origin and sources");
  return node;
}

Json parse_or_throw(std::string_view text) {
  Json parsed = Json::parse(text, nullptr, false);
  if (parsed.is_discarded()) mismatch("not valid JSON");
  return parsed;
}

}  // namespace

Json view_model_json(const ExpressionTree& tree) {
  Json out;
  out["infix"] = tree.infix();
  Json spans = Json::object();
  for (const auto& [id, span] : tree.spans()) spans[id] = Json::array({span.begin, span.end});
  out["spans"] = std::move(spans);
  out["root"] = node_json(tree.root());
  return out;
}

Json view_model_json(const MergedTree& tree) {
  Json roots = Json::array();
  for (const MergedNode& root : tree.roots) roots.push_back(node_json(root));
  Json out;
  out["roots"] = std::move(roots);
  return out;
}

std::string dump_json(const Json& json) {
  return json.dump(-1, ' ', false, Json::error_handler_t::replace) + "\n";
}

std::string to_view_model(const ExpressionTree& tree) {
  return dump_json(view_model_json(tree));
}

std::string to_view_model(const MergedTree& tree) {
  return dump_json(view_model_json(tree));
}

ExpressionTree expression_tree_from_view_model(std::string_view json) {
  Json parsed = parse_or_throw(json);
  ExprNode root = read_expr_node(field(parsed, "root"));
  InfixOverview overview;
  overview.text = string_field(parsed, "infix");
  std::size_t length = 0;
  for (unsigned char c : overview.text) length += (c & 0xC0) != 0x80 ? 1 : 0;
  const Json& spans = field(parsed, "spans");
  if (!spans.is_object()) mismatch("spans is not an object");
  for (const auto& [id, range] : spans.items()) {
    if (!range.is_array() || range.size() != 2 || !range[0].is_number_unsigned() ||
        !range[1].is_number_unsigned()) {
      mismatch("span of '" + id + "' is not a [begin, end] pair");
    }
    CharSpan span{range[0].get<std::size_t>(), range[1].get<std::size_t>()};
    if (span.begin > span.end || span.end > length) mismatch("span of '" + id + "' out of range");
    overview.spans.emplace_back(id, span);
  }
  ExpressionTree tree(std::move(root), std::move(overview));
  if (tree.spans().size() != tree.size()) mismatch("spans do not match the nodes");
  for (const ExprNode* node : tree.preorder()) {
    if (!tree.span_of(node->id)) mismatch("no span for '" + node->id + "'");
  }
  return tree;
}

MergedTree merged_tree_from_view_model(std::string_view json) {
  Json parsed = parse_or_throw(json);
  const Json& roots = field(parsed, "roots");
  if (!roots.is_array()) mismatch("roots is not an array");
  MergedTree tree;
  for (const Json& root : roots) tree.roots.push_back(read_merged_node(root));
  return tree;
}

}  // namespace mextree
