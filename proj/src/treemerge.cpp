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

#include "mextree/treemerge.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mextree/error.hpp"

namespace mextree {

namespace {

struct PairPlan {
  const ExprNode* a;
  const ExprNode* b;
  std::size_t size;
  std::size_t order;
};

bool inside(const ExpressionTree& tree, const ExprNode& node,
            const std::set<const ExprNode*>& roots) {
  for (const ExprNode* p = &node; p != nullptr; p = tree.parent(*p)) {
    if (roots.count(p)) return true;
  }
  return false;
}

MergedNode from_source(const ExprNode& node, Origin origin) {
  MergedNode out;
  out.origin = origin;
  if (origin == Origin::kB) {
    out.source_b = node.id;
  } else {
    out.source_a = node.id;
  }
  out.kind = node.kind;
  out.display = node.display;
  out.glyph = node.glyph;
  out.ambiguous = node.ambiguous;
  out.qualifier_role = node.qualifier_role;
  return out;
}

class Merger {
 public:
  Merger(const ExpressionTree& a, const ExpressionTree& b) : a_(a), b_(b) {}

  MergedTree run(const SimilaritySpec& spec) {
    MergedTree result;
    for (Violation& v : validate_spec(spec, a_, b_)) {
      if (v.hard()) {
        throw Error(ErrorCode::kSpecViolation, std::string(to_string(v.kind)) + ": " + v.message);
      }
      result.warnings.push_back(std::move(v));
    }

    std::vector<PairPlan> identical;
    for (const SimilarityPair& pair : spec.pairs) {
      const ExprNode* na = a_.find(pair.id_a);
      const ExprNode* nb = b_.find(pair.id_b);
      if (pair.grade == Grade::kIdentical && structurally_equal(*na, *nb)) {
        identical.push_back({na, nb, subtree_size(*na), identical.size()});
      } else {
        similar_a_.insert(na);
        similar_b_.insert(nb);
        result.spec.pairs.push_back({na->id, nb->id, Grade::kSimilar});
      }
    }

    // Outermost pairs first; nested and repeated pairs are absorbed.
    std::stable_sort(identical.begin(), identical.end(),
                     [](const PairPlan& x, const PairPlan& y) { return x.size > y.size; });
    std::set<const ExprNode*> taken_a;
    std::set<const ExprNode*> taken_b;
    for (const PairPlan& plan : identical) {
      if (inside(a_, *plan.a, taken_a) || inside(b_, *plan.b, taken_b)) continue;
      taken_a.insert(plan.a);
      taken_b.insert(plan.b);
      unified_a_.emplace(plan.a, plan.b);
      unified_b_.emplace(plan.b, plan.a);
      result.spec.pairs.push_back({plan.a->id, plan.b->id, Grade::kIdentical});
    }

    result.roots.push_back(convert_a(a_.root()));
    if (auto root_b = convert_b(b_.root(), nullptr)) {
      result.roots.push_back(std::move(*root_b));
    }
    return result;
  }

 private:
  MergedNode convert_a(const ExprNode& node) {
    if (auto it = unified_a_.find(&node); it != unified_a_.end()) {
      return unify(node, *it->second);
    }
    MergedNode out = from_source(node, Origin::kA);
    if (similar_a_.count(&node)) out.grade = Grade::kSimilar;
    for (const ExprNode& child : node.children) out.children.push_back(convert_a(child));
    return out;
  }

  std::optional<MergedNode> convert_b(const ExprNode& node, MergedNode* parent) {
    if (auto it = unified_b_.find(&node); it != unified_b_.end()) {
      if (parent != nullptr) {
        parent->refs.push_back("A/" + it->second->id + "|B/" + node.id);
      }
      return std::nullopt;
    }
    MergedNode out = from_source(node, Origin::kB);
    if (similar_b_.count(&node)) out.grade = Grade::kSimilar;
    for (const ExprNode& child : node.children) {
      if (auto converted = convert_b(child, &out)) {
        out.children.push_back(std::move(*converted));
      }
    }
    return out;
  }

  MergedNode unify(const ExprNode& na, const ExprNode& nb) {
    MergedNode out = from_source(na, Origin::kBoth);
    out.source_b = nb.id;
    out.grade = Grade::kIdentical;
    out.ambiguous = na.ambiguous || nb.ambiguous;
    for (std::size_t i = 0; i < na.children.size(); ++i) {
      out.children.push_back(unify(na.children[i], nb.children[i]));
    }
    return out;
  }

  const ExpressionTree& a_;
  const ExpressionTree& b_;
  std::set<const ExprNode*> similar_a_;
  std::set<const ExprNode*> similar_b_;
  std::map<const ExprNode*, const ExprNode*> unified_a_;
  std::map<const ExprNode*, const ExprNode*> unified_b_;
};

bool marked(const MergedNode& node) {
  if (node.grade || !node.refs.empty()) return true;
  return std::any_of(node.children.begin(), node.children.end(), marked);
}

std::size_t represented(const MergedNode& node) {
  if (node.collapsed) return node.hidden_count;
  std::size_t n = 1;
  for (const MergedNode& child : node.children) n += represented(child);
  return n;
}

MergedNode collapse(const MergedNode& node) {
  if (!marked(node)) {
    MergedNode placeholder;
    placeholder.origin = node.origin;
    placeholder.source_a = node.source_a;
    placeholder.source_b = node.source_b;
    placeholder.kind = node.kind;
    placeholder.qualifier_role = node.qualifier_role;
    placeholder.collapsed = true;
    placeholder.hidden_count = represented(node);
    placeholder.display = "… (" + std::to_string(placeholder.hidden_count) + ")";
    return placeholder;
  }
  MergedNode out = node;
  out.children.clear();
  for (const MergedNode& child : node.children) out.children.push_back(collapse(child));
  return out;
}

void count(const MergedNode& node, std::size_t& rendered, std::size_t& hidden) {
  if (node.collapsed) {
    hidden += node.hidden_count;
  } else {
    ++rendered;
  }
  for (const MergedNode& child : node.children) count(child, rendered, hidden);
}

}  // namespace

std::string_view to_string(Origin origin) {
  switch (origin) {
    case Origin::kA: return "A";
    case Origin::kB: return "B";
    case Origin::kBoth: return "both";
  }
  return "unknown";
}

std::string MergedNode::key() const {
  if (origin == Origin::kBoth) return "A/" + *source_a + "|B/" + *source_b;
  if (origin == Origin::kA) return "A/" + source_a.value_or("");
  return "B/" + source_b.value_or("");
}

std::size_t MergedTree::rendered_count() const {
  std::size_t rendered = 0;
  std::size_t hidden = 0;
  for (const MergedNode& root : roots) count(root, rendered, hidden);
  return rendered;
}

std::size_t MergedTree::hidden_total() const {
  std::size_t rendered = 0;
  std::size_t hidden = 0;
  for (const MergedNode& root : roots) count(root, rendered, hidden);
  return hidden;
}

MergedTree merge(const ExpressionTree& a, const ExpressionTree& b,
                 const SimilaritySpec& spec) {
  return Merger(a, b).run(spec);
}

MergedTree collapse_unmarked(const MergedTree& tree) {
  MergedTree out;
  out.spec = tree.spec;
  out.warnings = tree.warnings;
  for (const MergedNode& root : tree.roots) out.roots.push_back(collapse(root));
  return out;
}

}  // namespace mextree
