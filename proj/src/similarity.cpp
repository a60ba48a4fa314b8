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

#include "mextree/similarity.hpp"

#include <map>
#include <set>
#include <unordered_map>

#include "json.hpp"
#include "mextree/error.hpp"

namespace mextree {

namespace {

using Json = nlohmann::ordered_json;

std::string node_label(const ExprNode& node) {
  if (node.qualifier_role) return "Q:" + std::string(to_string(*node.qualifier_role));
  if (node.symbol) return "S:" + node.symbol->cd + '\x1f' + node.symbol->name;
  if (auto mapped = CdMappingTable::standard().find(node.element)) {
    return "S:" + mapped->cd + '\x1f' + mapped->name;
  }
  return "E:" + node.element;
}

void append_key(const ExprNode& node, std::string& out);

std::string structural_key(const ExprNode& node) {
  std::string out;
  append_key(node, out);
  return out;
}

// Length-prefixed so distinct trees never produce the same key.
void append_key(const ExprNode& node, std::string& out) {
  std::string label = node_label(node);
  if (node.compound_head) label += "H" + structural_key(*node.compound_head);
  out += std::to_string(label.size());
  out += ':';
  out += label;
  out += '[';
  for (const ExprNode& child : node.children) append_key(child, out);
  out += ']';
}

std::unordered_map<const ExprNode*, std::string> keys_of(const ExpressionTree& tree) {
  std::unordered_map<const ExprNode*, std::string> keys;
  for (const ExprNode* node : tree.preorder()) keys.emplace(node, structural_key(*node));
  return keys;
}

std::vector<const ExprNode*> proper_ancestors(const ExpressionTree& tree,
                                              const ExprNode& node) {
  std::vector<const ExprNode*> out;
  for (const ExprNode* p = tree.parent(node); p != nullptr; p = tree.parent(*p)) {
    out.push_back(p);
  }
  return out;
}

bool is_real_cd(const StrictSymbol& symbol) { return !symbol.cd.empty(); }

}  // namespace

std::string_view to_string(Grade grade) {
  return grade == Grade::kIdentical ? "identical" : "similar";
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kUnknownId: return "UnknownId";
    case ViolationKind::kConflictingGrade: return "ConflictingGrade";
    case ViolationKind::kStructuralMismatch: return "StructuralMismatch";
    case ViolationKind::kDuplicateUnification: return "DuplicateUnification";
  }
  return "Unknown";
}

std::string spec_to_json(const SimilaritySpec& spec) {
  Json array = Json::array();
  for (const SimilarityPair& pair : spec.pairs) {
    array.push_back(Json{{"idA", pair.id_a},
                         {"idB", pair.id_b},
                         {"grade", std::string(to_string(pair.grade))}});
  }
  return array.dump(-1, ' ', false, Json::error_handler_t::replace);
}

SimilaritySpec spec_from_json(std::string_view json) {
  Json parsed = Json::parse(json, nullptr, false);
  if (parsed.is_discarded()) {
    throw Error(ErrorCode::kInvalidSpec, "similarity spec is not valid JSON");
  }
  if (!parsed.is_array()) {
    throw Error(ErrorCode::kInvalidSpec, "similarity spec must be a JSON array");
  }
  SimilaritySpec spec;
  std::size_t index = 0;
  for (const Json& item : parsed) {
    auto where = " (pair " + std::to_string(index++) + ")";
    if (!item.is_object()) {
      throw Error(ErrorCode::kInvalidSpec, "pair is not an object" + where);
    }
    for (const char* key : {"idA", "idB", "grade"}) {
      if (!item.contains(key) || !item.at(key).is_string()) {
        throw Error(ErrorCode::kInvalidSpec,
                    std::string("missing string field '") + key + "'" + where);
      }
    }
    SimilarityPair pair;
    pair.id_a = item.at("idA").get<std::string>();
    pair.id_b = item.at("idB").get<std::string>();
    auto grade = item.at("grade").get<std::string>();
    if (grade == "identical") {
      pair.grade = Grade::kIdentical;
    } else if (grade == "similar") {
      pair.grade = Grade::kSimilar;
    } else {
      throw Error(ErrorCode::kInvalidSpec, "unknown grade '" + grade + "'" + where);
    }
    spec.pairs.push_back(std::move(pair));
  }
  return spec;
}

SimilaritySpec swap_sides(const SimilaritySpec& spec) {
  SimilaritySpec out;
  for (const SimilarityPair& pair : spec.pairs) {
    out.pairs.push_back({pair.id_b, pair.id_a, pair.grade});
  }
  return out;
}

StrictSymbol to_strict(const StrictSymbol& symbol, const CdMappingTable&) {
  return symbol;
}

StrictSymbol to_strict(const ExprNode& node, const CdMappingTable& table) {
  if (node.symbol && is_real_cd(*node.symbol)) return to_strict(*node.symbol, table);
  if (auto mapped = table.find(node.element)) return *mapped;
  throw Error(ErrorCode::kUnmappedPragmaticElement,
              "no content dictionary mapping for <" + node.element + "> (node " +
                  node.id + ")");
}

SimilaritySpec taxonomic_pairs(const ExpressionTree& a, const ExpressionTree& b,
                               const CdMappingTable& table) {
  auto heads = [&](const ExpressionTree& tree) {
    std::vector<std::pair<const ExprNode*, StrictSymbol>> out;
    for (const ExprNode* node : tree.preorder()) {
      if (node->kind != NodeKind::kFunctionHead || node->compound_head) continue;
      out.emplace_back(node, to_strict(*node, table));
    }
    return out;
  };
  auto heads_a = heads(a);
  auto heads_b = heads(b);

  SimilaritySpec spec;
  for (const auto& [node_a, symbol_a] : heads_a) {
    for (const auto& [node_b, symbol_b] : heads_b) {
      if (symbol_a.cd != symbol_b.cd) continue;
      Grade grade = symbol_a.name == symbol_b.name ? Grade::kIdentical : Grade::kSimilar;
      spec.pairs.push_back({node_a->id, node_b->id, grade});
    }
  }
  return spec;
}

bool structurally_equal(const ExprNode& a, const ExprNode& b) {
  return structural_key(a) == structural_key(b);
}

std::size_t subtree_size(const ExprNode& node) {
  std::size_t n = 1;
  for (const ExprNode& child : node.children) n += subtree_size(child);
  return n;
}

SimilaritySpec identical_pairs(const ExpressionTree& a, const ExpressionTree& b) {
  auto keys_a = keys_of(a);
  auto keys_b = keys_of(b);

  std::multimap<std::string_view, const ExprNode*> by_key_b;
  for (const ExprNode* node : b.preorder()) by_key_b.emplace(keys_b.at(node), node);

  SimilaritySpec spec;
  for (const ExprNode* node_a : a.preorder()) {
    auto [first, last] = by_key_b.equal_range(keys_a.at(node_a));
    if (first == last) continue;
    auto ancestors_a = proper_ancestors(a, *node_a);
    std::vector<const ExprNode*> matches;
    for (auto it = first; it != last; ++it) matches.push_back(it->second);
    // Keep B preorder for deterministic output.
    std::vector<const ExprNode*> ordered;
    for (const ExprNode* node_b : b.preorder()) {
      if (std::find(matches.begin(), matches.end(), node_b) != matches.end()) {
        ordered.push_back(node_b);
      }
    }
    for (const ExprNode* node_b : ordered) {
      bool absorbed = false;
      for (const ExprNode* up_b : proper_ancestors(b, *node_b)) {
        for (const ExprNode* up_a : ancestors_a) {
          if (keys_a.at(up_a) == keys_b.at(up_b)) {
            absorbed = true;
            break;
          }
        }
        if (absorbed) break;
      }
      if (!absorbed) spec.pairs.push_back({node_a->id, node_b->id, Grade::kIdentical});
    }
  }
  return spec;
}

std::vector<Violation> validate_spec(const SimilaritySpec& spec,
                                     const ExpressionTree& a,
                                     const ExpressionTree& b) {
  std::vector<Violation> violations;
  std::map<std::pair<Side, const ExprNode*>, std::set<Grade>> grades;
  std::vector<std::pair<Side, const ExprNode*>> first_seen;
  auto note_grade = [&](Side side, const ExprNode* node, Grade grade) {
    auto [it, inserted] = grades.try_emplace({side, node});
    if (inserted) first_seen.emplace_back(side, node);
    it->second.insert(grade);
  };
  std::set<std::pair<Side, const ExprNode*>> unified;
  std::set<std::pair<Side, const ExprNode*>> reported;

  for (const SimilarityPair& pair : spec.pairs) {
    const ExprNode* node_a = a.find(pair.id_a);
    const ExprNode* node_b = b.find(pair.id_b);
    if (node_a == nullptr) {
      violations.push_back({ViolationKind::kUnknownId, pair.id_a, Side::kA,
                            "id '" + pair.id_a + "' not found in tree A"});
    }
    if (node_b == nullptr) {
      violations.push_back({ViolationKind::kUnknownId, pair.id_b, Side::kB,
                            "id '" + pair.id_b + "' not found in tree B"});
    }
    if (node_a != nullptr) note_grade(Side::kA, node_a, pair.grade);
    if (node_b != nullptr) note_grade(Side::kB, node_b, pair.grade);
    if (node_a == nullptr || node_b == nullptr || pair.grade != Grade::kIdentical) {
      continue;
    }
    if (!structurally_equal(*node_a, *node_b)) {
      violations.push_back({ViolationKind::kStructuralMismatch, pair.id_a, std::nullopt,
                            "identical pair (" + pair.id_a + ", " + pair.id_b +
                                ") has unequal subtrees; treated as similar"});
      continue;
    }
    for (auto key : {std::pair{Side::kA, node_a}, std::pair{Side::kB, node_b}}) {
      if (!unified.insert(key).second && reported.insert(key).second) {
        const std::string& id = key.first == Side::kA ? pair.id_a : pair.id_b;
        violations.push_back({ViolationKind::kDuplicateUnification, id, key.first,
                              "node '" + id + "' appears in several identical pairs; "
                              "only the first is unified"});
      }
    }
  }

  for (const auto& key : first_seen) {
    if (grades.at(key).size() > 1) {
      violations.push_back({ViolationKind::kConflictingGrade, key.second->id, key.first,
                            "node '" + key.second->id +
                                "' is graded both similar and identical"});
    }
  }
  return violations;
}

SimilaritySpec resolve_conflicts(const SimilaritySpec& spec, const ExpressionTree& a,
                                 const ExpressionTree& b) {
  SimilaritySpec out;
  std::set<const ExprNode*> unified_a;
  std::set<const ExprNode*> unified_b;
  std::vector<SimilarityPair> similar;
  for (const SimilarityPair& pair : spec.pairs) {
    const ExprNode* na = a.find(pair.id_a);
    const ExprNode* nb = b.find(pair.id_b);
    if (na == nullptr || nb == nullptr) continue;
    if (pair.grade == Grade::kIdentical && structurally_equal(*na, *nb)) {
      if (unified_a.count(na) || unified_b.count(nb)) continue;
      unified_a.insert(na);
      unified_b.insert(nb);
      out.pairs.push_back(pair);
    } else {
      similar.push_back({pair.id_a, pair.id_b, Grade::kSimilar});
    }
  }
  for (const SimilarityPair& pair : similar) {
    if (unified_a.count(a.find(pair.id_a)) || unified_b.count(b.find(pair.id_b))) continue;
    out.pairs.push_back(pair);
  }
  return out;
}

}  // namespace mextree
