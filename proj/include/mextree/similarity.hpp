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
#include "mextree/symbols.hpp"

namespace mextree {

enum class Grade { kSimilar, kIdentical };

std::string_view to_string(Grade grade);

struct SimilarityPair {
  std::string id_a;
  std::string id_b;
  Grade grade = Grade::kSimilar;

  friend bool operator==(const SimilarityPair&, const SimilarityPair&) = default;
  friend auto operator<=>(const SimilarityPair&, const SimilarityPair&) = default;
};

// Pairs of content ids in two trees. Serialized as a JSON array of
// {"idA": ..., "idB": ..., "grade": "similar"|"identical"}.
struct SimilaritySpec {
  std::vector<SimilarityPair> pairs;

  friend bool operator==(const SimilaritySpec&, const SimilaritySpec&) = default;
};

std::string spec_to_json(const SimilaritySpec& spec);

// Throws Error(kInvalidSpec) for anything but the documented shape.
SimilaritySpec spec_from_json(std::string_view json);

// Exchanges idA and idB in every pair.
SimilaritySpec swap_sides(const SimilaritySpec& spec);

// Strict symbol of a head or leaf node. Nodes that already carry a symbol
// pass through. Throws Error(kUnmappedPragmaticElement) otherwise when the
// element is not in the table.
StrictSymbol to_strict(const ExprNode& node,
                       const CdMappingTable& table = CdMappingTable::standard());

// Identity for symbols that name a dictionary; pseudo dictionaries included.
StrictSymbol to_strict(const StrictSymbol& symbol,
                       const CdMappingTable& table = CdMappingTable::standard());

// Same-dictionary predicate over every pair of function heads: equal symbols
// are identical, equal dictionaries with different names are similar, and
// anything else yields no pair. Pairs are ordered by A then B preorder.
SimilaritySpec taxonomic_pairs(const ExpressionTree& a, const ExpressionTree& b,
                               const CdMappingTable& table = CdMappingTable::standard());

// Maximal structurally equal subtree pairs: (x, y) is emitted when the
// subtrees are equal and no pair of proper ancestors is equal.
SimilaritySpec identical_pairs(const ExpressionTree& a, const ExpressionTree& b);

// Structural equality over (strict symbol, qualifier role, ordered children).
bool structurally_equal(const ExprNode& a, const ExprNode& b);

std::size_t subtree_size(const ExprNode& node);

enum class Side { kA, kB };

enum class ViolationKind {
  kUnknownId,            // hard
  kConflictingGrade,     // hard
  kStructuralMismatch,   // warning: identical pair is rendered as similar
  kDuplicateUnification, // warning: only the first identical pair is used
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string id;
  std::optional<Side> side;
  std::string message;

  bool hard() const {
    return kind == ViolationKind::kUnknownId ||
           kind == ViolationKind::kConflictingGrade;
  }
};

std::vector<Violation> validate_spec(const SimilaritySpec& spec,
                                     const ExpressionTree& a,
                                     const ExpressionTree& b);

// Largest conflict-free subset of a computed spec, in spec order: identical
// pairs over equal subtrees whose nodes are not yet paired, then similar
// pairs (including degraded identical ones) avoiding identically paired
// nodes. The result validates without hard violations.
SimilaritySpec resolve_conflicts(const SimilaritySpec& spec, const ExpressionTree& a,
                                 const ExpressionTree& b);

}  // namespace mextree
