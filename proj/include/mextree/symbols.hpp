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

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace mextree {

// A content-dictionary qualified symbol. Leaf identifiers and numbers use the
// pseudo dictionaries "ci" and "cn" with the leaf text as name.
struct StrictSymbol {
  std::string cd;
  std::string name;

  friend bool operator==(const StrictSymbol&, const StrictSymbol&) = default;
  friend auto operator<=>(const StrictSymbol&, const StrictSymbol&) = default;
};

inline constexpr std::string_view kIdentifierCd = "ci";
inline constexpr std::string_view kNumberCd = "cn";

// Pragmatic content element name -> strict symbol.
class CdMappingTable {
 public:
  // The shipped subset: arithmetic, transcendental, relational, calculus,
  // logic, set and constant elements with their standard dictionaries.
  static const CdMappingTable& standard();

  CdMappingTable& add(std::string element, StrictSymbol symbol);

  std::optional<StrictSymbol> find(std::string_view element) const;

  // Inverse lookup; the first element (in name order) mapping to symbol.
  std::optional<std::string> pragmatic_name(const StrictSymbol& symbol) const;

  const std::map<std::string, StrictSymbol, std::less<>>& entries() const {
    return entries_;
  }

 private:
  std::map<std::string, StrictSymbol, std::less<>> entries_;
};

}  // namespace mextree
