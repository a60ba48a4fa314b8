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

#include "mextree/symbols.hpp"

#include <utility>

namespace mextree {

namespace {

CdMappingTable make_standard() {
  CdMappingTable table;
  for (const char* name : {"plus", "minus", "times", "divide", "power", "root",
                           "sum", "product", "abs", "gcd", "lcm"}) {
    table.add(name, {"arith1", name});
  }
  for (const char* name : {"sin", "cos", "tan", "sec", "csc", "cot", "sinh",
                           "cosh", "tanh", "arcsin", "arccos", "arctan", "log",
                           "ln", "exp"}) {
    table.add(name, {"transc1", name});
  }
  for (const char* name : {"eq", "neq", "lt", "gt", "leq", "geq", "approx"}) {
    table.add(name, {"relation1", name});
  }
  table.add("int", {"calculus1", "int"});
  table.add("diff", {"calculus1", "diff"});
  for (const char* name : {"and", "or", "xor", "not", "implies", "equivalent",
                           "true", "false"}) {
    table.add(name, {"logic1", name});
  }
  for (const char* name : {"in", "notin", "union", "intersect", "subset",
                           "prsubset", "setdiff"}) {
    table.add(name, {"set1", name});
  }
  table.add("factorial", {"integer1", "factorial"});
  table.add("floor", {"rounding1", "floor"});
  table.add("ceiling", {"rounding1", "ceiling"});
  table.add("pi", {"nums1", "pi"});
  table.add("exponentiale", {"nums1", "e"});
  table.add("imaginaryi", {"nums1", "i"});
  table.add("infinity", {"nums1", "infinity"});
  return table;
}

}  // namespace

const CdMappingTable& CdMappingTable::standard() {
  static const CdMappingTable table = make_standard();
  return table;
}

CdMappingTable& CdMappingTable::add(std::string element, StrictSymbol symbol) {
  entries_.insert_or_assign(std::move(element), std::move(symbol));
  return *this;
}

std::optional<StrictSymbol> CdMappingTable::find(std::string_view element) const {
  auto it = entries_.find(element);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> CdMappingTable::pragmatic_name(
    const StrictSymbol& symbol) const {
  for (const auto& [element, mapped] : entries_) {
    if (mapped == symbol) return element;
  }
  return std::nullopt;
}

}  // namespace mextree
