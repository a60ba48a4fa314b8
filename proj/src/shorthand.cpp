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

#include <utility>

#include "mextree/exprtree.hpp"

namespace mextree {

namespace {

ShorthandTable make_standard() {
  ShorthandTable table;
  table.set("power", "^")
      .set("plus", "+")
      .set("minus", "−")
      .set("times", "⋅")
      .set("divide", "/")
      .set("eq", "=")
      .set("neq", "≠")
      .set("lt", "<")
      .set("gt", ">")
      .set("leq", "≤")
      .set("geq", "≥")
      .set("approx", "≈")
      .set("in", "∈")
      .set("root", "√")
      .set("sum", "Σ")
      .set("product", "∏")
      .set("int", "∫")
      .set("partialdiff", "∂")
      .set("factorial", "!")
      .set("infinity", "∞")
      .set(std::string(ShorthandTable::kFunctionApplication), "@");
  return table;
}

}  // namespace

const ShorthandTable& ShorthandTable::standard() {
  static const ShorthandTable table = make_standard();
  return table;
}

ShorthandTable ShorthandTable::with_power_glyph(std::string glyph) {
  ShorthandTable table = standard();
  table.set("power", std::move(glyph));
  return table;
}

ShorthandTable& ShorthandTable::set(std::string key, std::string glyph) {
  entries_.insert_or_assign(std::move(key), std::move(glyph));
  return *this;
}

std::optional<std::string> ShorthandTable::lookup(std::string_view element) const {
  auto it = entries_.find(element);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> ShorthandTable::lookup(const StrictSymbol& symbol) const {
  auto name = CdMappingTable::standard().pragmatic_name(symbol);
  if (!name) return std::nullopt;
  return lookup(*name);
}

}  // namespace mextree
