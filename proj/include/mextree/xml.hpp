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

// Minimal non-validating XML reader for MathML documents.
//
// Supported: elements, attributes, character data, comments (dropped), CDATA
// sections (folded into text), the XML declaration and processing
// instructions (skipped), the five predefined entities and numeric
// character references. DOCTYPE declarations are rejected.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace mextree {

inline constexpr std::string_view kMathMLNamespace =
    "http://www.w3.org/1998/Math/MathML";

struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct XmlNode;

struct XmlElement {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<XmlNode> children;
  SourceSpan span;

  const std::string* attribute(std::string_view key) const;

  // Child elements in document order, skipping text.
  std::vector<const XmlElement*> elements() const;

  // Concatenated character data of this subtree.
  std::string text() const;
};

struct XmlNode {
  std::variant<XmlElement, std::string> value;

  const XmlElement* element() const { return std::get_if<XmlElement>(&value); }
  const std::string* text() const { return std::get_if<std::string>(&value); }
};

// Structural equality: names, attributes (in order), and children.
bool operator==(const XmlElement& a, const XmlElement& b);
bool operator==(const XmlNode& a, const XmlNode& b);

// Parses a document and returns its root element. Throws Error with
// kMalformedXml or kUnsupportedEntity.
XmlElement parse_document(std::string_view input);

// Canonical serialization; parse_document(serialize(e)) == e.
std::string serialize(const XmlElement& element);

// Escapes text for use in character data or double-quoted attributes.
std::string xml_escape(std::string_view text);

}  // namespace mextree
