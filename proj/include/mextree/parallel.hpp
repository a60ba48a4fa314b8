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
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mextree/xml.hpp"

namespace mextree {

// Presentation and content roots of a MathML document together with a
// document-wide id table and the xref links between the two vocabularies.
//
// Elements without an authored id receive "gen:<preorder-index>", where the
// index counts elements of the whole document starting with the root at 0.
// Immutable after construction; copies share the underlying document.
class ParallelExpression {
 public:
  // Absent for content-only input.
  const XmlElement* pmml_root() const { return pmml_root_; }
  const XmlElement& cmml_root() const { return *cmml_root_; }
  const XmlElement& document() const { return *document_; }

  const std::string& id_of(const XmlElement& element) const;
  const XmlElement* find(std::string_view id) const;

  const std::map<std::string, const XmlElement*, std::less<>>& id_table() const {
    return id_table_;
  }
  const std::map<std::string, std::string, std::less<>>& xref_c2p() const {
    return xref_c2p_;
  }
  const std::map<std::string, std::string, std::less<>>& xref_p2c() const {
    return xref_p2c_;
  }
  const std::set<std::string, std::less<>>& unresolved() const {
    return unresolved_;
  }

  // True when the presentation target of this content id is also the target
  // of another content element.
  bool shares_presentation(std::string_view cmml_id) const;

  bool is_content(const XmlElement& element) const;
  bool is_presentation(const XmlElement& element) const;

  // Presentation element linked from the given content element, if resolved.
  const XmlElement* presentation_for(const XmlElement& content) const;

  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  friend ParallelExpression extract_parallel(XmlElement root);

  std::shared_ptr<const XmlElement> document_;
  const XmlElement* pmml_root_ = nullptr;
  const XmlElement* cmml_root_ = nullptr;
  std::unordered_map<const XmlElement*, std::string> ids_;
  std::map<std::string, const XmlElement*, std::less<>> id_table_;
  std::set<const XmlElement*> content_;
  std::set<const XmlElement*> presentation_;
  std::map<std::string, std::string, std::less<>> xref_c2p_;
  std::map<std::string, std::string, std::less<>> xref_p2c_;
  std::set<std::string, std::less<>> unresolved_;
  std::set<std::string, std::less<>> shared_;
  std::vector<std::string> warnings_;
};

// Locates the content markup (and presentation markup, when present) under a
// <math> root. Accepts presentation-primary <semantics> with a content
// annotation, content-primary <semantics> with a presentation annotation, and
// content-only documents. Throws Error(kNoContentMarkup) when no content
// markup exists.
ParallelExpression extract_parallel(XmlElement root);

// parse_document followed by extract_parallel.
ParallelExpression parse_parallel(std::string_view input);

bool is_presentation_element(std::string_view name);

// Plain-text rendering of a presentation subtree: token text concatenated
// with surrounding whitespace and invisible operators removed.
std::string presentation_text(const XmlElement& element);

}  // namespace mextree
