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

#include "mextree/parallel.hpp"

#include <array>
#include <algorithm>

#include "mextree/error.hpp"

namespace mextree {

namespace {

// Sorted for binary_search.
constexpr auto kPresentationNames = std::to_array<std::string_view>({
    "maction", "maligngroup", "malignmark", "menclose", "merror", "mfenced",
    "mfrac", "mglyph", "mi", "mlabeledtr", "mlongdiv", "mmultiscripts",
    "mn", "mo", "mover", "mpadded", "mphantom", "mprescripts",
    "mroot", "mrow", "ms", "mscarries", "msgroup", "msline",
    "mspace", "msqrt", "msrow", "mstack", "mstyle", "msub",
    "msubsup", "msup", "mtable", "mtd", "mtext", "mtr",
    "munder", "munderover", "none",
});

constexpr auto kTokenNames =
    std::to_array<std::string_view>({"mi", "mn", "mo", "ms", "mtext"});

bool is_content_encoding(std::string_view encoding) {
  return encoding == "MathML-Content" ||
         encoding == "application/mathml-content+xml";
}

bool is_presentation_encoding(std::string_view encoding) {
  return encoding == "MathML-Presentation" ||
         encoding == "application/mathml-presentation+xml";
}

const XmlElement* first_element(const XmlElement& parent) {
  for (const XmlNode& child : parent.children) {
    if (const XmlElement* e = child.element()) return e;
  }
  return nullptr;
}

std::string_view trim(std::string_view s) {
  auto is_ws = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (!s.empty() && is_ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_ws(s.back())) s.remove_suffix(1);
  return s;
}

// U+2061..U+2064: function application, invisible times, separator, plus.
std::string strip_invisible(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i + 2 < s.size() && s[i] == '\xE2' && s[i + 1] == '\x81' &&
        s[i + 2] >= '\xA1' && s[i + 2] <= '\xA4') {
      i += 2;
      continue;
    }
    out += s[i];
  }
  return out;
}

void presentation_text_into(const XmlElement& element, std::string& out) {
  if (std::find(kTokenNames.begin(), kTokenNames.end(), element.name) !=
      kTokenNames.end()) {
    out += strip_invisible(trim(element.text()));
    return;
  }
  for (const XmlElement* child : element.elements()) {
    presentation_text_into(*child, out);
  }
}

void collect(const XmlElement& root, std::set<const XmlElement*>& into) {
  into.insert(&root);
  for (const XmlElement* child : root.elements()) collect(*child, into);
}

void collect_authored_ids(const XmlElement& e, std::set<std::string>& ids) {
  if (const std::string* id = e.attribute("id")) ids.insert(*id);
  for (const XmlElement* child : e.elements()) collect_authored_ids(*child, ids);
}

}  // namespace

bool is_presentation_element(std::string_view name) {
  return std::binary_search(kPresentationNames.begin(), kPresentationNames.end(),
                            name);
}

std::string presentation_text(const XmlElement& element) {
  std::string out;
  presentation_text_into(element, out);
  return out;
}

const std::string& ParallelExpression::id_of(const XmlElement& element) const {
  return ids_.at(&element);
}

const XmlElement* ParallelExpression::find(std::string_view id) const {
  auto it = id_table_.find(id);
  return it == id_table_.end() ? nullptr : it->second;
}

bool ParallelExpression::shares_presentation(std::string_view cmml_id) const {
  return shared_.find(cmml_id) != shared_.end();
}

bool ParallelExpression::is_content(const XmlElement& element) const {
  return content_.count(&element) != 0;
}

bool ParallelExpression::is_presentation(const XmlElement& element) const {
  return presentation_.count(&element) != 0;
}

const XmlElement* ParallelExpression::presentation_for(
    const XmlElement& content) const {
  auto it = xref_c2p_.find(id_of(content));
  if (it == xref_c2p_.end()) return nullptr;
  return find(it->second);
}

ParallelExpression extract_parallel(XmlElement root) {
  if (root.name != "math") {
    throw Error(ErrorCode::kNoContentMarkup,
                "expected <math> root, found <" + root.name + ">");
  }

  ParallelExpression expr;
  expr.document_ = std::make_shared<const XmlElement>(std::move(root));
  const XmlElement& math = *expr.document_;

  const XmlElement* body = first_element(math);
  if (body == nullptr) {
    throw Error(ErrorCode::kNoContentMarkup, "<math> element is empty");
  }

  if (body->name == "semantics") {
    const XmlElement* primary = nullptr;
    std::vector<const XmlElement*> content_annotations;
    std::vector<const XmlElement*> presentation_annotations;
    for (const XmlElement* child : body->elements()) {
      if (child->name == "annotation-xml") {
        const std::string* enc = child->attribute("encoding");
        if (enc && is_content_encoding(*enc)) content_annotations.push_back(child);
        if (enc && is_presentation_encoding(*enc)) {
          presentation_annotations.push_back(child);
        }
      } else if (child->name != "annotation" && primary == nullptr) {
        primary = child;
      }
    }
    if (primary != nullptr && !is_presentation_element(primary->name)) {
      expr.cmml_root_ = primary;
      if (!presentation_annotations.empty()) {
        expr.pmml_root_ = first_element(*presentation_annotations.front());
      }
      for (std::size_t i = 1; i < presentation_annotations.size(); ++i) {
        expr.warnings_.push_back(
            "NestedSemantics: ignoring additional presentation annotation");
      }
    } else {
      expr.pmml_root_ = primary;
      for (const XmlElement* annotation : content_annotations) {
        const XmlElement* content = first_element(*annotation);
        if (content == nullptr) continue;
        if (expr.cmml_root_ == nullptr) {
          expr.cmml_root_ = content;
        } else {
          expr.warnings_.push_back(
              "NestedSemantics: ignoring additional content annotation");
        }
      }
    }
  } else if (!is_presentation_element(body->name)) {
    expr.cmml_root_ = body;
    if (math.elements().size() > 1) {
      expr.warnings_.push_back(
          "content-only <math> has several children; using the first");
    }
  }

  if (expr.cmml_root_ == nullptr) {
    throw Error(ErrorCode::kNoContentMarkup,
                "no content markup found under <math>");
  }

  // Ids in document preorder; synthesized ids avoid every authored id.
  std::set<std::string> authored;
  collect_authored_ids(math, authored);
  std::size_t index = 0;
  auto assign = [&](auto&& self, const XmlElement& e) -> void {
    std::string id;
    const std::string* own = e.attribute("id");
    if (own != nullptr && expr.id_table_.find(*own) == expr.id_table_.end()) {
      id = *own;
    } else {
      if (own != nullptr) {
        expr.warnings_.push_back("duplicate id '" + *own + "' replaced");
      }
      id = "gen:" + std::to_string(index);
      for (int k = 1; authored.count(id) || expr.id_table_.count(id); ++k) {
        id = "gen:" + std::to_string(index) + "." + std::to_string(k);
      }
    }
    ++index;
    expr.id_table_.emplace(id, &e);
    expr.ids_.emplace(&e, std::move(id));
    for (const XmlElement* child : e.elements()) self(self, *child);
  };
  assign(assign, math);

  collect(*expr.cmml_root_, expr.content_);
  if (expr.pmml_root_ != nullptr) collect(*expr.pmml_root_, expr.presentation_);

  auto walk = [](auto&& self, const XmlElement& e, auto&& visit) -> void {
    visit(e);
    for (const XmlElement* child : e.elements()) self(self, *child, visit);
  };

  if (expr.pmml_root_ != nullptr) {
    walk(walk, *expr.pmml_root_, [&](const XmlElement& p) {
      const std::string* xref = p.attribute("xref");
      if (xref == nullptr) return;
      const XmlElement* target = expr.find(*xref);
      if (target != nullptr && expr.is_content(*target)) {
        expr.xref_p2c_.emplace(expr.id_of(p), *xref);
      }
    });
  }

  std::map<std::string, int, std::less<>> target_uses;
  walk(walk, *expr.cmml_root_, [&](const XmlElement& c) {
    const std::string* xref = c.attribute("xref");
    if (xref == nullptr) return;
    const std::string& cid = expr.id_of(c);
    const XmlElement* target = expr.find(*xref);
    if (target == nullptr || !expr.is_presentation(*target)) {
      expr.unresolved_.insert(cid);
      return;
    }
    // A back-link that names another content element breaks the pairing.
    auto back = expr.xref_p2c_.find(*xref);
    if (back != expr.xref_p2c_.end() && back->second != cid) {
      expr.unresolved_.insert(cid);
      expr.warnings_.push_back("inconsistent xref pair for '" + cid + "'");
      return;
    }
    expr.xref_c2p_.emplace(cid, *xref);
    ++target_uses[*xref];
  });

  for (const auto& [cid, pid] : expr.xref_c2p_) {
    if (target_uses[pid] >= 2) expr.shared_.insert(cid);
  }
  return expr;
}

ParallelExpression parse_parallel(std::string_view input) {
  return extract_parallel(parse_document(input));
}

}  // namespace mextree
