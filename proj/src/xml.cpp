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

#include "mextree/xml.hpp"

#include <cstdint>
#include <map>

#include "mextree/error.hpp"

namespace mextree {

namespace {

constexpr int kMaxDepth = 512;

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

bool is_name_start(char c) {
  auto u = static_cast<unsigned char>(c);
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
         c == ':' || u >= 0x80;
}

bool is_name_char(char c) {
  return is_name_start(c) || (c >= '0' && c <= '9') || c == '-' || c == '.';
}

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

using NamespaceScope = std::map<std::string, std::string, std::less<>>;

class Reader {
 public:
  explicit Reader(std::string_view input) : in_(input) {}

  XmlElement parse() {
    if (in_.substr(0, 3) == "\xEF\xBB\xBF") pos_ = 3;
    skip_misc();
    if (at_end() || peek() != '<') fail("expected root element");
    std::vector<NamespaceScope> scopes;
    XmlElement root = parse_element(scopes, 0);
    skip_misc();
    if (!at_end()) fail("content after root element");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kMalformedXml,
                "malformed XML at byte " + std::to_string(pos_) + ": " + what,
                pos_);
  }

  bool at_end() const { return pos_ >= in_.size(); }
  char peek() const { return in_[pos_]; }
  bool starts_with(std::string_view s) const {
    return in_.substr(pos_, s.size()) == s;
  }

  void expect(std::string_view s) {
    if (!starts_with(s)) fail("expected '" + std::string(s) + "'");
    pos_ += s.size();
  }

  void skip_space() {
    while (!at_end() && is_space(peek())) ++pos_;
  }

  // Whitespace, comments, processing instructions and the XML declaration.
  void skip_misc() {
    for (;;) {
      skip_space();
      if (starts_with("<!--")) {
        skip_comment();
      } else if (starts_with("<?")) {
        skip_pi();
      } else if (starts_with("<!DOCTYPE")) {
        fail("DOCTYPE declarations are not supported");
      } else {
        return;
      }
    }
  }

  void skip_comment() {
    std::size_t end = in_.find("-->", pos_ + 4);
    if (end == std::string_view::npos) fail("unterminated comment");
    pos_ = end + 3;
  }

  void skip_pi() {
    std::size_t end = in_.find("?>", pos_ + 2);
    if (end == std::string_view::npos) fail("unterminated processing instruction");
    pos_ = end + 2;
  }

  std::string parse_name() {
    if (at_end() || !is_name_start(peek())) fail("expected name");
    std::size_t start = pos_;
    while (!at_end() && is_name_char(peek())) ++pos_;
    return std::string(in_.substr(start, pos_ - start));
  }

  void decode_reference(std::string& out) {
    std::size_t start = pos_;
    std::size_t semi = in_.find(';', pos_);
    if (semi == std::string_view::npos || semi - pos_ > 12) {
      fail("unterminated entity reference");
    }
    std::string_view ref = in_.substr(pos_ + 1, semi - pos_ - 1);
    pos_ = semi + 1;
    if (ref == "lt") { out += '<'; return; }
    if (ref == "gt") { out += '>'; return; }
    if (ref == "amp") { out += '&'; return; }
    if (ref == "quot") { out += '"'; return; }
    if (ref == "apos") { out += '\''; return; }
    if (!ref.empty() && ref[0] == '#') {
      std::uint32_t cp = 0;
      bool hex = ref.size() > 1 && (ref[1] == 'x' || ref[1] == 'X');
      std::string_view digits = ref.substr(hex ? 2 : 1);
      if (digits.empty()) fail("empty character reference");
      for (char c : digits) {
        int v = -1;
        if (c >= '0' && c <= '9') v = c - '0';
        else if (hex && c >= 'a' && c <= 'f') v = c - 'a' + 10;
        else if (hex && c >= 'A' && c <= 'F') v = c - 'A' + 10;
        if (v < 0) fail("bad character reference");
        cp = cp * (hex ? 16 : 10) + static_cast<std::uint32_t>(v);
        if (cp > 0x10FFFF) fail("character reference out of range");
      }
      if (cp == 0 || (cp >= 0xD800 && cp <= 0xDFFF)) {
        fail("invalid character reference");
      }
      append_utf8(out, cp);
      return;
    }
    throw Error(ErrorCode::kUnsupportedEntity,
                "unsupported entity '&" + std::string(ref) + ";' at byte " +
                    std::to_string(start),
                start);
  }

  std::string parse_attribute_value() {
    if (at_end() || (peek() != '"' && peek() != '\'')) {
      fail("expected quoted attribute value");
    }
    char quote = peek();
    ++pos_;
    std::string value;
    for (;;) {
      if (at_end()) fail("unterminated attribute value");
      char c = peek();
      if (c == quote) {
        ++pos_;
        return value;
      }
      if (c == '<') fail("'<' in attribute value");
      if (c == '&') {
        decode_reference(value);
      } else {
        value += c;
        ++pos_;
      }
    }
  }

  std::string resolve_name(const std::string& qname,
                           const std::vector<NamespaceScope>& scopes) const {
    auto colon = qname.find(':');
    if (colon == std::string::npos) return qname;
    std::string_view prefix = std::string_view(qname).substr(0, colon);
    for (auto it = scopes.rbegin(); it != scopes.rend(); ++it) {
      auto found = it->find(prefix);
      if (found != it->end()) {
        if (found->second == kMathMLNamespace) return qname.substr(colon + 1);
        return qname;
      }
    }
    if (prefix == "xml") return qname;
    fail("unbound namespace prefix '" + std::string(prefix) + "'");
  }

  XmlElement parse_element(std::vector<NamespaceScope>& scopes, int depth) {
    if (depth > kMaxDepth) fail("element nesting too deep");
    XmlElement element;
    element.span.begin = pos_;
    expect("<");
    std::string qname = parse_name();

    NamespaceScope scope;
    for (;;) {
      std::size_t before = pos_;
      skip_space();
      if (at_end()) fail("unterminated start tag");
      if (peek() == '>' || starts_with("/>")) break;
      if (pos_ == before) fail("expected whitespace before attribute");
      std::string key = parse_name();
      skip_space();
      expect("=");
      skip_space();
      std::string value = parse_attribute_value();
      for (const auto& [existing, unused] : element.attributes) {
        if (existing == key) fail("duplicate attribute '" + key + "'");
      }
      if (key == "xmlns") scope[""] = value;
      if (key.rfind("xmlns:", 0) == 0) scope[key.substr(6)] = value;
      element.attributes.emplace_back(std::move(key), std::move(value));
    }

    scopes.push_back(std::move(scope));
    element.name = resolve_name(qname, scopes);

    if (starts_with("/>")) {
      pos_ += 2;
      scopes.pop_back();
      element.span.end = pos_;
      return element;
    }
    expect(">");

    std::string text;
    auto flush_text = [&] {
      if (!text.empty()) {
        element.children.push_back(XmlNode{std::move(text)});
        text.clear();
      }
    };

    for (;;) {
      if (at_end()) fail("unclosed element <" + qname + ">");
      char c = peek();
      if (c == '<') {
        if (starts_with("</")) {
          flush_text();
          pos_ += 2;
          std::string close = parse_name();
          if (close != qname) {
            fail("mismatched close tag </" + close + "> for <" + qname + ">");
          }
          skip_space();
          expect(">");
          break;
        }
        if (starts_with("<!--")) {
          skip_comment();
        } else if (starts_with("<![CDATA[")) {
          std::size_t end = in_.find("]]>", pos_ + 9);
          if (end == std::string_view::npos) fail("unterminated CDATA section");
          text.append(in_.substr(pos_ + 9, end - pos_ - 9));
          pos_ = end + 3;
        } else if (starts_with("<?")) {
          skip_pi();
        } else if (starts_with("<!")) {
          fail("unsupported markup declaration");
        } else {
          flush_text();
          element.children.push_back(XmlNode{parse_element(scopes, depth + 1)});
        }
      } else if (c == '&') {
        decode_reference(text);
      } else {
        text += c;
        ++pos_;
      }
    }

    scopes.pop_back();
    element.span.end = pos_;
    return element;
  }

  std::string_view in_;
  std::size_t pos_ = 0;
};

void serialize_into(const XmlElement& element, std::string& out) {
  out += '<';
  out += element.name;
  for (const auto& [key, value] : element.attributes) {
    out += ' ';
    out += key;
    out += "=\"";
    out += xml_escape(value);
    out += '"';
  }
  if (element.children.empty()) {
    out += "/>";
    return;
  }
  out += '>';
  for (const XmlNode& child : element.children) {
    if (const XmlElement* e = child.element()) {
      serialize_into(*e, out);
    } else {
      out += xml_escape(*child.text());
    }
  }
  out += "</";
  out += element.name;
  out += '>';
}

void text_into(const XmlElement& element, std::string& out) {
  for (const XmlNode& child : element.children) {
    if (const XmlElement* e = child.element()) {
      text_into(*e, out);
    } else {
      out += *child.text();
    }
  }
}

}  // namespace

const std::string* XmlElement::attribute(std::string_view key) const {
  for (const auto& [k, v] : attributes) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::vector<const XmlElement*> XmlElement::elements() const {
  std::vector<const XmlElement*> out;
  for (const XmlNode& child : children) {
    if (const XmlElement* e = child.element()) out.push_back(e);
  }
  return out;
}

std::string XmlElement::text() const {
  std::string out;
  text_into(*this, out);
  return out;
}

bool operator==(const XmlElement& a, const XmlElement& b) {
  return a.name == b.name && a.attributes == b.attributes &&
         a.children == b.children;
}

bool operator==(const XmlNode& a, const XmlNode& b) {
  return a.value == b.value;
}

XmlElement parse_document(std::string_view input) {
  return Reader(input).parse();
}

std::string serialize(const XmlElement& element) {
  std::string out;
  serialize_into(element, out);
  return out;
}

std::string xml_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace mextree
