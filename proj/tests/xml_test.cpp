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

#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "mextree/error.hpp"
#include "mextree/xml.hpp"

namespace mextree {
namespace {

ErrorCode code_of(std::string_view text) {
  try {
    parse_document(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for " << text;
  return ErrorCode::kInvalidOptions;
}

TEST(XmlTest, EmptyMath) {
  XmlElement root = parse_document("<math/>");
  EXPECT_EQ(root.name, "math");
  EXPECT_TRUE(root.children.empty());
}

TEST(XmlTest, ParallelRootHasOneSemanticsChild) {
  XmlElement root = parse_document(testing::read_fixture("fab_parallel.mml"));
  EXPECT_EQ(root.name, "math");
  auto kids = root.elements();
  ASSERT_EQ(kids.size(), 1u);
  EXPECT_EQ(kids[0]->name, "semantics");
}

TEST(XmlTest, UnclosedIsMalformed) {
  EXPECT_EQ(code_of("<math><mi>a</mi>"), ErrorCode::kMalformedXml);
}

TEST(XmlTest, MismatchedCloseTagReportsOffset) {
  try {
    parse_document("<math><mo>)</mi></math>");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformedXml);
    ASSERT_TRUE(e.offset().has_value());
    EXPECT_GE(*e.offset(), 11u);
  }
}

TEST(XmlTest, Entities) {
  XmlElement root = parse_document("<mi>&lt;&gt;&amp;&quot;&apos;&#x3B1;&#946;</mi>");
  EXPECT_EQ(root.text(), "<>&\"'αβ");
  EXPECT_EQ(code_of("<mi>&nbsp;</mi>"), ErrorCode::kUnsupportedEntity);
  EXPECT_EQ(code_of("<mi>&#xD800;</mi>"), ErrorCode::kMalformedXml);
}

TEST(XmlTest, CommentsDroppedCdataKept) {
  XmlElement root = parse_document("<?xml version=\"1.0\"?><m><!-- c --><![CDATA[a<b]]>c</m>");
  EXPECT_EQ(root.text(), "a<bc");
  EXPECT_TRUE(root.elements().empty());
}

TEST(XmlTest, RejectsDoctypeAndDuplicateAttributes) {
  EXPECT_EQ(code_of("<!DOCTYPE math><math/>"), ErrorCode::kMalformedXml);
  EXPECT_EQ(code_of("<math a=\"1\" a=\"2\"/>"), ErrorCode::kMalformedXml);
}

TEST(XmlTest, MathmlPrefixStripped) {
  XmlElement root = parse_document(
      "<m:math xmlns:m=\"http://www.w3.org/1998/Math/MathML\"><m:mi>x</m:mi></m:math>");
  EXPECT_EQ(root.name, "math");
  ASSERT_EQ(root.elements().size(), 1u);
  EXPECT_EQ(root.elements()[0]->name, "mi");
  EXPECT_EQ(code_of("<q:math/>"), ErrorCode::kMalformedXml);
}

TEST(XmlTest, ForeignPrefixKept) {
  XmlElement root = parse_document("<math xmlns:o=\"urn:other\"><o:thing/></math>");
  EXPECT_EQ(root.elements()[0]->name, "o:thing");
}

TEST(XmlTest, AttributeOrderPreserved) {
  XmlElement root = parse_document("<ci z=\"1\" a='2' m=\"&amp;\">x</ci>");
  ASSERT_EQ(root.attributes.size(), 3u);
  EXPECT_EQ(root.attributes[0].first, "z");
  EXPECT_EQ(root.attributes[1].second, "2");
  EXPECT_EQ(*root.attribute("m"), "&");
  EXPECT_EQ(root.attribute("nope"), nullptr);
}

TEST(XmlTest, DeepNestingRejected) {
  std::string text;
  for (int i = 0; i < 600; ++i) text += "<a>";
  for (int i = 0; i < 600; ++i) text += "</a>";
  EXPECT_EQ(code_of(text), ErrorCode::kMalformedXml);
}

TEST(XmlTest, RoundTripParallelFixture) {
  XmlElement root = parse_document(testing::read_fixture("fab_parallel.mml"));
  EXPECT_EQ(parse_document(serialize(root)), root);
}

TEST(XmlTest, RoundTripGenerated) {
  std::mt19937 rng(7);
  testing::GeneratorShape shape;
  shape.dangling_xref_probability = 0.2;
  for (int i = 0; i < 200; ++i) {
    XmlElement root = parse_document(testing::random_pragmatic(rng, shape).mathml);
    std::string once = serialize(root);
    XmlElement again = parse_document(once);
    EXPECT_EQ(again, root);
    EXPECT_EQ(serialize(again), once);
  }
}

TEST(XmlTest, EscapeSpecials) {
  EXPECT_EQ(xml_escape("a<b&\"c\">"), "a&lt;b&amp;&quot;c&quot;&gt;");
}

}  // namespace
}  // namespace mextree
