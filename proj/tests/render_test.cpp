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

#include <fstream>
#include <functional>
#include <random>
#include <regex>

#include "generators.hpp"
#include "mextree/error.hpp"
#include "mextree/render.hpp"
#include "mextree/viewmodel.hpp"

namespace mextree {
namespace {

ExpressionTree fixture(const std::string& name) { return parse_tree(testing::read_fixture(name)); }

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) {
    ++n;
  }
  return n;
}

MergedTree fg_merge() {
  return merge(fixture("f_apb.mml"), fixture("g_apb.mml"),
               {{{"pA", "pB", Grade::kIdentical}, {"fA", "gB", Grade::kSimilar}}});
}

void expect_same_view(const ExprNode& x, const ExprNode& y) {
  EXPECT_EQ(x.id, y.id);
  EXPECT_EQ(x.kind, y.kind);
  EXPECT_EQ(x.display, y.display);
  EXPECT_EQ(x.glyph, y.glyph);
  EXPECT_EQ(x.ambiguous, y.ambiguous);
  EXPECT_EQ(x.qualifier_role, y.qualifier_role);
  ASSERT_EQ(x.children.size(), y.children.size());
  for (std::size_t i = 0; i < x.children.size(); ++i) expect_same_view(x.children[i], y.children[i]);
}

TEST(LayoutTest, ParallelFixtureGeometry) {
  Layout l = layout(fixture("fab_parallel.mml"));
  ASSERT_EQ(l.nodes.size(), 4u);
  ASSERT_EQ(l.edges.size(), 3u);
  const LayoutNode& f = l.nodes[0];
  const LayoutNode& plus = l.nodes[1];
  const LayoutNode& a = l.nodes[2];
  const LayoutNode& b = l.nodes[3];
  EXPECT_EQ(f.depth, 0);
  EXPECT_EQ(plus.depth, 1);
  EXPECT_EQ(a.depth, 2);
  EXPECT_EQ(b.depth, 2);
  EXPECT_DOUBLE_EQ(f.x, plus.x);
  EXPECT_DOUBLE_EQ(plus.x, (a.x + b.x) / 2.0);
  EXPECT_DOUBLE_EQ(b.left() - a.right(), 16.0);
  EXPECT_DOUBLE_EQ(a.y, 128.0);
  EXPECT_DOUBLE_EQ(a.left(), 0.0);
  EXPECT_EQ(f.classes, (std::vector<std::string>{"node", "ambiguous"}));
}

TEST(LayoutTest, SingleNodeAtOrigin) {
  Layout l = layout(fixture("leaf_x.mml"));
  ASSERT_EQ(l.nodes.size(), 1u);
  EXPECT_DOUBLE_EQ(l.nodes[0].left(), 0.0);
  EXPECT_DOUBLE_EQ(l.nodes[0].y, 0.0);
  EXPECT_DOUBLE_EQ(l.width, kMinNodeWidth + 1.0);
  EXPECT_DOUBLE_EQ(l.height, kNodeHeight);
}

TEST(LayoutTest, LabelWidth) {
  EXPECT_DOUBLE_EQ(label_width(""), kMinNodeWidth);
  EXPECT_DOUBLE_EQ(label_width("x"), 33.0);
  EXPECT_DOUBLE_EQ(label_width("αβγ"), 51.0);
}

TEST(LayoutTest, MaxDepthCutsAndMarks) {
  RenderOptions opts;
  opts.max_depth = 1;
  Layout l = layout(fixture("fab_parallel.mml"), opts);
  ASSERT_EQ(l.nodes.size(), 2u);
  EXPECT_EQ(l.nodes[1].classes, (std::vector<std::string>{"node", "collapsed"}));
  opts.max_depth = 0;
  EXPECT_EQ(layout(fixture("fab_parallel.mml"), opts).nodes.size(), 1u);
}

TEST(LayoutTest, CaretStyle) {
  RenderOptions opts;
  opts.caret_style = "∧";
  ExpressionTree tree = parse_tree("<math><apply><power/><ci>x</ci><cn>2</cn></apply></math>");
  EXPECT_EQ(layout(tree, opts).nodes[0].label, "∧");
  EXPECT_EQ(layout(tree).nodes[0].label, "^");
}

TEST(LayoutTest, InvalidOptions) {
  for (auto mutate : std::vector<std::function<void(RenderOptions&)>>{
           [](RenderOptions& o) { o.level_gap = 0; },
           [](RenderOptions& o) { o.node_gap = -1; },
           [](RenderOptions& o) { o.max_depth = -1; },
           [](RenderOptions& o) { o.caret_style = "v"; },
           [](RenderOptions& o) { o.level_gap = 10; }}) {
    RenderOptions o;
    mutate(o);
    EXPECT_THROW(o.validate(), Error);
  }
  RenderOptions ok;
  EXPECT_NO_THROW(ok.validate());
}

TEST(LayoutTest, MergedRootsSideBySide) {
  Layout l = layout(fg_merge());
  ASSERT_EQ(l.nodes.size(), 5u);
  std::size_t refs = 0;
  for (const LayoutEdge& e : l.edges) refs += e.reference ? 1 : 0;
  EXPECT_EQ(refs, 1u);
  EXPECT_EQ(l.edges.size(), 4u);
  EXPECT_TRUE(testing::layout_violations(l, {}).empty());
}

TEST(LayoutPropertyTest, TidyOnGeneratedTrees) {
  std::mt19937 rng(401);
  testing::GeneratorShape shape;
  shape.max_depth = 6;
  int cases = 0;
  while (cases < 200) {
    ExpressionTree tree = parse_tree(testing::random_pragmatic(rng, shape).mathml);
    if (tree.size() > 50) continue;
    ++cases;
    RenderOptions opts;
    opts.node_gap = 4.0 + cases % 20;
    auto problems = testing::layout_violations(layout(tree, opts), opts);
    EXPECT_TRUE(problems.empty()) << tree.infix() << ": " << problems.front();
  }
}

TEST(LayoutPropertyTest, TidyOnMergedTrees) {
  std::mt19937 rng(402);
  testing::GeneratorShape shape;
  shape.max_depth = 3;
  shape.operators = {"plus", "times"};
  shape.identifiers = {"a", "b"};
  for (int i = 0; i < 100; ++i) {
    ExpressionTree a = parse_tree(testing::random_pragmatic(rng, shape).mathml);
    ExpressionTree b = parse_tree(testing::random_pragmatic(rng, shape).mathml);
    std::size_t unified = 0;
    MergedTree merged = merge(a, b, testing::random_disjoint_spec(rng, a, b, unified));
    for (const MergedTree& t : {merged, collapse_unmarked(merged)}) {
      auto problems = testing::layout_violations(layout(t), {});
      EXPECT_TRUE(problems.empty()) << problems.front();
    }
  }
}

TEST(SvgTest, ParallelFixtureNodesEdgesAndDashedRoot) {
  ExpressionTree tree = fixture("fab_parallel.mml");
  SvgDocument svg = to_svg(layout(tree));
  EXPECT_EQ(occurrences(svg.text, " data-id="), 4u);
  EXPECT_EQ(occurrences(svg.text, "<line class=\"edge\""), 3u);
  EXPECT_NE(svg.text.find("<g class=\"node ambiguous\" data-id=\"" + tree.root().id + "\">"),
            std::string::npos);
  EXPECT_EQ(svg.view_box, "-8.00 -8.00 98.00 172.00");
  EXPECT_TRUE(testing::is_well_formed_svg(svg.text));
}

TEST(SvgTest, CoordinatesHaveTwoDecimals) {
  SvgDocument svg = to_svg(layout(fixture("euler_gamma.mml")));
  std::regex number("=\"-?[0-9]+\\.[0-9]{2}\"");
  std::regex attr(" (x|y|x1|y1|x2|y2|width|height|rx|ry)=\"[^\"]*\"");
  for (auto it = std::sregex_iterator(svg.text.begin(), svg.text.end(), attr);
       it != std::sregex_iterator(); ++it) {
    std::string m = it->str();
    EXPECT_TRUE(std::regex_search(m, number)) << m;
  }
}

TEST(SvgTest, Deterministic) {
  ExpressionTree tree = fixture("euler_gamma.mml");
  EXPECT_EQ(to_svg(layout(tree)).text, to_svg(layout(parse_tree(testing::read_fixture("euler_gamma.mml")))).text);
}

TEST(SvgTest, EscapesLabels) {
  ExpressionTree tree = parse_tree("<math><apply><lt/><ci>a</ci><ci>&amp;</ci></apply></math>");
  std::string text = to_svg(layout(tree)).text;
  EXPECT_NE(text.find(">&lt;</text>"), std::string::npos);
  EXPECT_NE(text.find(">&amp;</text>"), std::string::npos);
  EXPECT_TRUE(testing::is_well_formed_svg(text));
}

TEST(SvgTest, MergedClasses) {
  std::string text = to_svg(layout(fg_merge())).text;
  EXPECT_EQ(occurrences(text, "<g class=\"node origin-a similar\""), 1u);
  EXPECT_EQ(occurrences(text, "<g class=\"node origin-b similar\""), 1u);
  EXPECT_EQ(occurrences(text, "<g class=\"node unified\""), 3u);
  EXPECT_EQ(occurrences(text, "<line class=\"edge ref\""), 1u);
  EXPECT_TRUE(testing::is_well_formed_svg(text));
}

TEST(ViewModelTest, SingleLeaf) {
  ExpressionTree tree = fixture("leaf_x.mml");
  EXPECT_EQ(to_view_model(tree),
            "{\"infix\":\"x\",\"spans\":{\"gen:1\":[0,1]},\"root\":{\"id\":\"gen:1\","
            "\"kind\":\"leaf_identifier\",\"display\":\"x\",\"glyph\":null,\"ambiguous\":false,"
            "\"qualifierRole\":null,\"children\":[]}}\n");
}

TEST(ViewModelTest, RoundTripExpressionTrees) {
  std::mt19937 rng(403);
  std::vector<ExpressionTree> trees{fixture("fab_parallel.mml"), fixture("euler_gamma.mml")};
  for (int i = 0; i < 100; ++i) trees.push_back(parse_tree(testing::random_pragmatic(rng).mathml));
  for (const ExpressionTree& tree : trees) {
    std::string text = to_view_model(tree);
    ExpressionTree back = expression_tree_from_view_model(text);
    expect_same_view(back.root(), tree.root());
    EXPECT_EQ(back.infix(), tree.infix());
    EXPECT_EQ(back.spans(), tree.spans());
    EXPECT_EQ(to_view_model(back), text);
  }
}

TEST(ViewModelTest, MergedFields) {
  MergedTree merged = fg_merge();
  Json j = view_model_json(merged);
  ASSERT_EQ(j["roots"].size(), 2u);
  const Json& f = j["roots"][0];
  EXPECT_EQ(f["origin"], "A");
  EXPECT_EQ(f["grade"], "similar");
  EXPECT_EQ(f["collapsed"], false);
  EXPECT_EQ(f["hiddenCount"], 0);
  EXPECT_EQ(f["children"][0]["origin"], "both");
  EXPECT_EQ(f["children"][0]["id"], "A/pA|B/pB");
  EXPECT_EQ(j["roots"][1]["origin"], "B");
  EXPECT_EQ(j["roots"][1]["refs"][0], "A/pA|B/pB");
  std::vector<std::string> keys;
  for (const auto& [k, v] : f.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"id", "kind", "display", "glyph", "ambiguous",
                                            "qualifierRole", "origin", "grade", "collapsed",
                                            "hiddenCount", "sourceA", "sourceB", "refs",
                                            "children"}));
}

TEST(ViewModelTest, RoundTripMergedTrees) {
  MergedTree merged = fg_merge();
  for (const MergedTree& t : {merged, collapse_unmarked(merged)}) {
    MergedTree back = merged_tree_from_view_model(to_view_model(t));
    EXPECT_EQ(back.roots, t.roots);
  }
}

TEST(ViewModelTest, RejectsMalformed) {
  for (const char* bad : {"[]", "{\"root\":{}}", "{\"infix\":\"x\",\"spans\":{},\"root\":{\"id\":1}}",
                          "{\"roots\":[{\"id\":\"A/x\"}]}", "not json"}) {
    EXPECT_THROW(expression_tree_from_view_model(bad), Error) << bad;
    EXPECT_THROW(merged_tree_from_view_model(bad), Error) << bad;
  }
}

Json load_schema(const std::string& name) {
  std::ifstream in(std::string(MEXTREE_SCHEMA_DIR) + "/" + name);
  return Json::parse(in);
}

std::vector<std::string> keys_of(const Json& object) {
  std::vector<std::string> keys;
  for (const auto& [k, v] : object.items()) keys.push_back(k);
  return keys;
}

// Every emitted node carries exactly the schema's required keys, in order; head is the only optional.
void expect_schema_keys(const Json& node, const std::vector<std::string>& required) {
  std::vector<std::string> keys = keys_of(node);
  std::erase(keys, "head");
  EXPECT_EQ(keys, required);
  if (node.contains("head")) expect_schema_keys(node["head"], required);
  for (const Json& child : node["children"]) expect_schema_keys(child, required);
}

TEST(ViewModelTest, KeysMatchSchema) {
  Json defs = load_schema("tree.schema.json")["$defs"];
  auto required = [&](const char* def) {
    return defs[def]["required"].get<std::vector<std::string>>();
  };
  std::mt19937 rng(97);
  for (int i = 0; i < 50; ++i) {
    ExpressionTree a = parse_tree(testing::random_pragmatic(rng).mathml);
    ExpressionTree b = parse_tree(testing::random_pragmatic(rng).mathml);
    Json ja = view_model_json(a);
    EXPECT_EQ(keys_of(ja), required("expressionDocument"));
    expect_schema_keys(ja["root"], required("expressionNode"));
    std::size_t unified = 0;
    MergedTree merged = merge(a, b, testing::random_disjoint_spec(rng, a, b, unified));
    for (const MergedTree& t : {merged, collapse_unmarked(merged)}) {
      Json jm = view_model_json(t);
      EXPECT_EQ(keys_of(jm), required("mergedDocument"));
      for (const Json& root : jm["roots"]) expect_schema_keys(root, required("mergedNode"));
    }
  }
}

TEST(ViewModelTest, SchemaEnumsCoverEmittedValues) {
  Json defs = load_schema("tree.schema.json")["$defs"];
  for (NodeKind kind : {NodeKind::kFunctionHead, NodeKind::kLeafIdentifier, NodeKind::kLeafNumber,
                        NodeKind::kLeafSymbol, NodeKind::kQualifier, NodeKind::kAmbiguousGroup}) {
    EXPECT_NE(std::find(defs["kind"]["enum"].begin(), defs["kind"]["enum"].end(),
                        std::string(to_string(kind))),
              defs["kind"]["enum"].end());
  }
  const Json& roles = defs["qualifierRole"]["enum"];
  for (QualifierRole role : {QualifierRole::kBvar, QualifierRole::kLowlimit, QualifierRole::kUplimit,
                             QualifierRole::kDegree, QualifierRole::kDomainOfApplication,
                             QualifierRole::kInterval, QualifierRole::kCondition}) {
    EXPECT_NE(std::find(roles.begin(), roles.end(), std::string(to_string(role))), roles.end());
  }
}

}  // namespace
}  // namespace mextree
