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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "generators.hpp"
#include "mextree/cli.hpp"
#include "mextree/pipeline.hpp"
#include "mextree/service.hpp"
#include "mextree/viewmodel.hpp"

namespace mextree {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("mextree_cli_" + name);
  std::ofstream(path, std::ios::binary) << content;
  return path.string();
}

TEST(CliTest, ParseParallelFixtureJson) {
  CliRun r = cli({"parse", testing::fixture_path("fab_parallel.mml"), "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["infix"], "f(a + b)");
  EXPECT_EQ(j["spans"].size(), 4u);
  std::string parallel = testing::read_fixture("fab_parallel.mml");
  EXPECT_EQ(r.out, handle_tree(parallel, "", ServiceConfig{}).body);
}

TEST(CliTest, ParseStdin) {
  CliRun r = cli({"parse"}, testing::read_fixture("leaf_x.mml"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["infix"], "x");
}

TEST(CliTest, MalformedInputExitsOne) {
  std::string path = temp_file("broken.xml", "<math><mi>a</mi>");
  CliRun r = cli({"parse", path});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(Json::parse(r.err)["error"], "MalformedXml");
  EXPECT_TRUE(r.out.empty());
}

TEST(CliTest, MissingFileExitsOne) {
  CliRun r = cli({"parse", "/nonexistent/x.mml"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(Json::parse(r.err).contains("error"));
}

TEST(CliTest, SvgToFile) {
  auto path = std::filesystem::temp_directory_path() / "mextree_cli_t.svg";
  std::filesystem::remove(path);
  CliRun r = cli({"parse", testing::fixture_path("fab_parallel.mml"), "--format", "svg", "--out",
               path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream file(path, std::ios::binary);
  std::string svg((std::istreambuf_iterator<char>(file)), {});
  EXPECT_TRUE(testing::is_well_formed_svg(svg));
  EXPECT_EQ(svg, handle_tree_svg(testing::read_fixture("fab_parallel.mml"), "", ServiceConfig{}).body);
}

TEST(CliTest, UsageErrorsExitTwo) {
  std::string a = testing::fixture_path("f_apb.mml");
  std::string b = testing::fixture_path("g_apb.mml");
  std::string spec = temp_file("spec.json", "[]");
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({"parse", a, "--format", "png"}).code, 2);
  EXPECT_EQ(cli({"compare", a, b}).code, 2);
  CliRun both = cli({"compare", a, b, "--spec", spec, "--measure", "identical"});
  EXPECT_EQ(both.code, 2);
  EXPECT_EQ(Json::parse(both.err)["error"], "Usage");
  EXPECT_EQ(cli({"compare", a, b, "--measure", "fuzzy"}).code, 2);
  EXPECT_EQ(cli({"parse", a, "--max-depth", "-1"}).code, 2);
}

TEST(CliTest, HelpExitsZero) {
  CliRun r = cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("compare"), std::string::npos);
}

TEST(CliTest, CompareIdenticalMeasure) {
  CliRun r = cli({"compare", testing::fixture_path("f_apb.mml"), testing::fixture_path("g_apb.mml"),
               "--measure", "identical"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  ASSERT_EQ(j["roots"].size(), 2u);
  const Json& unified = j["roots"][0]["children"][0];
  EXPECT_EQ(unified["origin"], "both");
  EXPECT_EQ(unified["id"], "A/pA|B/pB");
  EXPECT_EQ(unified["children"].size(), 2u);
}

TEST(CliTest, CompareSameFileUnifiesEverything) {
  std::string a = testing::fixture_path("f_apb.mml");
  CliRun r = cli({"compare", a, a, "--measure", "identical"});
  ASSERT_EQ(r.code, 0);
  Json j = Json::parse(r.out);
  ASSERT_EQ(j["roots"].size(), 1u);
  EXPECT_EQ(j["roots"][0]["origin"], "both");
}

TEST(CliTest, CompareDanglingSpecExitsOne) {
  std::string spec = temp_file("dangling.json", R"([{"idA":"nope","idB":"gB","grade":"similar"}])");
  CliRun r = cli({"compare", testing::fixture_path("f_apb.mml"), testing::fixture_path("g_apb.mml"),
               "--spec", spec});
  EXPECT_EQ(r.code, 1);
  Json j = Json::parse(r.err);
  EXPECT_EQ(j["error"], "SpecViolation");
  EXPECT_EQ(j["violations"][0]["id"], "nope");
}

TEST(CliTest, CompareSvgAndNoCollapse) {
  std::string a = testing::fixture_path("f_apb.mml");
  std::string b = testing::fixture_path("g_apb.mml");
  std::string spec = temp_file("similar.json", R"([{"idA":"aA","idB":"bB","grade":"similar"}])");
  CliRun collapsed = cli({"compare", a, b, "--spec", spec});
  CliRun expanded = cli({"compare", a, b, "--spec", spec, "--no-collapse"});
  ASSERT_EQ(collapsed.code, 0);
  ASSERT_EQ(expanded.code, 0);
  EXPECT_NE(collapsed.out.find("\"collapsed\":true"), std::string::npos);
  EXPECT_EQ(expanded.out.find("\"collapsed\":true"), std::string::npos);
  CliRun svg = cli({"compare", a, b, "--spec", spec, "--format", "svg"});
  ASSERT_EQ(svg.code, 0);
  EXPECT_TRUE(testing::is_well_formed_svg(svg.out));
}

TEST(CliTest, CaretOption) {
  std::string path = temp_file("pow.mml", "<math><apply><power/><ci>x</ci><cn>2</cn></apply></math>");
  CliRun r = cli({"parse", path, "--caret", "∧"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["infix"], "x ∧ 2");
}

TEST(CliTest, ConvertWithoutConverterFails) {
  unsetenv("MEXTREE_CONVERTER_URL");
  CliRun r = cli({"convert"}, "x");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(Json::parse(r.err)["error"], "ConverterUnconfigured");
}

}  // namespace
}  // namespace mextree
