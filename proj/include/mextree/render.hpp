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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mextree/exprtree.hpp"
#include "mextree/treemerge.hpp"

namespace mextree {

// Default palette; the colors are arbitrary but fixed.
struct Theme {
  std::string node_fill = "#ffffff";
  std::string node_stroke = "#37474f";
  std::string text = "#212121";
  std::string edge = "#78909c";
  std::string origin_a_fill = "#e3f2fd";
  std::string origin_b_fill = "#fff3e0";
  std::string unified_fill = "#e8f5e9";
  std::string similar_stroke = "#f9a825";
  std::string collapsed_fill = "#eceff1";
};

struct RenderOptions {
  double level_gap = 64.0;  // must exceed kNodeHeight
  double node_gap = 16.0;
  Theme theme;
  // Nodes deeper than this are left out; cut-off parents render collapsed.
  std::optional<int> max_depth;
  std::string caret_style = "^";

  // Throws Error(kInvalidOptions).
  void validate() const;
};

inline constexpr double kNodeHeight = 28.0;
inline constexpr double kCharWidth = 9.0;
inline constexpr double kNodePadding = 12.0;
inline constexpr double kMinNodeWidth = 32.0;

// x is the horizontal center of the box, y its top edge (depth * level_gap).
struct LayoutNode {
  std::string id;
  std::string label;
  std::vector<std::string> classes;
  double x = 0.0;
  double y = 0.0;
  double width = 0.0;
  double height = kNodeHeight;
  int depth = 0;

  double left() const { return x - width / 2.0; }
  double right() const { return x + width / 2.0; }
};

struct LayoutEdge {
  std::size_t parent = 0;
  std::size_t child = 0;
  bool reference = false;
};

// Nodes in preorder (roots left to right); the bounding box starts at (0, 0).
struct Layout {
  std::vector<LayoutNode> nodes;
  std::vector<LayoutEdge> edges;
  double width = 0.0;
  double height = 0.0;
};

// Tidy layered placement: leaves left to right in preorder, parents centered
// over their first and last child, subtrees pushed apart until every pair of
// boxes on a level is at least node_gap apart. Several roots sit side by side.
Layout layout(const ExpressionTree& tree, const RenderOptions& options = {});
Layout layout(const MergedTree& tree, const RenderOptions& options = {});

double label_width(const std::string& label);

struct SvgDocument {
  std::string text;
  std::string view_box;
};

// Canonical SVG: fixed attribute order, two-decimal coordinates, one <g> per
// node with a state class (ambiguous, origin-a, origin-b, unified, similar,
// collapsed) and one <line> per edge.
SvgDocument to_svg(const Layout& layout, const RenderOptions& options = {});

}  // namespace mextree
