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

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "mextree/error.hpp"
#include "mextree/render.hpp"

namespace mextree {

namespace {

// Tree shape shared by expression and merged trees.
struct RenderNode {
  std::string id;
  std::string label;
  std::vector<std::string> classes;
  std::vector<RenderNode> children;
  std::vector<std::string> refs;
};

std::string caret(const std::optional<std::string>& glyph, const std::string& label,
                  const RenderOptions& options) {
  if (glyph && *glyph == "^" && label == *glyph) return options.caret_style;
  return label;
}

RenderNode adapt(const ExprNode& node, const RenderOptions& options) {
  RenderNode out;
  out.id = node.id;
  out.label = caret(node.glyph, node.label(), options);
  out.classes.push_back("node");
  if (node.ambiguous) out.classes.push_back("ambiguous");
  for (const ExprNode& child : node.children) {
    out.children.push_back(adapt(child, options));
  }
  return out;
}

RenderNode adapt(const MergedNode& node, const RenderOptions& options) {
  RenderNode out;
  out.id = node.key();
  out.label = caret(node.glyph, node.label(), options);
  out.classes.push_back("node");
  switch (node.origin) {
    case Origin::kA: out.classes.push_back("origin-a"); break;
    case Origin::kB: out.classes.push_back("origin-b"); break;
    case Origin::kBoth: out.classes.push_back("unified"); break;
  }
  if (node.grade == Grade::kSimilar) out.classes.push_back("similar");
  if (node.collapsed) out.classes.push_back("collapsed");
  if (node.ambiguous) out.classes.push_back("ambiguous");
  for (const MergedNode& child : node.children) {
    out.children.push_back(adapt(child, options));
  }
  out.refs = node.refs;
  return out;
}

struct Extent {
  double left;
  double right;
};

class Placer {
 public:
  explicit Placer(const RenderOptions& options) : options_(options) {}

  Layout run(const std::vector<RenderNode>& roots) {
    std::vector<Extent> contour;
    std::vector<std::size_t> placed_roots;
    for (const RenderNode& root : roots) {
      std::size_t first = nodes_.size();
      std::vector<Extent> sub = place(root, 0, std::nullopt);
      if (!placed_roots.empty()) {
        double offset = separation(contour, sub);
        shift(first, offset);
        merge_contour(contour, sub, offset);
      } else {
        contour = sub;
      }
      placed_roots.push_back(first);
    }

    Layout out;
    if (nodes_.empty()) return out;
    double min_left = std::numeric_limits<double>::max();
    double max_right = std::numeric_limits<double>::lowest();
    double max_bottom = 0.0;
    for (const LayoutNode& n : nodes_) {
      min_left = std::min(min_left, n.left());
      max_right = std::max(max_right, n.right());
      max_bottom = std::max(max_bottom, n.y + n.height);
    }
    for (LayoutNode& n : nodes_) n.x -= min_left;
    out.width = max_right - min_left;
    out.height = max_bottom;

    std::unordered_map<std::string, std::size_t> by_id;
    for (std::size_t i = 0; i < nodes_.size(); ++i) by_id.emplace(nodes_[i].id, i);
    for (const auto& [from, target] : pending_refs_) {
      auto it = by_id.find(target);
      if (it != by_id.end()) edges_.push_back({from, it->second, true});
    }
    out.nodes = std::move(nodes_);
    out.edges = std::move(edges_);
    return out;
  }

 private:
  // Lays out a subtree with its root at x = 0 and returns its contour, one
  // extent per level relative to the root.
  std::vector<Extent> place(const RenderNode& node, int depth,
                            std::optional<std::size_t> parent) {
    std::size_t index = nodes_.size();
    LayoutNode ln;
    ln.id = node.id;
    ln.label = node.label;
    ln.classes = node.classes;
    ln.width = label_width(node.label);
    ln.depth = depth;
    ln.y = depth * options_.level_gap;
    bool cut = options_.max_depth && depth >= *options_.max_depth && !node.children.empty();
    if (cut && std::find(ln.classes.begin(), ln.classes.end(), "collapsed") == ln.classes.end()) {
      ln.classes.push_back("collapsed");
    }
    nodes_.push_back(std::move(ln));
    if (parent) edges_.push_back({*parent, index, false});
    for (const std::string& ref : node.refs) pending_refs_.emplace_back(index, ref);

    std::vector<Extent> contour{{-nodes_[index].width / 2.0, nodes_[index].width / 2.0}};
    if (cut || node.children.empty()) return contour;

    std::vector<Extent> below;
    std::vector<std::size_t> child_roots;
    for (const RenderNode& child : node.children) {
      std::size_t first = nodes_.size();
      std::vector<Extent> sub = place(child, depth + 1, index);
      double offset = 0.0;
      if (!child_roots.empty()) {
        offset = separation(below, sub);
        shift(first, offset);
        merge_contour(below, sub, offset);
      } else {
        below = sub;
      }
      child_roots.push_back(first);
    }

    double center = (nodes_[child_roots.front()].x + nodes_[child_roots.back()].x) / 2.0;
    // Re-center the children block under the parent at x = 0.
    shift(index + 1, -center);
    for (Extent& e : below) {
      e.left -= center;
      e.right -= center;
    }
    contour.insert(contour.end(), below.begin(), below.end());
    return contour;
  }

  // Smallest offset for `right` so it clears `left` by node_gap on each
  // shared level.
  double separation(const std::vector<Extent>& left, const std::vector<Extent>& right) const {
    double offset = std::numeric_limits<double>::lowest();
    std::size_t levels = std::min(left.size(), right.size());
    for (std::size_t d = 0; d < levels; ++d) {
      offset = std::max(offset, left[d].right + options_.node_gap - right[d].left);
    }
    return offset;
  }

  void merge_contour(std::vector<Extent>& acc, const std::vector<Extent>& sub, double offset) {
    for (std::size_t d = 0; d < sub.size(); ++d) {
      Extent shifted{sub[d].left + offset, sub[d].right + offset};
      if (d < acc.size()) {
        acc[d].left = std::min(acc[d].left, shifted.left);
        acc[d].right = std::max(acc[d].right, shifted.right);
      } else {
        acc.push_back(shifted);
      }
    }
  }

  // Shifts nodes_[first..] horizontally; they form the most recent subtree.
  void shift(std::size_t first, double dx) {
    for (std::size_t i = first; i < nodes_.size(); ++i) nodes_[i].x += dx;
  }

  const RenderOptions& options_;
  std::vector<LayoutNode> nodes_;
  std::vector<LayoutEdge> edges_;
  std::vector<std::pair<std::size_t, std::string>> pending_refs_;
};

Layout run_layout(const std::vector<RenderNode>& roots, const RenderOptions& options) {
  options.validate();
  return Placer(options).run(roots);
}

}  // namespace

void RenderOptions::validate() const {
  if (!(level_gap > 0.0) || !(node_gap > 0.0)) {
    throw Error(ErrorCode::kInvalidOptions, "level_gap and node_gap must be positive");
  }
  if (level_gap <= kNodeHeight) {
    throw Error(ErrorCode::kInvalidOptions, "level_gap must exceed the node height");
  }
  if (max_depth && *max_depth < 0) {
    throw Error(ErrorCode::kInvalidOptions, "max_depth must not be negative");
  }
  if (caret_style != "^" && caret_style != "∧") {
    throw Error(ErrorCode::kInvalidOptions, "caret_style must be \"^\" or \"∧\"");
  }
}

double label_width(const std::string& label) {
  std::size_t code_points = 0;
  for (char c : label) {
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++code_points;
  }
  return std::max(kMinNodeWidth, code_points * kCharWidth + 2 * kNodePadding);
}

Layout layout(const ExpressionTree& tree, const RenderOptions& options) {
  return run_layout({adapt(tree.root(), options)}, options);
}

Layout layout(const MergedTree& tree, const RenderOptions& options) {
  std::vector<RenderNode> roots;
  for (const MergedNode& root : tree.roots) roots.push_back(adapt(root, options));
  return run_layout(roots, options);
}

}  // namespace mextree
