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

#include <cstdio>

#include "mextree/render.hpp"
#include "mextree/xml.hpp"

namespace mextree {

namespace {

constexpr double kMargin = 8.0;
constexpr double kCornerRadius = 6.0;

std::string num(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2f", v);
  std::string out = buffer;
  if (out == "-0.00") out = "0.00";
  return out;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

std::string stylesheet(const Theme& t) {
  return ".edge{stroke:" + t.edge + ";stroke-width:1.5}"
         ".edge.ref{stroke-dasharray:2 3}"
         ".node rect{fill:" + t.node_fill + ";stroke:" + t.node_stroke + ";stroke-width:1.5}"
         ".node text{font-family:monospace;font-size:14px;text-anchor:middle;"
         "dominant-baseline:central;fill:" + t.text + "}"
         ".origin-a rect{fill:" + t.origin_a_fill + "}"
         ".origin-b rect{fill:" + t.origin_b_fill + "}"
         ".unified rect{fill:" + t.unified_fill + "}"
         ".similar rect{stroke:" + t.similar_stroke + ";stroke-width:3}"
         ".collapsed rect{fill:" + t.collapsed_fill + "}"
         ".ambiguous rect{stroke-dasharray:5 3}";
}

}  // namespace

SvgDocument to_svg(const Layout& layout, const RenderOptions& options) {
  SvgDocument doc;
  double width = layout.width + 2 * kMargin;
  double height = layout.height + 2 * kMargin;
  doc.view_box = num(-kMargin) + " " + num(-kMargin) + " " + num(width) + " " + num(height);

  std::string& out = doc.text;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         num(width) + "\" height=\"" + num(height) + "\" viewBox=\"" + doc.view_box + "\">\n";
  out += "<style>" + stylesheet(options.theme) + "</style>\n";
  out += "<g class=\"edges\">\n";
  for (const LayoutEdge& edge : layout.edges) {
    const LayoutNode& from = layout.nodes[edge.parent];
    const LayoutNode& to = layout.nodes[edge.child];
    out += "<line class=\"" + std::string(edge.reference ? "edge ref" : "edge") +
           "\" x1=\"" + num(from.x) + "\" y1=\"" + num(from.y + from.height) +
           "\" x2=\"" + num(to.x) + "\" y2=\"" + num(to.y) + "\"/>\n";
  }
  out += "</g>\n<g class=\"nodes\">\n";
  for (const LayoutNode& node : layout.nodes) {
    out += "<g class=\"" + join(node.classes) + "\" data-id=\"" + xml_escape(node.id) + "\">";
    out += "<rect x=\"" + num(node.left()) + "\" y=\"" + num(node.y) + "\" width=\"" +
           num(node.width) + "\" height=\"" + num(node.height) + "\" rx=\"" +
           num(kCornerRadius) + "\" ry=\"" + num(kCornerRadius) + "\"/>";
    out += "<text x=\"" + num(node.x) + "\" y=\"" + num(node.y + node.height / 2.0) + "\">" +
           xml_escape(node.label) + "</text></g>\n";
  }
  out += "</g>\n</svg>\n";
  return doc;
}

}  // namespace mextree
