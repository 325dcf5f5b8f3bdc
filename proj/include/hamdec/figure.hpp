// Copyright 2026 The hamdec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * @brief Arc diagrams of a decomposition on a stretch of the number line.
 *
 * Integers lo..hi sit on a horizontal axis; every edge of H_j with both
 * endpoints in range is drawn as an arc above the axis, one stroke class
 * per H_j. Output depends only on the inputs.
 */
#pragma once

#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hamdec/core.hpp"
#include "hamdec/periodic.hpp"

namespace hamdec {

enum class FigureFormat { Dot, Svg };

inline constexpr std::array<std::string_view, 10> kStrokePalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
};

namespace detail {

inline void check_range(const DecompositionCertificate& c, Vertex lo, Vertex hi) {
  if (hi < lo || checked_sub(hi, lo) < c.period()) {
    throw Error(ErrorKind::InvalidArgument,
                "range " + std::to_string(lo) + ".." + std::to_string(hi) +
                    " is shorter than one period (" + std::to_string(c.period()) + ")");
  }
  if (checked_sub(hi, lo) > 100000) {
    throw Error(ErrorKind::ResourceLimit, "figure range too wide");
  }
}

/// Edges of each H_j with both endpoints in [lo, hi].
inline std::vector<std::vector<Edge>> edges_in_range(const DecompositionCertificate& c,
                                                     Vertex lo, Vertex hi) {
  std::vector<std::vector<Edge>> out(c.offsets().size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    for (const Edge& e : periodic_edges(c, j, lo, hi)) {
      if (e.u >= lo && e.u <= hi && e.v >= lo && e.v <= hi) out[j].push_back(e);
    }
  }
  return out;
}

}  // namespace detail

inline std::string render_svg(const DecompositionCertificate& c, Vertex lo, Vertex hi) {
  detail::check_range(c, lo, hi);
  constexpr std::int64_t unit = 24;
  constexpr std::int64_t margin = 24;
  const auto paths = detail::edges_in_range(c, lo, hi);
  std::int64_t longest = 1;
  for (const auto& edges : paths) {
    for (const Edge& e : edges) longest = std::max(longest, e.length());
  }
  const std::int64_t width = 2 * margin + (hi - lo) * unit;
  const std::int64_t axis = margin + longest * unit / 2;
  const std::int64_t height = axis + 2 * margin;
  auto x = [&](Vertex v) { return margin + (v - lo) * unit; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
     << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "<style>\n"
     << ".axis{stroke:#999999;stroke-width:1}\n"
     << ".vertex{fill:#000000}\n"
     << "text{font-family:sans-serif;font-size:10px;text-anchor:middle}\n";
  for (std::size_t j = 0; j < paths.size(); ++j) {
    os << ".h" << j << "{fill:none;stroke:" << kStrokePalette[j % kStrokePalette.size()]
       << ";stroke-width:2}\n";
  }
  os << "</style>\n";
  os << "<line class=\"axis\" x1=\"" << x(lo) << "\" y1=\"" << axis << "\" x2=\"" << x(hi)
     << "\" y2=\"" << axis << "\"/>\n";
  for (std::size_t j = 0; j < paths.size(); ++j) {
    os << "<g class=\"h" << j << "\">\n";
    for (const Edge& e : paths[j]) {
      const Vertex a = std::min(e.u, e.v);
      const Vertex b = std::max(e.u, e.v);
      const std::int64_t r = (b - a) * unit / 2;
      os << "<path d=\"M " << x(a) << ' ' << axis << " A " << r << ' ' << r << " 0 0 1 "
         << x(b) << ' ' << axis << "\"/>\n";
    }
    os << "</g>\n";
  }
  for (Vertex v = lo; v <= hi; ++v) {
    os << "<circle class=\"vertex\" cx=\"" << x(v) << "\" cy=\"" << axis << "\" r=\"3\"/>\n";
    os << "<text x=\"" << x(v) << "\" y=\"" << axis + 16 << "\">" << v << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

inline std::string render_dot(const DecompositionCertificate& c, Vertex lo, Vertex hi) {
  detail::check_range(c, lo, hi);
  const auto paths = detail::edges_in_range(c, lo, hi);
  std::ostringstream os;
  os << "graph decomposition {\n"
     << "  layout=neato;\n"
     << "  splines=curved;\n"
     << "  node [shape=circle, width=0.3, fixedsize=true, fontsize=10];\n";
  for (Vertex v = lo; v <= hi; ++v) {
    os << "  \"" << v << "\" [pos=\"" << (v - lo) << ",0!\"];\n";
  }
  for (std::size_t j = 0; j < paths.size(); ++j) {
    for (const Edge& e : paths[j]) {
      os << "  \"" << e.u << "\" -- \"" << e.v << "\" [class=\"h" << j << "\", color=\""
         << kStrokePalette[j % kStrokePalette.size()] << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

inline std::string render_figure(const DecompositionCertificate& c, Vertex lo, Vertex hi,
                                 FigureFormat format) {
  return format == FigureFormat::Svg ? render_svg(c, lo, hi) : render_dot(c, lo, hi);
}

}  // namespace hamdec
