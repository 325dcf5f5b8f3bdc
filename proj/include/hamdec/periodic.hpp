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

#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "hamdec/core.hpp"

namespace hamdec {

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Vertex low() const { return std::min(u, v); }
  std::int64_t length() const { return FinitePath::length(u, v); }
  bool operator==(const Edge&) const = default;
};

/// Ceiling / floor division for positive divisors.
constexpr std::int64_t div_floor(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  return (a % b != 0 && a < 0) ? q - 1 : q;
}
constexpr std::int64_t div_ceil(std::int64_t a, std::int64_t b) {
  return -div_floor(-a, b);
}

/**
 * Edges of the translate H_j (j indexes offsets) coming from every copy
 * starter + n*i + offsets[j] that has at least one vertex in [lo, hi].
 * Edges are emitted in walk order, copy by copy; callers filter by window.
 */
inline std::vector<Edge> periodic_edges(const DecompositionCertificate& c,
                                        std::size_t j, Vertex lo, Vertex hi) {
  const auto starter = c.starter();
  const std::int64_t n = c.period();
  const std::int64_t o = c.offsets()[j];
  const auto [smin, smax] = std::minmax_element(starter.begin(), starter.end());
  const std::int64_t first = div_ceil(checked_sub(checked_sub(lo, *smax), o), n);
  const std::int64_t last = div_floor(checked_sub(checked_sub(hi, *smin), o), n);
  std::vector<Edge> edges;
  for (std::int64_t i = first; i <= last; ++i) {
    const Vertex shift = checked_add(checked_mul(n, i), o);
    for (std::size_t e = 0; e + 1 < starter.size(); ++e) {
      edges.push_back({checked_add(starter[e], shift),
                       checked_add(starter[e + 1], shift)});
    }
  }
  return edges;
}

}  // namespace hamdec
