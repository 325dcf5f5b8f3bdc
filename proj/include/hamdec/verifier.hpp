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
 * @brief Exact and brute-force checks of decomposition certificates.
 *
 * verify_certificate() reduces the infinite claim to residues modulo the
 * period. With n = period:
 *   1. the starter is a path with n edges from 0 to n;
 *   2. its vertices meet every class mod n once, class 0 twice (endpoints),
 *      so the translates starter + n*i glue into one two-way-infinite
 *      Hamilton path H;
 *   3. every edge length lies in S+;
 *   4. for each d in S+, the residues R_d of the smaller endpoints of the
 *      length-d starter edges, shifted by every offset, cover Z_n exactly
 *      once, so the translates H + o_j partition the length-d edges;
 *   5. offsets are distinct mod n.
 * These conditions are necessary and sufficient for certificates of this
 * shape.
 *
 * window_oracle() is an independent cross-check. It materializes every H_j
 * on a finite slab of Z and inspects degrees, cycles, connectivity and the
 * edge partition directly.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "hamdec/core.hpp"
#include "hamdec/periodic.hpp"

namespace hamdec {

enum class Failure {
  PathBroken,
  EndpointMismatch,
  ResidueCoverage,
  LengthResidueOverlap,
  LengthResidueGap,
  ForeignEdgeLength,
  OffsetCollision,
};

constexpr std::string_view to_string(Failure f) {
  switch (f) {
    case Failure::PathBroken: return "PathBroken";
    case Failure::EndpointMismatch: return "EndpointMismatch";
    case Failure::ResidueCoverage: return "ResidueCoverage";
    case Failure::LengthResidueOverlap: return "LengthResidueOverlap";
    case Failure::LengthResidueGap: return "LengthResidueGap";
    case Failure::ForeignEdgeLength: return "ForeignEdgeLength";
    case Failure::OffsetCollision: return "OffsetCollision";
  }
  return "Unknown";
}

/// R_d: residues mod n of the smaller endpoints of the starter's length-d edges.
struct ResidueTable {
  std::int64_t length = 0;
  std::vector<std::int64_t> residues;

  bool operator==(const ResidueTable&) const = default;
};

struct VerificationReport {
  bool accepted = false;
  std::vector<Failure> failures;
  std::vector<ResidueTable> residue_tables;

  bool has(Failure f) const {
    return std::find(failures.begin(), failures.end(), f) != failures.end();
  }
};

inline VerificationReport verify_certificate(const DecompositionCertificate& c) {
  const std::int64_t n = c.period();
  const auto starter = c.starter();
  const auto offsets = c.offsets();
  const ConnectionSet& s = c.connection_set();

  bool path_broken = false;
  bool endpoints = false;
  bool residues = false;
  bool overlap = false;
  bool gap = false;
  bool foreign = false;
  bool collision = false;

  {
    std::vector<Vertex> sorted(starter.begin(), starter.end());
    std::sort(sorted.begin(), sorted.end());
    path_broken = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
  }
  endpoints = starter.front() != 0 || starter.back() != n;

  std::vector<std::int64_t> hits(static_cast<std::size_t>(n), 0);
  for (Vertex v : starter) ++hits[static_cast<std::size_t>(floor_mod(v, n))];
  for (std::int64_t r = 0; r < n; ++r) {
    if (hits[static_cast<std::size_t>(r)] != (r == 0 ? 2 : 1)) residues = true;
  }

  VerificationReport report;
  report.residue_tables.reserve(s.size());
  for (std::int64_t d : s.positive_half()) report.residue_tables.push_back({d, {}});
  for (std::size_t i = 0; i + 1 < starter.size(); ++i) {
    const Edge e{starter[i], starter[i + 1]};
    const std::int64_t len = e.length();
    const auto half = s.positive_half();
    auto it = std::lower_bound(half.begin(), half.end(), len);
    if (it == half.end() || *it != len) {
      foreign = true;
      continue;
    }
    report.residue_tables[static_cast<std::size_t>(it - half.begin())]
        .residues.push_back(floor_mod(e.low(), n));
  }

  std::vector<std::int64_t> cover(static_cast<std::size_t>(n));
  for (auto& table : report.residue_tables) {
    std::sort(table.residues.begin(), table.residues.end());
    std::fill(cover.begin(), cover.end(), 0);
    for (std::int64_t o : offsets) {
      for (std::int64_t r : table.residues) {
        ++cover[static_cast<std::size_t>(floor_mod(r + o, n))];
      }
    }
    for (std::int64_t count : cover) {
      if (count > 1) overlap = true;
      if (count == 0) gap = true;
    }
  }

  collision = std::adjacent_find(offsets.begin(), offsets.end()) != offsets.end();

  auto add = [&](bool flag, Failure f) {
    if (flag) report.failures.push_back(f);
  };
  add(path_broken, Failure::PathBroken);
  add(endpoints, Failure::EndpointMismatch);
  add(residues, Failure::ResidueCoverage);
  add(overlap, Failure::LengthResidueOverlap);
  add(gap, Failure::LengthResidueGap);
  add(foreign, Failure::ForeignEdgeLength);
  add(collision, Failure::OffsetCollision);
  report.accepted = report.failures.empty();
  return report;
}

enum class WindowFailure {
  DegreeMismatch,
  Cycle,
  Disconnected,
  EdgeOverlap,
  EdgeUncovered,
  ForeignEdge,
};

constexpr std::string_view to_string(WindowFailure f) {
  switch (f) {
    case WindowFailure::DegreeMismatch: return "DegreeMismatch";
    case WindowFailure::Cycle: return "Cycle";
    case WindowFailure::Disconnected: return "Disconnected";
    case WindowFailure::EdgeOverlap: return "EdgeOverlap";
    case WindowFailure::EdgeUncovered: return "EdgeUncovered";
    case WindowFailure::ForeignEdge: return "ForeignEdge";
  }
  return "Unknown";
}

struct WindowReport {
  bool accepted = false;
  std::vector<WindowFailure> failures;

  bool has(WindowFailure f) const {
    return std::find(failures.begin(), failures.end(), f) != failures.end();
  }
};

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  /// False when x and y were already joined.
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent_[x] = y;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

/**
 * Brute-force check on W = [-periods*n, periods*n]. Inside the core window
 * W' = [-(periods-1)*n + max(S+), (periods-1)*n - max(S+)] every vertex must
 * have degree 2 in each H_j and all of W' must lie in one component of
 * H_j restricted to W widened by the starter's spread plus one period on
 * each side (a Hamilton path may leave W and come back; the subpath joining
 * two vertices never strays further than that); no H_j may close a cycle
 * there; the H_j must be
 * edge-disjoint on W and cover every edge of Cay(Z, S) inside W'; every
 * materialized edge must have a length in S+. Degrees above 2 anywhere in W
 * are also rejected.
 */
inline WindowReport window_oracle(const DecompositionCertificate& c, int periods) {
  if (periods < 3) {
    throw Error(ErrorKind::InvalidArgument, "window oracle needs periods >= 3");
  }
  const ConnectionSet& s = c.connection_set();
  const auto half = s.positive_half();
  const std::int64_t n = c.period();
  const std::int64_t max_s = s.max();
  const std::int64_t radius = checked_mul(periods, n);
  if (radius < checked_mul(2, max_s)) {
    throw Error(ErrorKind::WindowTooSmall,
                "periods * n = " + std::to_string(radius) +
                    " is below 2 * max(S+) = " + std::to_string(2 * max_s));
  }
  const Vertex lo = -radius;
  const Vertex hi = radius;
  const Vertex core_lo = checked_add(-checked_mul(periods - 1, n), max_s);
  const Vertex core_hi = checked_sub(checked_mul(periods - 1, n), max_s);
  const auto width = static_cast<std::size_t>(hi - lo + 1);
  auto at = [lo](Vertex v) { return static_cast<std::size_t>(v - lo); };
  const auto [smin, smax] = std::minmax_element(c.starter().begin(), c.starter().end());
  const std::int64_t pad = checked_add(checked_sub(*smax, *smin), n);
  const Vertex wide_lo = checked_sub(lo, pad);
  const Vertex wide_hi = checked_add(hi, pad);
  const auto wide_width = static_cast<std::size_t>(wide_hi - wide_lo + 1);
  auto wide_at = [wide_lo](Vertex v) { return static_cast<std::size_t>(v - wide_lo); };
  auto inside = [lo, hi](Vertex v) { return v >= lo && v <= hi; };

  // owner[(x - lo) * |S+| + index(d)] = first H_j holding edge {x, x + d}.
  std::vector<int> owner(width * half.size(), -1);

  bool degree = false;
  bool cycle = false;
  bool disconnected = false;
  bool overlap = false;
  bool uncovered = false;
  bool foreign = false;

  for (std::size_t j = 0; j < c.offsets().size(); ++j) {
    std::vector<int> deg(width, 0);
    detail::DisjointSets components(wide_width);
    for (const Edge& e : periodic_edges(c, j, wide_lo, wide_hi)) {
      if (e.u >= wide_lo && e.u <= wide_hi && e.v >= wide_lo && e.v <= wide_hi) {
        if (!components.unite(wide_at(e.u), wide_at(e.v))) cycle = true;
      }
      const std::int64_t len = e.length();
      auto it = std::lower_bound(half.begin(), half.end(), len);
      const bool known = it != half.end() && *it == len;
      if (!known) foreign = true;
      if (!inside(e.u) || !inside(e.v)) continue;
      ++deg[at(e.u)];
      ++deg[at(e.v)];
      if (!known) continue;
      const std::size_t slot =
          at(e.low()) * half.size() + static_cast<std::size_t>(it - half.begin());
      if (owner[slot] == -1) {
        owner[slot] = static_cast<int>(j);
      } else if (owner[slot] != static_cast<int>(j)) {
        overlap = true;
      }
    }
    for (std::size_t i = 0; i < width; ++i) {
      if (deg[i] > 2) degree = true;
    }
    if (core_lo <= core_hi) {
      const std::size_t root = components.find(wide_at(core_lo));
      for (Vertex v = core_lo; v <= core_hi; ++v) {
        if (deg[at(v)] != 2) degree = true;
        if (components.find(wide_at(v)) != root) disconnected = true;
      }
    }
  }

  for (std::size_t di = 0; di < half.size(); ++di) {
    const std::int64_t d = half[di];
    for (Vertex x = core_lo; x + d <= core_hi; ++x) {
      if (owner[at(x) * half.size() + di] == -1) uncovered = true;
    }
  }

  WindowReport report;
  auto add = [&](bool flag, WindowFailure f) {
    if (flag) report.failures.push_back(f);
  };
  add(degree, WindowFailure::DegreeMismatch);
  add(cycle, WindowFailure::Cycle);
  add(disconnected, WindowFailure::Disconnected);
  add(overlap, WindowFailure::EdgeOverlap);
  add(uncovered, WindowFailure::EdgeUncovered);
  add(foreign, WindowFailure::ForeignEdge);
  report.accepted = report.failures.empty();
  return report;
}

/// True when the exact verifier and the window oracle reach the same verdict.
inline bool cross_validate(const DecompositionCertificate& c, int periods) {
  return verify_certificate(c).accepted == window_oracle(c, periods).accepted;
}

}  // namespace hamdec
