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
 * @brief Value types for infinite circulant graphs Cay(Z, S).
 *
 * A connection set is stored by its positive half. Walks are written as a
 * start vertex plus signed steps, and a DecompositionCertificate is the
 * finite data (S, period n, starter path P, offsets) describing the family
 * of two-way-infinite paths H_j = U_i (P + n*i) + offsets[j].
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hamdec/error.hpp"

namespace hamdec {

using Vertex = std::int64_t;

/// Edge length -> number of edges with that length.
using LengthCounts = std::map<std::int64_t, std::size_t>;

/// Upper bound on certificate periods; starters are materialized in memory.
inline constexpr std::int64_t kMaxPeriod = std::int64_t{1} << 24;

namespace detail {

inline std::string join(std::span<const std::int64_t> values,
                        std::string_view sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) os << sep;
    os << values[i];
  }
  return os.str();
}

}  // namespace detail

/// Finite inverse-closed generator set, held as its sorted positive half.
class ConnectionSet {
 public:
  ConnectionSet() = default;

  /// Accepts generators in any order; rejects non-positive or repeated values.
  explicit ConnectionSet(std::vector<std::int64_t> generators)
      : s_plus_(std::move(generators)) {
    std::sort(s_plus_.begin(), s_plus_.end());
    if (!s_plus_.empty() && s_plus_.front() < 1) {
      throw Error(ErrorKind::InvalidConnectionSet,
                  "generators must be positive integers");
    }
    if (std::adjacent_find(s_plus_.begin(), s_plus_.end()) != s_plus_.end()) {
      throw Error(ErrorKind::InvalidConnectionSet, "repeated generator");
    }
  }

  ConnectionSet(std::initializer_list<std::int64_t> generators)
      : ConnectionSet(std::vector<std::int64_t>(generators)) {}

  std::span<const std::int64_t> positive_half() const { return s_plus_; }
  std::size_t size() const { return s_plus_.size(); }
  bool empty() const { return s_plus_.empty(); }
  std::size_t valency() const { return 2 * s_plus_.size(); }

  std::int64_t max() const {
    if (s_plus_.empty()) {
      throw Error(ErrorKind::EmptyConnectionSet, "empty connection set");
    }
    return s_plus_.back();
  }

  bool contains(std::int64_t length) const {
    return std::binary_search(s_plus_.begin(), s_plus_.end(), length);
  }

  std::string to_string() const { return "{" + detail::join(s_plus_) + "}"; }

  bool operator==(const ConnectionSet&) const = default;

 private:
  std::vector<std::int64_t> s_plus_;
};

/// A path [v_1, ..., v_m] of distinct integers. Equality is exact sequence
/// equality; use canonical() for the orientation-free view.
class FinitePath {
 public:
  FinitePath() : vertices_{0} {}

  explicit FinitePath(std::vector<Vertex> vertices)
      : vertices_(std::move(vertices)) {
    if (vertices_.empty()) {
      throw Error(ErrorKind::InvalidArgument, "a path needs at least one vertex");
    }
    std::vector<Vertex> sorted = vertices_;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
      throw Error(ErrorKind::RepeatedVertex,
                  "vertex " + std::to_string(*dup) + " repeats");
    }
  }

  FinitePath(std::initializer_list<Vertex> vertices)
      : FinitePath(std::vector<Vertex>(vertices)) {}

  std::span<const Vertex> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  std::size_t edge_count() const { return vertices_.size() - 1; }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }

  FinitePath translated(Vertex t) const {
    std::vector<Vertex> out;
    out.reserve(vertices_.size());
    for (Vertex v : vertices_) out.push_back(checked_add(v, t));
    return FinitePath(std::move(out), Unchecked{});
  }

  FinitePath reversed() const {
    return FinitePath(std::vector<Vertex>(vertices_.rbegin(), vertices_.rend()),
                      Unchecked{});
  }

  /// Oriented so that the first vertex is <= the last.
  FinitePath canonical() const {
    return front() <= back() ? *this : reversed();
  }

  LengthCounts edge_lengths() const {
    LengthCounts counts;
    for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
      ++counts[length(vertices_[i], vertices_[i + 1])];
    }
    return counts;
  }

  static std::int64_t length(Vertex u, Vertex v) {
    std::int64_t d = checked_sub(u, v);
    return d < 0 ? checked_sub(0, d) : d;
  }

  std::string to_string() const { return "[" + detail::join(vertices_) + "]"; }

  bool operator==(const FinitePath&) const = default;

 private:
  struct Unchecked {};
  FinitePath(std::vector<Vertex> vertices, Unchecked)
      : vertices_(std::move(vertices)) {}

  std::vector<Vertex> vertices_;
};

inline FinitePath translate(const FinitePath& p, Vertex t) {
  return p.translated(t);
}

inline LengthCounts edge_length_multiset(const FinitePath& p) {
  return p.edge_lengths();
}

/// The walk Omega_a(z_1, ..., z_t): start at a, the i-th step adds z_i.
struct OmegaWalk {
  Vertex start = 0;
  std::vector<Vertex> steps;

  std::vector<Vertex> vertex_sequence() const {
    std::vector<Vertex> out;
    out.reserve(steps.size() + 1);
    out.push_back(start);
    for (Vertex z : steps) out.push_back(checked_add(out.back(), z));
    return out;
  }

  bool operator==(const OmegaWalk&) const = default;
};

/// Throws RepeatedVertex if the walk is not a path.
inline FinitePath realize(const OmegaWalk& walk) {
  return FinitePath(walk.vertex_sequence());
}

/**
 * Finite witness of a Hamilton decomposition of Cay(Z, S).
 *
 * Construction normalizes the data to a translate of the same decomposition:
 * a starter running from x to x - n is reversed (same periodic path), the
 * starter is shifted so its first vertex is 0, offsets are reduced mod n,
 * sorted, and shifted so the smallest is 0. Duplicated offsets are kept so
 * that the verifier can report them. The starter is held as a raw vertex
 * sequence; whether it is actually a path is the verifier's question.
 */
class DecompositionCertificate {
 public:
  DecompositionCertificate(ConnectionSet connection_set, std::int64_t period,
                           std::vector<Vertex> starter,
                           std::vector<std::int64_t> offsets)
      : connection_set_(std::move(connection_set)),
        period_(period),
        starter_(std::move(starter)),
        offsets_(std::move(offsets)) {
    if (connection_set_.empty()) {
      throw Error(ErrorKind::EmptyConnectionSet,
                  "certificate needs a nonempty connection set");
    }
    if (period_ < 1 || period_ > kMaxPeriod) {
      throw Error(ErrorKind::InvalidCertificate,
                  "period " + std::to_string(period_) + " out of range");
    }
    if (starter_.size() != static_cast<std::size_t>(period_) + 1) {
      throw Error(ErrorKind::InvalidCertificate,
                  "starter has " + std::to_string(starter_.size()) +
                      " vertices, expected period + 1 = " +
                      std::to_string(period_ + 1));
    }
    if (offsets_.empty()) {
      throw Error(ErrorKind::InvalidCertificate, "no offsets");
    }
    if (checked_sub(starter_.back(), starter_.front()) == -period_) {
      std::reverse(starter_.begin(), starter_.end());
    }
    const Vertex shift = starter_.front();
    for (Vertex& v : starter_) v = checked_sub(v, shift);
    for (auto& o : offsets_) o = floor_mod(o, period_);
    std::sort(offsets_.begin(), offsets_.end());
    const std::int64_t base = offsets_.front();
    for (auto& o : offsets_) o -= base;
  }

  const ConnectionSet& connection_set() const { return connection_set_; }
  std::int64_t period() const { return period_; }
  std::span<const Vertex> starter() const { return starter_; }
  std::span<const std::int64_t> offsets() const { return offsets_; }

  /// Throws RepeatedVertex when the starter is not a path.
  FinitePath starter_path() const { return FinitePath(starter_); }

  bool operator==(const DecompositionCertificate&) const = default;

 private:
  ConnectionSet connection_set_;
  std::int64_t period_;
  std::vector<Vertex> starter_;
  std::vector<std::int64_t> offsets_;
};

inline DecompositionCertificate trivial_certificate() {
  return DecompositionCertificate(ConnectionSet{1}, 1, {0, 1}, {0});
}

}  // namespace hamdec
