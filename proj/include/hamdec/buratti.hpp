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
 * @brief Hamilton paths in the complete graph on Z_k with prescribed
 *        edge lengths, and sweeps over all length multisets.
 *
 * The length of {u, v} in Z_k is the circular distance min(|u-v|, k-|u-v|).
 * A multiset L of k-1 lengths from {1, ..., floor(k/2)} is realizable when
 * some Hamilton path of K_k has exactly those lengths. For prime k this is
 * Buratti's conjecture; for k = 9 four multisets are known to fail.
 *
 * Search is depth-first over vertex sequences starting at 0, children in
 * increasing vertex order, so the first witness found is the
 * lexicographically least one. Negation x -> -x lets the second vertex be
 * restricted to [1, k/2] without losing that witness.
 */
#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "hamdec/error.hpp"

namespace hamdec {

inline constexpr int kMaxSearchModulus = 64;

constexpr int circular_length(int u, int v, int k) {
  int d = u > v ? u - v : v - u;
  d %= k;
  return d <= k - d ? d : k - d;
}

/// Multiset of k-1 circular lengths in Z_k, stored sorted.
class LengthMultiset {
 public:
  LengthMultiset(int modulus, std::vector<int> lengths)
      : modulus_(modulus), lengths_(std::move(lengths)) {
    if (modulus_ < 2 || modulus_ > kMaxSearchModulus) {
      throw Error(ErrorKind::InvalidArgument,
                  "modulus must lie in [2, " + std::to_string(kMaxSearchModulus) +
                      "], got " + std::to_string(modulus_));
    }
    if (lengths_.size() != static_cast<std::size_t>(modulus_ - 1)) {
      throw Error(ErrorKind::BadMultisetSize,
                  "expected " + std::to_string(modulus_ - 1) + " lengths, got " +
                      std::to_string(lengths_.size()));
    }
    for (int len : lengths_) {
      if (len < 1 || len > modulus_ / 2) {
        throw Error(ErrorKind::InvalidLength,
                    "length " + std::to_string(len) + " not in [1, " +
                        std::to_string(modulus_ / 2) + "]");
      }
    }
    std::sort(lengths_.begin(), lengths_.end());
  }

  static LengthMultiset from_counts(int modulus, std::span<const int> counts) {
    std::vector<int> lengths;
    for (std::size_t len = 1; len < counts.size(); ++len) {
      lengths.insert(lengths.end(), static_cast<std::size_t>(counts[len]),
                     static_cast<int>(len));
    }
    return LengthMultiset(modulus, std::move(lengths));
  }

  int modulus() const { return modulus_; }
  std::span<const int> lengths() const { return lengths_; }

  /// counts()[len] for len in 0..k/2; entry 0 is always 0.
  std::vector<int> counts() const {
    std::vector<int> out(static_cast<std::size_t>(modulus_ / 2 + 1), 0);
    for (int len : lengths_) ++out[static_cast<std::size_t>(len)];
    return out;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < lengths_.size(); ++i) {
      if (i != 0) out += ',';
      out += std::to_string(lengths_[i]);
    }
    return out;
  }

  bool operator==(const LengthMultiset&) const = default;

 private:
  int modulus_;
  std::vector<int> lengths_;
};

/// Circular lengths along a vertex sequence in Z_k.
inline std::vector<int> circular_lengths(std::span<const int> path, int k) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    out.push_back(circular_length(path[i], path[i + 1], k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// True when path visits every residue of Z_k once with lengths exactly L.
inline bool is_realization(std::span<const int> path, const LengthMultiset& L) {
  const int k = L.modulus();
  if (path.size() != static_cast<std::size_t>(k)) return false;
  std::vector<bool> seen(static_cast<std::size_t>(k), false);
  for (int v : path) {
    if (v < 0 || v >= k || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  const auto lengths = circular_lengths(path, k);
  return std::equal(lengths.begin(), lengths.end(), L.lengths().begin(),
                    L.lengths().end());
}

enum class SearchStatus { Found, Exhausted, Aborted };

constexpr std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "Found";
    case SearchStatus::Exhausted: return "Exhausted";
    case SearchStatus::Aborted: return "Aborted";
  }
  return "Unknown";
}

struct SearchOutcome {
  SearchStatus status = SearchStatus::Exhausted;
  std::vector<int> path;  // empty unless Found
  std::uint64_t nodes_expanded = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct SearchOptions {
  /// Fix the start at 0 and the second vertex to [1, k/2]. Off: try every
  /// start and every second vertex.
  bool symmetry_reduction = true;
  /// Worker threads splitting on the first edge. Status, witness and node
  /// count do not depend on this value (unless node_limit is set).
  unsigned jobs = 1;
  /// Stop with Aborted after this many nodes; 0 means unlimited.
  std::uint64_t node_limit = 0;
};

namespace detail {

class PathSearch {
 public:
  PathSearch(int k, std::vector<int> remaining, std::uint64_t node_limit,
             std::atomic<std::uint64_t>* shared_nodes,
             const std::atomic<std::size_t>* best, std::size_t branch)
      : k_(k),
        remaining_(std::move(remaining)),
        node_limit_(node_limit),
        shared_nodes_(shared_nodes),
        best_(best),
        branch_(branch) {}

  /// Extend the path [start, second]; the first edge is already consumed.
  bool run(int start, int second) {
    path_ = {start, second};
    visited_ = (std::uint64_t{1} << start) | (std::uint64_t{1} << second);
    return extend(second);
  }

  const std::vector<int>& path() const { return path_; }
  std::uint64_t nodes() const { return nodes_; }
  bool aborted() const { return aborted_; }
  bool cancelled() const { return cancelled_; }

 private:
  bool extend(int v) {
    ++nodes_;
    if (node_limit_ != 0 && shared_nodes_->fetch_add(1) + 1 > node_limit_) {
      aborted_ = true;
      return false;
    }
    if (best_ != nullptr && (nodes_ & 0x3ff) == 0 &&
        best_->load(std::memory_order_relaxed) < branch_) {
      cancelled_ = true;
      return false;
    }
    if (path_.size() == static_cast<std::size_t>(k_)) return true;
    for (int u = 0; u < k_; ++u) {
      if ((visited_ >> u) & 1U) continue;
      const auto len = static_cast<std::size_t>(circular_length(v, u, k_));
      if (remaining_[len] == 0) continue;
      --remaining_[len];
      visited_ |= std::uint64_t{1} << u;
      path_.push_back(u);
      if (extend(u)) return true;
      if (aborted_ || cancelled_) return false;
      path_.pop_back();
      visited_ &= ~(std::uint64_t{1} << u);
      ++remaining_[len];
    }
    return false;
  }

  int k_;
  std::vector<int> remaining_;
  std::uint64_t node_limit_;
  std::atomic<std::uint64_t>* shared_nodes_;
  const std::atomic<std::size_t>* best_;
  std::size_t branch_;
  std::vector<int> path_;
  std::uint64_t visited_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  bool cancelled_ = false;
};

struct Branch {
  int start;
  int second;
};

struct BranchResult {
  bool found = false;
  bool aborted = false;
  bool ran = false;
  std::uint64_t nodes = 0;
  std::vector<int> path;
};

}  // namespace detail

/**
 * Searches for the lexicographically least Hamilton path of K_k realizing L.
 *
 * The search space is split into branches by the first edge (start, second),
 * enumerated in lexicographic order. nodes_expanded counts one node per
 * start vertex entered plus every node of each branch up to and including
 * the one holding the witness, so serial and parallel runs agree.
 */
inline SearchOutcome find_path(const LengthMultiset& L, SearchOptions options = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  const int k = L.modulus();
  const std::vector<int> counts = L.counts();

  std::vector<detail::Branch> branches;
  const int starts = options.symmetry_reduction ? 1 : k;
  for (int s = 0; s < starts; ++s) {
    for (int u = 0; u < k; ++u) {
      if (u == s) continue;
      if (options.symmetry_reduction && 2 * u > k) continue;
      if (counts[static_cast<std::size_t>(circular_length(s, u, k))] == 0) continue;
      branches.push_back({s, u});
    }
  }

  std::vector<detail::BranchResult> results(branches.size());
  std::atomic<std::uint64_t> shared_nodes{0};
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> best{kNone};

  auto run_branch = [&](std::size_t b, bool cancellable) {
    auto remaining = counts;
    const auto [s, u] = branches[b];
    --remaining[static_cast<std::size_t>(circular_length(s, u, k))];
    detail::PathSearch search(k, std::move(remaining), options.node_limit,
                              &shared_nodes, cancellable ? &best : nullptr, b);
    auto& r = results[b];
    r.ran = true;
    r.found = search.run(s, u);
    r.aborted = search.aborted();
    r.nodes = search.nodes();
    if (r.found) {
      r.path = search.path();
      std::size_t cur = best.load();
      while (b < cur && !best.compare_exchange_weak(cur, b)) {
      }
    }
  };

  const unsigned jobs = std::max(1U, options.jobs);
  if (jobs == 1 || branches.size() <= 1) {
    for (std::size_t b = 0; b < branches.size(); ++b) {
      run_branch(b, false);
      if (results[b].found || results[b].aborted) break;
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    const unsigned n = std::min<unsigned>(jobs, static_cast<unsigned>(branches.size()));
    for (unsigned w = 0; w < n; ++w) {
      workers.emplace_back([&] {
        for (std::size_t b = next.fetch_add(1); b < branches.size();
             b = next.fetch_add(1)) {
          if (best.load() < b) continue;
          run_branch(b, true);
        }
      });
    }
    for (auto& t : workers) t.join();
  }

  SearchOutcome out;
  std::size_t last = branches.size();
  for (std::size_t b = 0; b < branches.size(); ++b) {
    if (results[b].found || results[b].aborted) {
      last = b + 1;
      if (results[b].found) {
        out.status = SearchStatus::Found;
        out.path = results[b].path;
      } else {
        out.status = SearchStatus::Aborted;
      }
      break;
    }
  }
  int entered = -1;
  for (std::size_t b = 0; b < last; ++b) {
    out.nodes_expanded += results[b].nodes;
    if (branches[b].start != entered) {
      entered = branches[b].start;
      ++out.nodes_expanded;
    }
  }
  if (branches.empty()) out.nodes_expanded = static_cast<std::uint64_t>(starts);
  out.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - t0);
  return out;
}

constexpr bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

/// Number of multisets of size k-1 drawn from {1, ..., floor(k/2)}.
inline std::uint64_t multiset_count(int k) {
  const std::uint64_t types = static_cast<std::uint64_t>(k / 2);
  const std::uint64_t size = static_cast<std::uint64_t>(k - 1);
  // C(size + types - 1, types - 1), computed incrementally.
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i < types; ++i) {
    result = result * (size + i) / i;
  }
  return result;
}

/// Advances a nondecreasing sequence over {1, ..., top}; false past the end.
inline bool next_multiset(std::vector<int>& lengths, int top) {
  for (std::size_t i = lengths.size(); i-- > 0;) {
    if (lengths[i] < top) {
      const int v = lengths[i] + 1;
      std::fill(lengths.begin() + static_cast<std::ptrdiff_t>(i), lengths.end(), v);
      return true;
    }
  }
  return false;
}

/// All length multisets for Z_k in lexicographic order.
inline std::vector<LengthMultiset> enumerate_multisets(int k) {
  std::vector<LengthMultiset> out;
  std::vector<int> current(static_cast<std::size_t>(k - 1), 1);
  do {
    out.emplace_back(k, current);
  } while (next_multiset(current, k / 2));
  return out;
}

/// Uniform draws over multisets (with replacement) from a seeded generator.
inline std::vector<LengthMultiset> sample_multisets(int k, std::size_t count,
                                                    std::uint64_t seed) {
  const int types = k / 2;
  const int size = k - 1;
  std::mt19937_64 rng(seed);
  std::vector<int> slots(static_cast<std::size_t>(size + types - 1));
  std::iota(slots.begin(), slots.end(), 0);
  std::vector<LengthMultiset> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    // Stars and bars: bar positions split `size` stars into `types` groups.
    std::vector<int> bars;
    std::sample(slots.begin(), slots.end(), std::back_inserter(bars), types - 1, rng);
    std::vector<int> counts(static_cast<std::size_t>(types + 1), 0);
    int prev = -1;
    for (int t = 0; t < types - 1; ++t) {
      counts[static_cast<std::size_t>(t + 1)] = bars[static_cast<std::size_t>(t)] - prev - 1;
      prev = bars[static_cast<std::size_t>(t)];
    }
    counts[static_cast<std::size_t>(types)] = size + types - 1 - prev - 1;
    out.push_back(LengthMultiset::from_counts(k, counts));
  }
  return out;
}

struct SweepOptions {
  unsigned jobs = 1;
  std::size_t sample = 0;  // 0: every multiset
  std::uint64_t seed = 1;
  std::uint64_t node_limit = 0;
};

struct SweepRecord {
  LengthMultiset multiset;
  SearchOutcome outcome;
};

struct SweepReport {
  int modulus = 0;
  bool sampled = false;
  std::vector<SweepRecord> records;

  std::size_t count(SearchStatus status) const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(),
                      [status](const SweepRecord& r) { return r.outcome.status == status; }));
  }
  std::size_t failures() const { return count(SearchStatus::Exhausted); }
};

/// Runs find_path on each multiset; records keep input order.
inline SweepReport sweep_multisets(int k, std::vector<LengthMultiset> multisets,
                                   const SweepOptions& options) {
  std::vector<SearchOutcome> outcomes(multisets.size());
  SearchOptions search;
  search.node_limit = options.node_limit;
  const unsigned jobs = std::max(1U, options.jobs);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < multisets.size(); i = next.fetch_add(1)) {
      outcomes[i] = find_path(multisets[i], search);
    }
  };
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) workers.emplace_back(work);
    for (auto& t : workers) t.join();
  }
  SweepReport report;
  report.modulus = k;
  report.records.reserve(multisets.size());
  for (std::size_t i = 0; i < multisets.size(); ++i) {
    report.records.push_back({std::move(multisets[i]), std::move(outcomes[i])});
  }
  return report;
}

/// Sweep over Z_k for any k >= 2 (prime or not).
inline SweepReport sweep_modulus(int k, const SweepOptions& options = {}) {
  auto multisets = options.sample == 0 ? enumerate_multisets(k)
                                       : sample_multisets(k, options.sample, options.seed);
  auto report = sweep_multisets(k, std::move(multisets), options);
  report.sampled = options.sample != 0;
  return report;
}

/// Sweep for an odd prime p; throws NotPrime otherwise.
inline SweepReport sweep(int p, const SweepOptions& options = {}) {
  if (p < 3 || !is_prime(p)) {
    throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not an odd prime");
  }
  return sweep_modulus(p, options);
}

}  // namespace hamdec
