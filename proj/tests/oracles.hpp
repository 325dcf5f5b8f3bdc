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

// Independent reference implementations used only by the tests, plus the
// certificate corpus shared by the unit and acceptance suites.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "hamdec/hamdec.hpp"

namespace oracle {

using hamdec::DecompositionCertificate;

/// Sorted circular lengths of a vertex order of Z_k, as a map key.
inline std::vector<int> length_key(const std::vector<int>& perm, int k) {
  std::vector<int> key;
  for (std::size_t i = 0; i + 1 < perm.size(); ++i) {
    const int d = std::abs(perm[i] - perm[i + 1]);
    key.push_back(std::min(d, k - d));
  }
  std::sort(key.begin(), key.end());
  return key;
}

/// Every length multiset realized by some Hamilton path of K_k, with the
/// lexicographically least realizing vertex order. Plain enumeration of all
/// k! orders.
inline std::map<std::vector<int>, std::vector<int>> realizable_multisets(int k) {
  std::map<std::vector<int>, std::vector<int>> out;
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    out.try_emplace(length_key(perm, k), perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Nondecreasing sequences of `size` values in [1, top], counted by recursion.
inline std::uint64_t count_sequences(int size, int top, int low = 1) {
  if (size == 0) return 1;
  std::uint64_t total = 0;
  for (int v = low; v <= top; ++v) total += count_sequences(size - 1, top, v);
  return total;
}

/// Parity and gcd conditions read straight off the definition.
inline bool admissible_by_definition(const std::vector<std::int64_t>& s) {
  std::int64_t g = 0;
  std::int64_t sum = 0;
  for (auto a : s) {
    g = std::gcd(g, a);
    sum += a;
  }
  return g == 1 && (sum - static_cast<std::int64_t>(s.size())) % 2 == 0;
}

/// Hamilton path of K_k with prescribed lengths, via brute force over the
/// orders starting at 0; empty when there is none.
inline std::vector<int> brute_force_path(int k, std::vector<int> lengths) {
  std::sort(lengths.begin(), lengths.end());
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (length_key(perm, k) == lengths) return perm;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return {};
}

/// Generators a_i = i + k*m_i with m_i in [0, max_lift], adjusted for parity.
inline std::vector<std::int64_t> random_walecki_generators(std::int64_t k, std::mt19937_64& rng,
                                                           std::int64_t max_lift = 3) {
  std::uniform_int_distribution<std::int64_t> lift(0, max_lift);
  std::vector<std::int64_t> a;
  for (std::int64_t i = 1; i < k; ++i) a.push_back(i + k * lift(rng));
  std::int64_t sum = k;
  for (auto x : a) sum += x;
  // |S+| = k is odd, so the sum must be odd; shifting a_1 by the odd k flips it.
  if (sum % 2 == 0) a[0] = a[0] >= k ? a[0] - k : a[0] + k;
  return a;
}

struct Labeled {
  std::string name;
  DecompositionCertificate cert;
};

/// Valid certificates from every family at small parameters.
inline std::vector<Labeled> valid_corpus() {
  std::vector<Labeled> out;
  auto add = [&](std::string name, DecompositionCertificate c) {
    out.push_back({std::move(name), std::move(c)});
  };
  add("trivial", hamdec::trivial_certificate());
  for (std::int64_t b = 2; b <= 32; ++b) {
    for (std::int64_t a = 1; a < b; ++a) {
      if (!hamdec::is_admissible(hamdec::ConnectionSet{a, b})) continue;
      add("4v " + std::to_string(a) + "," + std::to_string(b), hamdec::construct_4valent(a, b));
    }
  }
  for (std::int64_t k = 4; k <= 25; ++k) {
    if (k % 4 <= 1) add("consecutive " + std::to_string(k), hamdec::construct_consecutive(k));
  }
  for (std::int64_t k = 2; k <= 26; ++k) {
    if (k % 4 >= 2) add("skip-k " + std::to_string(k), hamdec::construct_skip_k(k));
  }
  for (std::int64_t t = 2; t <= 24; t += 2) {
    add("even-run " + std::to_string(t), hamdec::construct_even_run(t));
  }
  for (std::int64_t c = 4; c <= 60; c += 2) {
    add("one-two-c " + std::to_string(c), hamdec::construct_one_two_c(c));
  }
  std::mt19937_64 rng(2026);
  for (std::int64_t k = 3; k <= 13; k += 2) {
    for (int rep = 0; rep < 6; ++rep) {
      add("walecki " + std::to_string(k),
          hamdec::construct_walecki_family(k, random_walecki_generators(k, rng, 1)));
    }
  }
  return out;
}

/// Random local damage to a certificate; the starter keeps n + 1 vertices
/// and max(S+) never grows.
inline DecompositionCertificate mutate(const DecompositionCertificate& c, std::mt19937_64& rng) {
  const std::int64_t n = c.period();
  std::vector<hamdec::Vertex> starter(c.starter().begin(), c.starter().end());
  std::vector<std::int64_t> offsets(c.offsets().begin(), c.offsets().end());
  const auto half = c.connection_set().positive_half();
  std::vector<std::int64_t> s(half.begin(), half.end());
  auto pick = [&](std::size_t size) {
    return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
  };
  auto delta = [&] {
    std::int64_t d = 0;
    while (d == 0) d = std::uniform_int_distribution<std::int64_t>(-2 * n - 2, 2 * n + 2)(rng);
    return d;
  };

  switch (std::uniform_int_distribution<int>(0, 7)(rng)) {
    case 0:  // swap two starter vertices
      std::swap(starter[pick(starter.size())], starter[pick(starter.size())]);
      break;
    case 1:  // move one vertex
      starter[pick(starter.size())] += delta();
      break;
    case 2:  // move the last vertex by a small amount
      starter.back() += delta() % 3 == 0 ? 1 : -1;
      break;
    case 3:  // move one offset
      offsets[pick(offsets.size())] += delta();
      break;
    case 4:  // duplicate an offset
      offsets[pick(offsets.size())] = offsets[pick(offsets.size())];
      break;
    case 5:  // drop or add an offset
      if (offsets.size() > 1 && rng() % 2 == 0) {
        offsets.erase(offsets.begin() + static_cast<std::ptrdiff_t>(pick(offsets.size())));
      } else {
        offsets.push_back(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n)));
      }
      break;
    case 6:  // drop a generator other than the largest
      if (s.size() > 1) {
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(pick(s.size() - 1)));
      } else {
        starter[pick(starter.size())] += delta();
      }
      break;
    default:  // add a generator below the largest
      for (std::int64_t g = 1; g < s.back(); ++g) {
        if (!std::binary_search(s.begin(), s.end(), g)) {
          s.push_back(g);
          break;
        }
      }
      if (s.size() == half.size()) std::reverse(starter.begin() + 1, starter.end() - 1);
      break;
  }
  return DecompositionCertificate(hamdec::ConnectionSet(s), n, std::move(starter),
                                  std::move(offsets));
}

}  // namespace oracle
