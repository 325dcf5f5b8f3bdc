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
 * @brief Explicit Hamilton decompositions of admissible Cay(Z, S).
 *
 * Each constructor builds a starter path P from Omega-walk segments and
 * returns a certificate whose translates form the decomposition. Every
 * certificate is run through verify_certificate() before it is returned;
 * a rejected certificate is reported as ConstructionFailed.
 *
 * Families:
 *   - S+ = {a, b}, a < b odd and coprime: period 2b, offsets {0, b}.
 *   - S+ = {a_1, ..., a_{k-1}, k}, k odd, lifted from a Hamilton path of
 *     K_k whose circular lengths match the a_i: period 2k, offsets
 *     {0, 2, ..., 2k-2}. The Walecki zigzag handles a_i = i (mod k).
 *   - S+ = {1, ..., k}, k = 0, 1 (mod 4).
 *   - S+ = {1, ..., k-1, k+1}, k = 2, 3 (mod 4): period k.
 *   - S+ = {1, 2, 4, ..., 2t}, t even: period t+1.
 *   - S+ = {1, 2, 2t}: period 3t, offsets {0, t, 2t}.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hamdec/admissibility.hpp"
#include "hamdec/buratti.hpp"
#include "hamdec/core.hpp"
#include "hamdec/verifier.hpp"

namespace hamdec {

namespace detail {

/// Concatenates walk segments; each segment must start where the path ends.
class PathBuilder {
 public:
  explicit PathBuilder(Vertex start) : vertices_{start} {}

  PathBuilder& omega(Vertex from, std::span<const Vertex> steps) {
    expect_at(from);
    for (Vertex z : steps) vertices_.push_back(checked_add(vertices_.back(), z));
    return *this;
  }

  PathBuilder& omega(Vertex from, std::initializer_list<Vertex> steps) {
    return omega(from, std::span<const Vertex>(steps.begin(), steps.size()));
  }

  /// Repeats a single step `count` times.
  PathBuilder& repeat(Vertex from, Vertex step, std::int64_t count) {
    expect_at(from);
    for (std::int64_t i = 0; i < count; ++i) {
      vertices_.push_back(checked_add(vertices_.back(), step));
    }
    return *this;
  }

  Vertex back() const { return vertices_.back(); }
  std::vector<Vertex> take() && { return std::move(vertices_); }

 private:
  void expect_at(Vertex v) const {
    if (v != vertices_.back()) {
      throw Error(ErrorKind::ConstructionFailed,
                  "segment starts at " + std::to_string(v) + " but the path ends at " +
                      std::to_string(vertices_.back()));
    }
  }

  std::vector<Vertex> vertices_;
};

inline DecompositionCertificate self_verified(DecompositionCertificate c,
                                              std::string_view family) {
  const auto report = verify_certificate(c);
  if (!report.accepted) {
    std::string why;
    for (Failure f : report.failures) {
      if (!why.empty()) why += ", ";
      why += to_string(f);
    }
    throw Error(ErrorKind::ConstructionFailed,
                std::string(family) + " produced a rejected certificate (" + why + ")");
  }
  return c;
}

inline std::vector<std::int64_t> stepped_offsets(std::int64_t count, std::int64_t step) {
  std::vector<std::int64_t> out;
  for (std::int64_t i = 0; i < count; ++i) out.push_back(checked_mul(i, step));
  return out;
}

inline void require_period(std::int64_t period) {
  if (period > kMaxPeriod) {
    throw Error(ErrorKind::ResourceLimit,
                "period " + std::to_string(period) + " exceeds " + std::to_string(kMaxPeriod));
  }
}

inline void require_admissible(const ConnectionSet& s) {
  const auto report = analyze(s);
  if (!report.admissible) {
    throw Error(ErrorKind::NotAdmissible, s.to_string() + ": " + report.reason());
  }
}

/// Alternating signs: +first, -(first - step), +(first - 2 step), ... for
/// `count` terms, starting with `sign`.
inline std::vector<Vertex> zigzag(std::int64_t first, std::int64_t step,
                                  std::int64_t count, int sign) {
  std::vector<Vertex> out;
  for (std::int64_t i = 0; i < count; ++i) {
    const std::int64_t magnitude = first - i * step;
    out.push_back(((i % 2 == 0) == (sign > 0)) ? magnitude : -magnitude);
  }
  return out;
}

}  // namespace detail

/// Parameters of the 4-valent construction for S+ = {a, b}.
struct FourValentParams {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t t = 0;  // b - a, even
  std::int64_t m = 0;  // a mod t, coprime to t
  /// alpha[i / 2] for i = 0, 2, ..., t: alpha_i = i*m mod t, and alpha_t = t.
  std::vector<std::int64_t> alpha;
};

inline FourValentParams four_valent_params(std::int64_t a, std::int64_t b) {
  if (a > b) std::swap(a, b);
  if (a < 1 || a == b) {
    throw Error(ErrorKind::InvalidArgument, "need distinct positive a, b");
  }
  detail::require_admissible(ConnectionSet{a, b});
  detail::require_period(checked_mul(2, b));
  FourValentParams p;
  p.a = a;
  p.b = b;
  p.t = b - a;
  p.m = a % p.t;
  for (std::int64_t i = 0; i < p.t; i += 2) {
    p.alpha.push_back(checked_mul(i, p.m) % p.t);
  }
  p.alpha.push_back(p.t);
  return p;
}

/**
 * S+ = {a, b}. The starter chains F_v = Omega_v(a, b) and B_v = Omega_v(a, -b):
 * for each even i < t, F_{alpha_i} then B-blocks at 2a + alpha_i + t,
 * 2a + alpha_i, ... down to t + alpha_{i+2}; finally F_t. Edge lengths
 * alternate a, b and the path runs from 0 to 2b.
 */
inline DecompositionCertificate construct_4valent(std::int64_t a, std::int64_t b) {
  const FourValentParams p = four_valent_params(a, b);
  const std::int64_t t = p.t;
  detail::PathBuilder path(0);
  for (std::size_t i = 0; i + 1 < p.alpha.size(); ++i) {
    const std::int64_t alpha = p.alpha[i];
    const std::int64_t next = p.alpha[i + 1];
    path.omega(alpha, {p.a, p.b});
    const std::int64_t top = 2 * p.a + alpha + t;
    const std::int64_t bottom = t + next;
    if (top < bottom || (top - bottom) % t != 0) {
      throw Error(ErrorKind::ConstructionFailed, "B-chain does not descend to its bound");
    }
    for (std::int64_t v = top; v >= bottom; v -= t) path.omega(v, {p.a, -p.b});
  }
  path.omega(t, {p.a, p.b});
  return detail::self_verified(
      DecompositionCertificate(ConnectionSet{p.a, p.b}, 2 * p.b, std::move(path).take(),
                               {0, p.b}),
      "construct_4valent");
}

/// The zigzag [0, 1, k-1, 2, k-2, ..., (k-1)/2, (k+1)/2] in Z_k.
inline FinitePath walecki_path(std::int64_t k) {
  if (k < 3 || k % 2 == 0) {
    throw Error(ErrorKind::InvalidArgument, "Walecki path needs odd k >= 3");
  }
  std::vector<Vertex> q{0};
  for (std::int64_t j = 1; j <= (k - 1) / 2; ++j) {
    q.push_back(j);
    q.push_back(k - j);
  }
  return FinitePath(std::move(q));
}

/**
 * Signed steps b_i with {|b_i|} = {a_i} and b_i = q[i] - q[i-1] (mod k).
 * Candidates are tried by increasing magnitude, positive sign first, with
 * backtracking. Throws SignAssignmentFailure when none exists.
 */
inline std::vector<Vertex> assign_signs(std::int64_t k, std::span<const std::int64_t> a_list,
                                        std::span<const std::int64_t> q) {
  std::vector<std::int64_t> magnitudes(a_list.begin(), a_list.end());
  std::sort(magnitudes.begin(), magnitudes.end());
  const std::size_t steps = q.size() - 1;
  std::vector<bool> used(magnitudes.size(), false);
  std::vector<Vertex> signed_steps(steps, 0);

  auto solve = [&](auto&& self, std::size_t i) -> bool {
    if (i == steps) return true;
    const std::int64_t delta = floor_mod(q[i + 1] - q[i], k);
    for (std::size_t j = 0; j < magnitudes.size(); ++j) {
      if (used[j]) continue;
      const std::int64_t r = floor_mod(magnitudes[j], k);
      for (int sign : {+1, -1}) {
        if ((sign > 0 ? r : floor_mod(-r, k)) != delta) continue;
        used[j] = true;
        signed_steps[i] = sign * magnitudes[j];
        if (self(self, i + 1)) return true;
        used[j] = false;
      }
    }
    return false;
  };
  if (steps != magnitudes.size() || !solve(solve, 0)) {
    throw Error(ErrorKind::SignAssignmentFailure,
                "no signed assignment of the generators follows the path");
  }
  return signed_steps;
}

/**
 * Lifts a Hamilton path q of K_k (k odd) to a decomposition of
 * Cay(Z, +-{a_1, ..., a_{k-1}, k}). With P_1 = Omega_0(b_1, ..., b_{k-1})
 * ending at Sigma, the starter is P_1, the edge {Sigma, Sigma + k}, then
 * P_1 + k walked backwards to k, then {k, 2k}.
 */
inline DecompositionCertificate construct_from_zk_path(std::int64_t k,
                                                       std::span<const std::int64_t> a_list,
                                                       std::span<const std::int64_t> q) {
  if (k < 3 || k % 2 == 0) {
    throw Error(ErrorKind::InvalidArgument, "k must be odd and >= 3");
  }
  detail::require_period(checked_mul(2, k));
  if (a_list.size() != static_cast<std::size_t>(k - 1)) {
    throw Error(ErrorKind::InvalidArgument, "need exactly k - 1 generators besides k");
  }
  for (std::int64_t a : a_list) {
    if (a > 0 && a % k == 0) {
      throw Error(ErrorKind::InvalidArgument,
                  "generator " + std::to_string(a) + " is divisible by k");
    }
  }
  std::vector<std::int64_t> generators(a_list.begin(), a_list.end());
  generators.push_back(k);
  const ConnectionSet s(generators);
  detail::require_admissible(s);

  if (q.size() != static_cast<std::size_t>(k)) {
    throw Error(ErrorKind::NotHamiltonPath, "path must visit all k residues");
  }
  std::vector<bool> seen(static_cast<std::size_t>(k), false);
  for (std::int64_t v : q) {
    if (v < 0 || v >= k || seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorKind::NotHamiltonPath,
                  "residue " + std::to_string(v) + " is repeated or out of range");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  std::vector<std::int64_t> path_lengths;
  std::vector<std::int64_t> wanted;
  for (std::size_t i = 0; i + 1 < q.size(); ++i) {
    const std::int64_t d = floor_mod(q[i + 1] - q[i], k);
    path_lengths.push_back(std::min(d, k - d));
  }
  for (std::int64_t a : a_list) {
    const std::int64_t r = floor_mod(a, k);
    wanted.push_back(std::min(r, k - r));
  }
  std::sort(path_lengths.begin(), path_lengths.end());
  std::sort(wanted.begin(), wanted.end());
  if (path_lengths != wanted) {
    throw Error(ErrorKind::LengthMultisetMismatch,
                "circular lengths of the path differ from those of the generators");
  }

  const std::vector<Vertex> steps = assign_signs(k, a_list, q);
  detail::PathBuilder p1(0);
  p1.omega(0, steps);
  const std::vector<Vertex> first = std::move(p1).take();
  const Vertex sigma = first.back();

  std::vector<Vertex> starter = first;
  for (auto it = first.rbegin(); it != first.rend(); ++it) {
    starter.push_back(checked_add(*it, k));
  }
  starter.push_back(2 * k);
  return detail::self_verified(
      DecompositionCertificate(s, 2 * k, std::move(starter), detail::stepped_offsets(k, 2)),
      "construct_from_zk_path (Sigma = " + std::to_string(sigma) + ")");
}

/// a_i = i (mod k) for i = 1..k-1, lifted along the Walecki path.
inline DecompositionCertificate construct_walecki_family(std::int64_t k,
                                                         std::span<const std::int64_t> a_list) {
  if (k < 3 || k % 2 == 0) {
    throw Error(ErrorKind::InvalidArgument, "k must be odd and >= 3");
  }
  if (a_list.size() != static_cast<std::size_t>(k - 1)) {
    throw Error(ErrorKind::InvalidArgument, "need exactly k - 1 generators besides k");
  }
  for (std::size_t i = 0; i < a_list.size(); ++i) {
    if (floor_mod(a_list[i], k) != static_cast<std::int64_t>(i + 1)) {
      throw Error(ErrorKind::CongruenceViolation,
                  "a_" + std::to_string(i + 1) + " = " + std::to_string(a_list[i]) +
                      " is not " + std::to_string(i + 1) + " mod " + std::to_string(k));
    }
  }
  const FinitePath q = walecki_path(k);
  return construct_from_zk_path(k, a_list, q.vertices());
}

/// S+ = {1, ..., k}; admissible exactly when k = 0, 1 (mod 4).
inline DecompositionCertificate construct_consecutive(std::int64_t k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  if (k % 4 == 2 || k % 4 == 3) {
    throw Error(ErrorKind::NotAdmissible,
                "{1.." + std::to_string(k) + "} needs k = 0, 1 (mod 4)");
  }
  detail::require_period(checked_mul(2, k));
  if (k == 1) return trivial_certificate();
  if (k % 4 == 1) {
    std::vector<std::int64_t> a(static_cast<std::size_t>(k - 1));
    std::iota(a.begin(), a.end(), std::int64_t{1});
    return construct_walecki_family(k, a);
  }

  // k = 0 (mod 4); k = 4 gives [0, -1, 1, 5, 2, 3, 6, 4, 8].
  const std::int64_t u = k / 2;
  const std::int64_t v = 3 * k / 2;
  detail::PathBuilder path(0);
  path.omega(0, {-1, 2});
  path.omega(1, detail::zigzag(k - 2, 1, k - 4, +1));
  path.omega(u - 1, {k, -(k - 1), 1, k - 1, -2});
  path.omega(v - 2, detail::zigzag(3, -1, k - 4, +1));
  path.omega(k, {k});

  std::vector<std::int64_t> s(static_cast<std::size_t>(k));
  std::iota(s.begin(), s.end(), std::int64_t{1});
  return detail::self_verified(
      DecompositionCertificate(ConnectionSet(s), 2 * k, std::move(path).take(),
                               detail::stepped_offsets(k, 2)),
      "construct_consecutive");
}

/// S+ = {1, ..., k-1, k+1}; admissible exactly when k = 2, 3 (mod 4).
inline DecompositionCertificate construct_skip_k(std::int64_t k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  if (k % 4 == 0 || k % 4 == 1) {
    throw Error(ErrorKind::NotAdmissible,
                "{1.." + std::to_string(k - 1) + "," + std::to_string(k + 1) +
                    "} needs k = 2, 3 (mod 4)");
  }
  detail::require_period(k);
  if (k == 2) return construct_4valent(1, 3);

  std::vector<Vertex> starter;
  if (k == 3) {
    starter = {0, 1, -1, 3};
  } else if (k % 4 == 2) {
    // k = 6 gives [0, 2, -3, -2, -5, -1, 6].
    const std::int64_t u = k / 2;
    detail::PathBuilder path(0);
    path.omega(0, {u - 1, -(k - 1)});
    path.omega(-u, detail::zigzag(2, -1, u - 3, -1));
    path.omega(-(u + 3) / 2, {1});
    path.omega(-(u + 1) / 2, detail::zigzag(u, -1, u - 1, -1));
    path.omega(-1, {k + 1});
    starter = std::move(path).take();
  } else {
    // k = 3 (mod 4), k >= 7.
    const std::int64_t v = (k + 1) / 4 * (k - 2);
    std::vector<Vertex> rising;
    std::vector<Vertex> falling;
    for (std::int64_t j = 0; j < (k - 3) / 4; ++j) {
      rising.push_back(k - 3 - 4 * j);
      rising.push_back(5 + 4 * j);
      falling.push_back(-(2 + 4 * j));
      falling.push_back(-(k - 4 - 4 * j));
    }
    detail::PathBuilder path(0);
    path.omega(0, {1});
    path.omega(1, rising);
    path.omega(v, {-(k - 1)});
    path.omega(v - k + 1, falling);
    path.omega(-1, {k + 1});
    starter = std::move(path).take();
  }

  std::vector<std::int64_t> s(static_cast<std::size_t>(k - 1));
  std::iota(s.begin(), s.end(), std::int64_t{1});
  s.push_back(k + 1);
  return detail::self_verified(DecompositionCertificate(ConnectionSet(s), k, std::move(starter),
                                                        detail::stepped_offsets(k, 1)),
                               "construct_skip_k");
}

/// S+ = {1, 2, 4, ..., 2t}; admissible exactly when t is even.
inline DecompositionCertificate construct_even_run(std::int64_t t) {
  if (t < 1) throw Error(ErrorKind::InvalidArgument, "t must be positive");
  if (t % 2 != 0) {
    throw Error(ErrorKind::NotAdmissible, "{1,2,4,..,2t} needs t even");
  }
  detail::require_period(checked_add(t, 1));
  if (t == 2) return construct_skip_k(3);

  // k = t + 1 is odd; t = 0 (mod 4) is the k = 1 (mod 4) case.
  const std::int64_t k = t + 1;
  detail::PathBuilder path(0);
  path.omega(0, {1});
  if (t % 4 == 0) {
    if (k % 4 != 1) throw Error(ErrorKind::ConstructionFailed, "t and k residues disagree");
    path.omega(1, detail::zigzag(t - 2, 2, (t - 4) / 2, +1));
    path.omega((t - 2) / 2, {2, t});
    path.omega((3 * t + 2) / 2, detail::zigzag(2 * t, 2, t / 2, -1));
  } else {
    if (k % 4 != 3) throw Error(ErrorKind::ConstructionFailed, "t and k residues disagree");
    path.omega(1, detail::zigzag(t - 2, 2, (t - 2) / 2, +1));
    path.omega(t / 2, {-t, 2 * t});
    path.omega(3 * t / 2, detail::zigzag(2 * t - 2, 2, (t - 2) / 2, -1));
  }

  std::vector<std::int64_t> s{1};
  for (std::int64_t i = 1; i <= t; ++i) s.push_back(2 * i);
  return detail::self_verified(DecompositionCertificate(ConnectionSet(s), k,
                                                        std::move(path).take(),
                                                        detail::stepped_offsets(k, 1)),
                               "construct_even_run");
}

/// S+ = {1, 2, c}; admissible exactly when c is even.
inline DecompositionCertificate construct_one_two_c(std::int64_t c) {
  if (c < 3) throw Error(ErrorKind::InvalidArgument, "c must be at least 3");
  if (c % 2 != 0) {
    throw Error(ErrorKind::NotAdmissible, "{1,2,c} needs c even");
  }
  const std::int64_t t = c / 2;
  detail::require_period(checked_mul(3, t));
  if (t == 2) return construct_skip_k(3);

  auto a_block = [t](detail::PathBuilder& p, Vertex v) { p.omega(v, {1, 2 * t, 1, -2 * t}); };
  auto b_block = [t](detail::PathBuilder& p, Vertex v) { p.omega(v, {2 * t, -2, -2 * t, -2}); };
  auto c_block = [t](detail::PathBuilder& p, Vertex v) { p.omega(v, {2 * t, 2, -2 * t, 2}); };
  // [0, 1, 2t+1, 2t+3, 3, 2, 2t+2, 2t, 2t-1, ..., t+5, t+3, t+4, t+2, t+1, t-1]
  auto head = [t](detail::PathBuilder& p) {
    p.omega(0, {1, 2 * t, 2, -2 * t, -1, 2 * t, -2});
    p.repeat(2 * t, -1, t - 5);
    p.omega(t + 5, {-2, 1, -2, -1, -2});
  };

  std::vector<Vertex> starter;
  if (t % 2 == 1) {
    detail::PathBuilder path(0);
    for (std::int64_t i = 0; i <= (t - 3) / 2; ++i) a_block(path, 2 * i);
    path.repeat(t - 1, 2, (t + 1) / 2);
    path.omega(2 * t, {-1});
    path.repeat(2 * t - 1, -2, (t - 1) / 2);
    path.omega(t, {2 * t});
    starter = std::move(path).take();
  } else if (t == 4) {
    starter = {0, 1, 9, 11, 3, 5, 6, 7, 8, 10, 2, 4, 12};
  } else if (t % 4 == 0) {
    detail::PathBuilder path(0);
    head(path);
    for (std::int64_t i = 0; i <= (t - 12) / 4; ++i) b_block(path, t - 1 - 4 * i);
    path.omega(7, {2 * t, -2, -2 * t, -1});
    for (std::int64_t i = 1; i <= (t - 4) / 4; ++i) c_block(path, 4 * i);
    path.omega(t, {2 * t});
    starter = std::move(path).take();
  } else {
    detail::PathBuilder path(0);
    head(path);
    for (std::int64_t i = 0; i <= (t - 10) / 4; ++i) b_block(path, t - 1 - 4 * i);
    path.omega(5, {2 * t, -1, -2 * t, 2});
    for (std::int64_t i = 1; i <= (t - 6) / 4; ++i) c_block(path, 4 * i + 2);
    path.omega(t, {2 * t});
    starter = std::move(path).take();
  }

  return detail::self_verified(DecompositionCertificate(ConnectionSet{1, 2, 2 * t}, 3 * t,
                                                        std::move(starter), {0, t, 2 * t}),
                               "construct_one_two_c");
}

/// A certificate plus where it came from.
struct Construction {
  DecompositionCertificate certificate;
  std::string family;
  std::string provenance;
};

struct DispatchOptions {
  /// Node budget for the length-constrained path search; 0 means unlimited.
  std::uint64_t search_node_limit = 50'000'000;
};

/// Families tried by construct(), in priority order.
inline constexpr std::string_view kFamilies[] = {
    "trivial",   "consecutive", "skip-k",  "even-run",
    "one-two-c", "four-valent", "walecki", "zk-lift-search",
};

/**
 * Matches S+ against the known families in the order of kFamilies and
 * returns the first certificate. Explicit formulas come before the
 * exponential path search. Throws NotAdmissible or Unsupported.
 */
inline Construction construct(const ConnectionSet& s, const DispatchOptions& options = {}) {
  if (s.empty()) throw Error(ErrorKind::EmptyConnectionSet, "empty connection set");
  detail::require_admissible(s);
  const auto half = s.positive_half();
  const auto k = static_cast<std::int64_t>(half.size());

  auto is_range = [&](std::int64_t count) {
    for (std::int64_t i = 0; i < count; ++i) {
      if (half[static_cast<std::size_t>(i)] != i + 1) return false;
    }
    return true;
  };

  if (k == 1 && half[0] == 1) {
    return {trivial_certificate(), "trivial", "trivial S+={1}"};
  }
  if (half.back() == k && is_range(k)) {
    return {construct_consecutive(k), "consecutive", "consecutive k=" + std::to_string(k)};
  }
  if (k >= 2 && half.back() == k + 1 && is_range(k - 1)) {
    return {construct_skip_k(k), "skip-k", "skip-k k=" + std::to_string(k)};
  }
  if (k >= 3 && half[0] == 1) {
    bool evens = true;
    for (std::int64_t i = 1; i < k; ++i) evens = evens && half[static_cast<std::size_t>(i)] == 2 * i;
    if (evens) {
      return {construct_even_run(k - 1), "even-run", "even-run t=" + std::to_string(k - 1)};
    }
  }
  if (k == 3 && half[0] == 1 && half[1] == 2) {
    return {construct_one_two_c(half[2]), "one-two-c", "one-two-c c=" + std::to_string(half[2])};
  }
  if (k == 2) {
    return {construct_4valent(half[0], half[1]), "four-valent",
            "four-valent a=" + std::to_string(half[0]) + " b=" + std::to_string(half[1])};
  }

  // Lift from Z_k: k odd, k in S+, no other generator divisible by k.
  if (k >= 3 && k % 2 == 1 && s.contains(k) && k <= kMaxSearchModulus) {
    std::vector<std::int64_t> others;
    bool divisible = false;
    for (std::int64_t a : half) {
      if (a == k) continue;
      if (a % k == 0) divisible = true;
      others.push_back(a);
    }
    if (!divisible) {
      std::vector<std::int64_t> by_residue(static_cast<std::size_t>(k), 0);
      bool walecki = true;
      for (std::int64_t a : others) {
        auto& slot = by_residue[static_cast<std::size_t>(a % k)];
        if (slot != 0) walecki = false;
        slot = a;
      }
      if (walecki) {
        std::vector<std::int64_t> a_list(by_residue.begin() + 1, by_residue.end());
        return {construct_walecki_family(k, a_list), "walecki",
                "walecki k=" + std::to_string(k) + " S+=" + s.to_string()};
      }
      std::vector<int> lengths;
      for (std::int64_t a : others) {
        const std::int64_t r = a % k;
        lengths.push_back(static_cast<int>(std::min(r, k - r)));
      }
      SearchOptions search;
      search.node_limit = options.search_node_limit;
      const auto outcome = find_path(LengthMultiset(static_cast<int>(k), lengths), search);
      if (outcome.status == SearchStatus::Found) {
        const std::vector<std::int64_t> q(outcome.path.begin(), outcome.path.end());
        std::string witness;
        for (std::size_t i = 0; i < q.size(); ++i) {
          witness += (i == 0 ? "" : ",") + std::to_string(q[i]);
        }
        return {construct_from_zk_path(k, others, q), "zk-lift-search",
                "zk-lift k=" + std::to_string(k) + " path=[" + witness + "]"};
      }
    }
  }

  std::string tried;
  for (std::string_view f : kFamilies) {
    if (!tried.empty()) tried += ", ";
    tried += f;
  }
  throw Error(ErrorKind::Unsupported,
              s.to_string() + " is admissible but matches no known construction (tried " +
                  tried + ")");
}

}  // namespace hamdec
