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

#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "hamdec/core.hpp"

namespace hamdec {

/// Connectivity and the necessary conditions for Hamilton-decomposability:
/// gcd(S) = 1 and sum(S+) = |S+| (mod 2).
struct AdmissibilityReport {
  std::int64_t gcd = 0;
  std::int64_t component_count = 0;
  bool parity_ok = false;
  bool admissible = false;

  std::string reason() const {
    if (admissible) return "admissible";
    std::string out;
    if (gcd != 1) out = "disconnected (gcd " + std::to_string(gcd) + ")";
    if (!parity_ok) {
      if (!out.empty()) out += "; ";
      out += "parity";
    }
    return out;
  }

  bool operator==(const AdmissibilityReport&) const = default;
};

inline AdmissibilityReport analyze(const ConnectionSet& s) {
  if (s.empty()) {
    throw Error(ErrorKind::EmptyConnectionSet, "cannot analyze an empty set");
  }
  AdmissibilityReport report;
  std::int64_t parity = 0;
  for (std::int64_t a : s.positive_half()) {
    report.gcd = std::gcd(report.gcd, a);
    parity ^= (a & 1);
  }
  report.component_count = report.gcd;
  report.parity_ok =
      parity == static_cast<std::int64_t>(s.size() & 1);
  report.admissible = report.gcd == 1 && report.parity_ok;
  return report;
}

inline bool is_admissible(const ConnectionSet& s) {
  return analyze(s).admissible;
}

/// Connection set of one connected component, {a / gcd : a in S+}.
inline ConnectionSet component_set(const ConnectionSet& s) {
  const std::int64_t d = analyze(s).gcd;
  std::vector<std::int64_t> scaled;
  scaled.reserve(s.size());
  for (std::int64_t a : s.positive_half()) scaled.push_back(a / d);
  return ConnectionSet(std::move(scaled));
}

}  // namespace hamdec
