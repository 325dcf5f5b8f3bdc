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

#include <catch_amalgamated.hpp>

#include <random>

#include "hamdec/hamdec.hpp"
#include "oracles.hpp"

using namespace hamdec;

namespace {

DecompositionCertificate four_valent_13(std::vector<std::int64_t> offsets = {0, 3}) {
  return DecompositionCertificate(ConnectionSet{1, 3}, 6, {0, 1, 4, 5, 2, 3, 6},
                                  std::move(offsets));
}

}  // namespace

TEST_CASE("verifier accepts known decompositions", "[verifier]") {
  const auto r = verify_certificate(four_valent_13());
  CHECK(r.accepted);
  CHECK(r.failures.empty());
  REQUIRE(r.residue_tables.size() == 2);
  CHECK(r.residue_tables[0] == ResidueTable{1, {0, 2, 4}});
  CHECK(r.residue_tables[1] == ResidueTable{3, {1, 2, 3}});

  CHECK(verify_certificate(construct_consecutive(4)).accepted);
  CHECK(verify_certificate(trivial_certificate()).accepted);
}

TEST_CASE("verifier reports each violated condition", "[verifier]") {
  const auto overlap = verify_certificate(four_valent_13({0, 2}));
  CHECK_FALSE(overlap.accepted);
  CHECK(overlap.has(Failure::LengthResidueOverlap));
  CHECK(overlap.has(Failure::LengthResidueGap));

  const auto foreign =
      verify_certificate(DecompositionCertificate(ConnectionSet{1, 3}, 6, {0, 7, 4, 5, 2, 3, 6}, {0, 3}));
  CHECK(foreign.has(Failure::ForeignEdgeLength));

  const auto broken =
      verify_certificate(DecompositionCertificate(ConnectionSet{1, 3}, 6, {0, 1, 4, 1, 2, 3, 6}, {0, 3}));
  CHECK(broken.has(Failure::PathBroken));

  const auto ends =
      verify_certificate(DecompositionCertificate(ConnectionSet{1, 3}, 6, {0, 1, 4, 5, 2, 3, 7}, {0, 3}));
  CHECK(ends.has(Failure::EndpointMismatch));
  CHECK(ends.has(Failure::ResidueCoverage));

  const auto dup = verify_certificate(four_valent_13({0, 6}));
  CHECK(dup.has(Failure::OffsetCollision));
}

TEST_CASE("window oracle accepts known decompositions", "[verifier]") {
  for (int periods : {3, 5, 8}) {
    CHECK(window_oracle(four_valent_13(), periods).accepted);
    CHECK(window_oracle(construct_consecutive(8), periods).accepted);
    CHECK(window_oracle(construct_skip_k(11), periods).accepted);
  }
}

TEST_CASE("window oracle detects damage", "[verifier]") {
  const auto overlap = window_oracle(four_valent_13({0, 2}), 5);
  CHECK(overlap.has(WindowFailure::EdgeOverlap));
  CHECK(overlap.has(WindowFailure::EdgeUncovered));

  const auto swapped =
      window_oracle(DecompositionCertificate(ConnectionSet{1, 3}, 6, {0, 4, 1, 5, 2, 3, 6}, {0, 3}), 5);
  CHECK_FALSE(swapped.accepted);

  // Endpoints 0 and 12 with period 6: two interleaved infinite paths.
  const auto split = window_oracle(
      DecompositionCertificate(ConnectionSet{1, 2, 3, 4, 5, 6}, 6, {0, 1, 3, 5, 4, 8, 12}, {0}), 5);
  CHECK(split.has(WindowFailure::Disconnected));

  const auto foreign =
      window_oracle(DecompositionCertificate(ConnectionSet{1, 3}, 6, {0, 7, 4, 5, 2, 3, 6}, {0, 3}), 5);
  CHECK(foreign.has(WindowFailure::ForeignEdge));
}

TEST_CASE("window oracle argument checks", "[verifier]") {
  CHECK_THROWS_AS(window_oracle(four_valent_13(), 2), Error);
  try {
    window_oracle(construct_even_run(4), 3);
    FAIL("expected WindowTooSmall");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WindowTooSmall);
  }
  try {
    cross_validate(construct_even_run(4), 3);
    FAIL("expected WindowTooSmall");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WindowTooSmall);
  }
  CHECK(window_oracle(construct_even_run(4), 5).accepted);
}

TEST_CASE("residue tables have n / |offsets| entries", "[verifier][property]") {
  for (const auto& item : oracle::valid_corpus()) {
    const auto r = verify_certificate(item.cert);
    REQUIRE(r.accepted);
    const auto per_length = static_cast<std::size_t>(item.cert.period()) / item.cert.offsets().size();
    for (const auto& table : r.residue_tables) CHECK(table.residues.size() == per_length);
  }
}

TEST_CASE("verifier and window oracle agree", "[verifier][property]") {
  std::mt19937_64 rng(17);
  const auto corpus = oracle::valid_corpus();
  std::size_t rejected = 0;
  for (int round = 0; round < 4; ++round) {
    for (const auto& item : corpus) {
      const auto c = round == 0 ? item.cert : oracle::mutate(item.cert, rng);
      const bool exact = verify_certificate(c).accepted;
      if (!exact) ++rejected;
      for (int periods : {3, 5, 8}) {
        if (periods * c.period() < 2 * c.connection_set().max()) continue;
        INFO(item.name << " periods=" << periods);
        CHECK(cross_validate(c, periods));
      }
    }
  }
  CHECK(rejected > 300);
}

TEST_CASE("acceptance is stable under wider windows and translation", "[verifier][property]") {
  std::mt19937_64 rng(23);
  for (const auto& item : oracle::valid_corpus()) {
    const auto& c = item.cert;
    const auto base = window_oracle(c, 5).accepted;
    CHECK(window_oracle(c, 8).accepted == base);
    std::vector<Vertex> shifted(c.starter().begin(), c.starter().end());
    const Vertex t = c.period() * static_cast<Vertex>(rng() % 7) - 3 * c.period();
    for (auto& v : shifted) v += t;
    std::vector<std::int64_t> offsets(c.offsets().begin(), c.offsets().end());
    const DecompositionCertificate moved(c.connection_set(), c.period(), shifted, offsets);
    CHECK(verify_certificate(moved).accepted);
  }
}
