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

#include <map>
#include <random>

#include "hamdec/hamdec.hpp"
#include "oracles.hpp"

using namespace hamdec;

namespace {

std::vector<Vertex> starter_of(const DecompositionCertificate& c) {
  return {c.starter().begin(), c.starter().end()};
}

std::vector<std::int64_t> offsets_of(const DecompositionCertificate& c) {
  return {c.offsets().begin(), c.offsets().end()};
}

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an hamdec::Error");
  return ErrorKind::InvalidArgument;
}

/// Both checks at 5 periods.
bool genuine(const DecompositionCertificate& c) {
  return verify_certificate(c).accepted && window_oracle(c, 5).accepted;
}

}  // namespace

TEST_CASE("4-valent starters", "[constructions]") {
  const auto c = construct_4valent(1, 3);
  CHECK(starter_of(c) == std::vector<Vertex>{0, 1, 4, 5, 2, 3, 6});
  CHECK(c.period() == 6);
  CHECK(offsets_of(c) == std::vector<std::int64_t>{0, 3});

  const auto c35 = construct_4valent(3, 5);
  CHECK(c35.period() == 10);
  CHECK(c35.starter().size() == 11);
  CHECK(genuine(c35));

  CHECK(construct_4valent(3, 1) == c);
  CHECK(kind_of([] { construct_4valent(1, 2); }) == ErrorKind::NotAdmissible);
  CHECK(kind_of([] { construct_4valent(3, 9); }) == ErrorKind::NotAdmissible);
}

TEST_CASE("4-valent parameters", "[constructions]") {
  const auto p = four_valent_params(5, 11);
  CHECK(p.t == 6);
  CHECK(p.m == 5);
  CHECK(p.alpha == std::vector<std::int64_t>{0, 4, 2, 6});
}

TEST_CASE("4-valent starters alternate lengths a and b", "[constructions][property]") {
  for (std::int64_t b = 3; b <= 60; b += 2) {
    for (std::int64_t a = 1; a < b; a += 2) {
      if (std::gcd(a, b) != 1) continue;
      const auto c = construct_4valent(a, b);
      const auto s = c.starter();
      REQUIRE(s.size() == static_cast<std::size_t>(2 * b + 1));
      for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        CHECK(FinitePath::length(s[i], s[i + 1]) == (i % 2 == 0 ? a : b));
      }
      CHECK(s.back() == 2 * b);
    }
  }
}

TEST_CASE("Walecki path", "[constructions]") {
  CHECK(walecki_path(5) == FinitePath{0, 1, 4, 2, 3});
  CHECK(walecki_path(3) == FinitePath{0, 1, 2});
  CHECK(walecki_path(7) == FinitePath{0, 1, 6, 2, 5, 3, 4});
  for (int k = 3; k <= 31; k += 2) {
    const auto q = walecki_path(k);
    std::vector<int> v(q.vertices().begin(), q.vertices().end());
    std::vector<int> expected;
    for (int d = 1; d <= (k - 1) / 2; ++d) expected.insert(expected.end(), {d, d});
    CHECK(oracle::length_key(v, k) == expected);
  }
  CHECK_THROWS_AS(walecki_path(4), Error);
}

TEST_CASE("lift from a path of Z_k", "[constructions]") {
  // First admissible {a_1, a_2, 3} by (max, min), none divisible by 3.
  std::vector<std::int64_t> first;
  for (std::int64_t hi = 2; first.empty(); ++hi) {
    for (std::int64_t lo = 1; lo < hi && first.empty(); ++lo) {
      if (lo % 3 == 0 || hi % 3 == 0) continue;
      if (oracle::admissible_by_definition({lo, hi, 3})) first = {lo, hi};
    }
  }
  REQUIRE(first == std::vector<std::int64_t>{2, 4});
  const std::vector<std::int64_t> q{0, 1, 2};
  const auto c = construct_from_zk_path(3, first, q);
  CHECK(starter_of(c) == std::vector<Vertex>{0, -2, 2, 5, 1, 3, 6});
  CHECK(offsets_of(c) == std::vector<std::int64_t>{0, 2, 4});
  CHECK(genuine(c));

  const std::vector<std::int64_t> a{1, 5};
  const auto c15 = construct_from_zk_path(3, a, q);
  CHECK(starter_of(c15) == std::vector<Vertex>{0, 1, -4, -1, 4, 3, 6});
  CHECK(genuine(c15));

  const std::vector<std::int64_t> bad_q{0, 1, 1};
  CHECK(kind_of([&] { construct_from_zk_path(3, a, bad_q); }) == ErrorKind::NotHamiltonPath);
  CHECK(kind_of([&] { construct_from_zk_path(3, std::vector<std::int64_t>{1, 3}, q); }) ==
        ErrorKind::InvalidArgument);
  const std::vector<std::int64_t> a5{1, 2, 3, 14};  // lengths 1, 2, 2, 1
  const std::vector<std::int64_t> q5{0, 1, 2, 3, 4};  // lengths 1, 1, 1, 1
  CHECK(kind_of([&] { construct_from_zk_path(5, a5, q5); }) ==
        ErrorKind::LengthMultisetMismatch);
}

TEST_CASE("Walecki family", "[constructions]") {
  const std::vector<std::int64_t> a{1, 2, 3, 4};
  const auto c = construct_walecki_family(5, a);
  CHECK(c.connection_set() == ConnectionSet{1, 2, 3, 4, 5});
  CHECK(c.period() == 10);
  CHECK(offsets_of(c) == std::vector<std::int64_t>{0, 2, 4, 6, 8});
  CHECK(starter_of(c) == std::vector<Vertex>{0, 1, -1, 2, -2, 3, 7, 4, 6, 5, 10});

  CHECK(kind_of([] { construct_walecki_family(3, std::vector<std::int64_t>{1, 2}); }) ==
        ErrorKind::NotAdmissible);
  CHECK(kind_of([] { construct_walecki_family(5, std::vector<std::int64_t>{6, 2, 3, 4}); }) ==
        ErrorKind::NotAdmissible);
  CHECK(kind_of([] { construct_walecki_family(5, std::vector<std::int64_t>{2, 1, 3, 4}); }) ==
        ErrorKind::CongruenceViolation);
}

TEST_CASE("lifted starters split each length across residue parities",
          "[constructions][property]") {
  std::mt19937_64 rng(5);
  for (std::int64_t k = 3; k <= 21; k += 2) {
    for (int rep = 0; rep < 5; ++rep) {
      const auto a = oracle::random_walecki_generators(k, rng);
      const auto c = construct_walecki_family(k, a);
      const auto s = c.starter();
      std::map<std::int64_t, std::vector<std::int64_t>> low_residues;
      for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        low_residues[FinitePath::length(s[i], s[i + 1])].push_back(
            floor_mod(std::min(s[i], s[i + 1]), 2 * k));
      }
      for (const auto& [d, rs] : low_residues) {
        REQUIRE(rs.size() == 2);
        CHECK((rs[0] + rs[1]) % 2 == 1);
      }
      CHECK(genuine(c));
    }
  }
}

TEST_CASE("consecutive generators", "[constructions]") {
  CHECK(starter_of(construct_consecutive(4)) == std::vector<Vertex>{0, -1, 1, 5, 2, 3, 6, 4, 8});
  CHECK(starter_of(construct_consecutive(8)) ==
        std::vector<Vertex>{0, -1, 1, 7, 2, 6, 3, 11, 4, 5, 12, 10, 13, 9, 14, 8, 16});
  CHECK(construct_consecutive(1) == trivial_certificate());
  CHECK(construct_consecutive(5).connection_set() == ConnectionSet{1, 2, 3, 4, 5});
  CHECK(kind_of([] { construct_consecutive(6); }) == ErrorKind::NotAdmissible);
  CHECK(kind_of([] { construct_consecutive(3); }) == ErrorKind::NotAdmissible);
}

TEST_CASE("one length per edge for skip-k and even-run", "[constructions][property]") {
  auto check_one_each = [](const DecompositionCertificate& c) {
    const auto lengths = c.starter_path().edge_lengths();
    const auto half = c.connection_set().positive_half();
    REQUIRE(lengths.size() == half.size());
    for (auto d : half) CHECK(lengths.at(d) == 1);
    CHECK(c.offsets().size() == static_cast<std::size_t>(c.period()));
  };
  for (std::int64_t k = 3; k <= 42; ++k) {
    if (k % 4 >= 2) check_one_each(construct_skip_k(k));
  }
  for (std::int64_t t = 2; t <= 40; t += 2) check_one_each(construct_even_run(t));
}

TEST_CASE("skip-k starters", "[constructions]") {
  CHECK(starter_of(construct_skip_k(3)) == std::vector<Vertex>{0, 1, -1, 3});
  CHECK(starter_of(construct_skip_k(6)) == std::vector<Vertex>{0, 2, -3, -2, -5, -1, 6});
  const auto c7 = construct_skip_k(7);
  CHECK(starter_of(c7) == std::vector<Vertex>{0, 1, 5, 10, 4, 2, -1, 7});
  CHECK(c7.connection_set() == ConnectionSet{1, 2, 3, 4, 5, 6, 8});
  CHECK(construct_skip_k(2) == construct_4valent(1, 3));
  CHECK(kind_of([] { construct_skip_k(4); }) == ErrorKind::NotAdmissible);
  CHECK(kind_of([] { construct_skip_k(5); }) == ErrorKind::NotAdmissible);
}

TEST_CASE("even-run starters", "[constructions]") {
  CHECK(starter_of(construct_even_run(4)) == std::vector<Vertex>{0, 1, 3, 7, -1, 5});
  CHECK(starter_of(construct_even_run(6)) == std::vector<Vertex>{0, 1, 5, 3, -3, 9, -1, 7});
  CHECK(starter_of(construct_even_run(8)) ==
        std::vector<Vertex>{0, 1, 7, 3, 5, 13, -3, 11, -1, 9});
  CHECK(starter_of(construct_even_run(10)) ==
        std::vector<Vertex>{0, 1, 9, 3, 7, 5, -5, 15, -3, 13, -1, 11});
  CHECK(construct_even_run(2) == construct_skip_k(3));
  CHECK(kind_of([] { construct_even_run(5); }) == ErrorKind::NotAdmissible);
}

TEST_CASE("{1, 2, c} starters", "[constructions]") {
  CHECK(starter_of(construct_one_two_c(8)) ==
        std::vector<Vertex>{0, 1, 9, 11, 3, 5, 6, 7, 8, 10, 2, 4, 12});
  CHECK(starter_of(construct_one_two_c(6)) == std::vector<Vertex>{0, 1, 7, 8, 2, 4, 6, 5, 3, 9});
  CHECK(construct_one_two_c(4) == construct_skip_k(3));
  CHECK(kind_of([] { construct_one_two_c(7); }) == ErrorKind::NotAdmissible);
  for (std::int64_t c = 6; c <= 120; c += 2) {
    const auto cert = construct_one_two_c(c);
    const auto lengths = cert.starter_path().edge_lengths();
    const std::int64_t t = c / 2;
    CHECK(lengths == LengthCounts{{1, t}, {2, t}, {c, t}});
    CHECK(offsets_of(cert) == std::vector<std::int64_t>{0, t, 2 * t});
  }
}

TEST_CASE("dispatcher", "[constructions]") {
  CHECK(construct(ConnectionSet{1, 5}).family == "four-valent");
  CHECK(construct(ConnectionSet{1, 2, 3, 4, 5}).family == "consecutive");
  CHECK(construct(ConnectionSet{1, 2, 4}).family == "skip-k");
  CHECK(starter_of(construct(ConnectionSet{1, 2, 4}).certificate) ==
        std::vector<Vertex>{0, 1, -1, 3});
  CHECK(construct(ConnectionSet{1, 2, 4, 6, 8}).family == "even-run");
  CHECK(construct(ConnectionSet{1, 2, 10}).family == "one-two-c");
  CHECK(construct(ConnectionSet{1}).family == "trivial");
  CHECK(construct(ConnectionSet{5, 6, 7, 8, 9}).family == "walecki");

  const auto searched = construct(ConnectionSet{1, 5, 11, 12, 14});
  CHECK(searched.family == "zk-lift-search");
  CHECK(genuine(searched.certificate));

  CHECK(kind_of([] { construct(ConnectionSet{4, 6, 9}); }) == ErrorKind::Unsupported);
  CHECK(kind_of([] { construct(ConnectionSet{1, 2}); }) == ErrorKind::NotAdmissible);
  CHECK(kind_of([] { construct(ConnectionSet{}); }) == ErrorKind::EmptyConnectionSet);

  try {
    construct(ConnectionSet{4, 6, 9});
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("four-valent") != std::string::npos);
  }
}

TEST_CASE("dispatcher is deterministic", "[constructions][property]") {
  for (const auto& s : {ConnectionSet{1, 5, 11, 12, 14}, ConnectionSet{1, 2, 3, 4, 5, 6, 7, 8},
                        ConnectionSet{7, 9}}) {
    const auto first = construct(s);
    const auto second = construct(s);
    CHECK(first.certificate == second.certificate);
    CHECK(first.provenance == second.provenance);
  }
}

TEST_CASE("construction sweep agrees with both checks", "[constructions][property]") {
  for (std::int64_t k = 1; k <= 25; ++k) {
    if (k % 4 <= 1) CHECK(genuine(construct_consecutive(k)));
  }
  for (std::int64_t k = 2; k <= 26; ++k) {
    if (k % 4 >= 2) CHECK(genuine(construct_skip_k(k)));
  }
  for (std::int64_t t = 2; t <= 24; t += 2) CHECK(genuine(construct_even_run(t)));
}
