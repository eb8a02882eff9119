// Copyright 2026 The amplekit Authors
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

#include <doctest.h>

#include <random>

#include "amplekit/core.hpp"
#include "amplekit/shatter.hpp"
#include "helpers.hpp"

using namespace amplekit;
using namespace amplekit::testing;

TEST_CASE("bitstrings put coordinate 1 leftmost") {
  CHECK(bits("100") == 1U);
  CHECK(bits("001") == 4U);
  CHECK(to_bitstring(6U, 3) == "011");
  CHECK_THROWS_AS(parse_bitstring("012", 3), Error);
  CHECK_THROWS_AS(parse_bitstring("01", 3), Error);
  CHECK(format_coordset(coords({1, 3})) == "{1,3}");
  CHECK(format_coordset(0) == "{}");
  CHECK(parse_coordset("{1,3}", 3) == coords({1, 3}));
  CHECK(parse_coordset("{}", 3) == 0U);
  CHECK_THROWS(parse_coordset("{4}", 3));
  CHECK(format_cube(Cube{bits("100"), coords({2})}, 3) == "1*0");
}

TEST_CASE("pext and pdep helpers are inverse") {
  std::mt19937 rng(7);
  for (int t = 0; t < 500; ++t) {
    Mask sel = rng() & 0xffffffU;
    Mask v = rng() & 0xffffffU;
    Mask packed = compress_bits(v, sel);
    CHECK(packed < (Mask{1} << popcount(sel)) + (popcount(sel) == 32));
    CHECK(expand_bits(packed, sel) == (v & sel));
  }
}

TEST_CASE("class construction is canonical") {
  ConceptClass a(2, {3, 0, 1, 0});
  CHECK(a.size() == 3);
  CHECK(a == ConceptClass(2, {0, 1, 3}));
  CHECK_THROWS_AS(ConceptClass(2, {}), EmptyClassError);
  CHECK_THROWS_AS(ConceptClass(2, {4}), DomainError);
  CHECK(a.index_of(3) == 2);
  CHECK(a.index_of(2) == -1);
}

TEST_CASE("restrict") {
  auto q2 = ConceptClass::full_cube(2);
  CHECK(strings(restrict(q2, coords({1}))) == std::vector<std::string>{"0", "1"});
  auto c = cls({"00", "01", "10"});
  CHECK(restrict(c, coords({1, 2})) == c);
  auto ball = cls({"000", "001", "010", "100"});
  auto r = restrict(ball, coords({2, 3}));
  CHECK(strings(r) == std::vector<std::string>{"00", "10", "01"});
  CHECK(r.labels() == std::vector<int>{2, 3});
  CHECK_THROWS_AS(restrict(c, coords({3})), DomainError);
}

TEST_CASE("drop") {
  CHECK(drop(ConceptClass::full_cube(3), coords({3})) == ConceptClass::full_cube(2));
  auto c = cls({"00", "01", "10"});
  CHECK(drop(c, coords({2})) == restrict(c, coords({1})));
  CHECK(strings(drop(c, coords({2}))) == std::vector<std::string>{"0", "1"});
  CHECK(drop(c, 0) == c);
}

TEST_CASE("reduce") {
  auto q2 = ConceptClass::full_cube(2);
  auto r = reduce(q2, coords({1}));
  REQUIRE(r);
  CHECK(strings(*r) == std::vector<std::string>{"0", "1"});
  auto c = cls({"00", "01", "10"});
  auto r1 = reduce(c, coords({1}));
  REQUIRE(r1);
  CHECK(strings(*r1) == std::vector<std::string>{"0"});
  CHECK(r1->labels() == std::vector<int>{2});
  CHECK_FALSE(reduce(c, coords({1, 2})).has_value());
}

TEST_CASE("complement, twist, product, cube intersection") {
  auto c = cls({"00", "01", "10"});
  CHECK(strings(complement(c)) == std::vector<std::string>{"11"});
  CHECK_THROWS_AS(complement(ConceptClass::full_cube(2)), EmptyClassError);
  CHECK(twist(c, coords({1, 2})) == cls({"11", "10", "01"}));
  auto q1 = ConceptClass::full_cube(1);
  CHECK(product(q1, q1) == ConceptClass::full_cube(2));
  auto p = product(c, cls({"0"}));
  CHECK(p == cls({"000", "010", "100"}));
  auto part = intersect_cube(c, Cube{0, coords({1})});
  REQUIRE(part);
  CHECK(*part == cls({"00", "10"}));
  CHECK_FALSE(intersect_cube(c, Cube{bits("11"), 0}).has_value());
}

TEST_CASE("carrier and tail") {
  auto q2 = ConceptClass::full_cube(2);
  CHECK(carrier(q2, 1).value() == q2);
  auto c = cls({"00", "01", "10"});
  auto t = tail(c, 1);
  REQUIRE(t);
  CHECK(strings(*t) == std::vector<std::string>{"1"});
  CHECK_FALSE(tail(q2, 1).has_value());
  CHECK(carrier(c, 1).value() == cls({"00", "10"}));
}

TEST_CASE("partition identity C = N_x(C) + tail_x(C) on random classes") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    std::vector<Concept> v;
    for (Mask x = 0; x <= full_mask(n); ++x)
      if (rng() % 2) v.push_back(x);
    if (v.empty()) v.push_back(0);
    ConceptClass c(n, v);
    for (int x = 1; x <= n; ++x) {
      const Mask bit = coord_bit(x);
      std::size_t with_edge = 0, without = 0;
      for (Concept k : c) (c.contains(k ^ bit) ? with_edge : without)++;
      auto nx = carrier(c, x);
      auto tx = tail(c, x);
      CHECK((nx ? nx->size() : 0) == with_edge);
      CHECK((tx ? tx->size() : 0) == without);
      // 0C^x and 1C^x have |C^x| concepts each.
      auto hx = reduce(c, bit);
      CHECK(2 * (hx ? hx->size() : 0) == with_edge);
    }
  }
}

TEST_CASE("restriction, complement and twist laws") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    std::vector<Concept> v;
    for (Mask x = 0; x <= full_mask(n); ++x)
      if (rng() % 3 == 0) v.push_back(x);
    if (v.empty()) v.push_back(full_mask(n));
    ConceptClass c(n, v);
    Mask y = static_cast<Mask>(rng()) & c.domain_mask();
    Mask z = static_cast<Mask>(rng()) & c.domain_mask();
    CHECK(restrict(c, y).size() <= c.size());
    // Compare on the original coordinates.
    auto yz = restrict(c, y & z);
    auto nested = restrict(restrict(c, y), compress_bits(y & z, y));
    CHECK(nested == yz);
    CHECK(twist(twist(c, y), y) == c);
    if (!c.is_full_cube()) CHECK(complement(complement(c)) == c);
  }
}

TEST_CASE("reduction commutes with restriction on ample classes") {
  // (C^Y)_Z = (C_Z)^Y for disjoint Y, Z.
  std::vector<ConceptClass> ample = {cls({"00", "01", "10"}), ConceptClass::full_cube(3),
                                     cls({"000", "100", "010", "001", "110"})};
  for (const auto& c : ample) {
    REQUIRE(is_ample(c).ample);
    for (Mask y = 0; y <= c.domain_mask(); ++y) {
      for (Mask z = 0; z <= c.domain_mask(); ++z) {
        if (y & z) continue;
        auto left = reduce(c, y);
        std::optional<ConceptClass> lhs;
        if (left) lhs = drop(*left, compress_bits(z, c.domain_mask() & ~y));
        auto right = reduce(drop(c, z), compress_bits(y, c.domain_mask() & ~z));
        REQUIRE(lhs.has_value() == right.has_value());
        if (lhs) CHECK(lhs->concepts().size() == right->concepts().size());
        if (lhs) CHECK(std::equal(lhs->begin(), lhs->end(), right->begin()));
      }
    }
  }
}

TEST_CASE("cube complex matches brute-force enumeration") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    std::vector<Concept> v;
    for (Mask x = 0; x <= full_mask(n); ++x)
      if (rng() % 4 != 0) v.push_back(x);
    if (v.empty()) v.push_back(0);
    ConceptClass c(n, v);
    std::vector<Cube> expected;
    for (Mask s = 0; s <= c.domain_mask(); ++s)
      for (Mask t = 0; t <= c.domain_mask(); ++t)
        if (!(t & s) && oracle_cube_in(c, t, s)) expected.push_back(Cube{t, s});
    auto got = cube_complex(c);
    for (std::size_t i = 1; i < got.size(); ++i) CHECK(got[i - 1].dim() <= got[i].dim());
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
  }
}
