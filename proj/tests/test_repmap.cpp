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

#include <algorithm>
#include <json.hpp>
#include <random>
#include <sstream>

#include "amplekit/core.hpp"
#include "amplekit/generate.hpp"
#include "amplekit/graph.hpp"
#include "amplekit/peeling.hpp"
#include "amplekit/repmap.hpp"
#include "amplekit/shatter.hpp"
#include "helpers.hpp"

using namespace amplekit;
using namespace amplekit::testing;

namespace {

struct OracleVerdict {
  bool r1 = true, r2 = true, r4 = true, c1 = true, c2 = true;
};

// Direct transcriptions of the conditions, no shared code with the library.
OracleVerdict oracle_verdict(const ConceptClass& c, const std::vector<CoordSet>& r) {
  OracleVerdict v;
  const std::size_t m = c.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Mask diff = c[i] ^ c[j];
      if (!(diff & (r[i] | r[j]))) v.r1 = false;
      if (!(diff & (r[i] ^ r[j]))) v.r4 = false;
    }
  for (Mask y = 0; y <= c.domain_mask() && v.r2; ++y) {
    std::set<Concept> patterns;
    for (Concept x : c) patterns.insert(x & y);
    for (Concept p : patterns) {
      int hits = 0;
      for (std::size_t i = 0; i < m; ++i)
        if ((c[i] & y) == p && is_subset(r[i], y)) ++hits;
      if (hits != 1) v.r2 = false;
    }
  }
  for (std::size_t i = 0; i < m; ++i)
    if (!oracle_cube_in(c, c[i], r[i])) v.c1 = false;
  for (Mask s = 0; s <= c.domain_mask(); ++s)
    for (Concept t : c) {
      if (t & s || !oracle_cube_in(c, t, s)) continue;
      int sinks = 0;
      for (std::size_t i = 0; i < m; ++i)
        if ((c[i] & ~s) == t && !(r[i] & s)) ++sinks;
      if (sinks != 1) v.c2 = false;
    }
  return v;
}

ConceptClass ample_sample(std::uint64_t seed, int n, std::size_t size = 0) {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::random_ample;
  spec.n = n;
  spec.seed = seed;
  spec.size = size;
  return generate(spec);
}

RepMap toward_zero(const ConceptClass& c) {
  std::vector<RepMap::Entry> e;
  for (Concept x : c) e.emplace_back(x, x);
  return RepMap(c.n(), e);
}

}  // namespace

TEST_CASE("RepMap container") {
  RepMap r(2, {{2, 2}, {0, 0}, {1, 1}});
  CHECK(r.entries()[0].first == 0U);
  CHECK(r.at(2) == 2U);
  CHECK_FALSE(r.find(3).has_value());
  CHECK_THROWS_AS(r.at(3), ContractError);
  CHECK(r.preimage(1).value() == 1U);
  CHECK_THROWS_AS(RepMap(2, {{0, 0}, {0, 1}}), ContractError);
  CHECK_THROWS_AS(RepMap(2, {{0, 4}}), DomainError);
  std::stringstream ss;
  write_repmap(ss, r);
  CHECK(ss.str() == "00 -> 00\n10 -> 10\n01 -> 01\n");
  CHECK(read_repmap(ss) == r);
  std::istringstream bad("00 -> 0\n");
  CHECK_THROWS(read_repmap(bad));
}

TEST_CASE("verify_repmap on the spec examples") {
  auto c = cls({"00", "01", "10"});
  RepMap good(2, {{bits("00"), 0}, {bits("01"), coords({2})}, {bits("10"), coords({1})}});
  auto rep = verify_repmap(c, good);
  CHECK(rep.all());
  CHECK(rep.exhaustive);
  RepMap other(2, {{bits("00"), coords({1})}, {bits("01"), coords({2})}, {bits("10"), 0}});
  auto rep2 = verify_repmap(c, other);
  auto oracle = oracle_verdict(c, other.images_for(c));
  CHECK(rep2.r1 == oracle.r1);
  CHECK(rep2.r4 == oracle.r4);
  CHECK(rep2.r2 == oracle.r2);
  CHECK(rep2.all());
  // Images of the 2-edge 00-01 differ in both coordinates, not only in 2.
  CHECK((other.at(bits("00")) ^ other.at(bits("01"))) == coords({1, 2}));
  RepMap clash(2, {{bits("00"), coords({1})}, {bits("01"), coords({1})}, {bits("10"), 0}});
  auto rep3 = verify_repmap(c, clash);
  CHECK_FALSE(rep3.bijective);
  CHECK_FALSE(rep3.r4);
  REQUIRE(rep3.r4_witness);
  CHECK(rep3.r4_witness->first == bits("00"));
  CHECK(rep3.r4_witness->second == bits("01"));
  for (int n = 1; n <= 4; ++n) {
    auto q = ConceptClass::full_cube(n);
    CHECK(verify_repmap(q, toward_zero(q)).all());
  }
}

TEST_CASE("representation conditions are equivalent on every bijection onto X(C)") {
  std::vector<ConceptClass> classes = {cls({"00", "01", "10"}), ConceptClass::full_cube(2),
                                       cls({"000", "100", "010", "001", "110"}),
                                       cls({"000", "100", "110", "111"})};
  for (std::uint64_t seed = 1; seed <= 8; ++seed) classes.push_back(ample_sample(seed, 4, 5));
  std::size_t valid = 0, total = 0;
  for (const auto& c : classes) {
    REQUIRE(c.size() <= 5);
    REQUIRE(is_ample(c).ample);
    auto lower = strongly_shattered_sets(c.concepts(), c.n());
    std::sort(lower.begin(), lower.end());
    do {
      RepMap r(c, lower);
      auto rep = verify_repmap(c, r);
      auto oracle = oracle_verdict(c, lower);
      CHECK(rep.bijective);
      CHECK(rep.r1 == oracle.r1);
      CHECK(rep.r2 == oracle.r2);
      CHECK(rep.r4 == oracle.r4);
      CHECK(rep.c1 == oracle.c1);
      CHECK(rep.c2 == oracle.c2);
      CHECK(rep.r1 == rep.r2);
      CHECK(rep.r2 == rep.r3);
      CHECK(rep.r3 == rep.r4);
      // Unique sink orientation view.
      CHECK(rep.all() == (rep.c1 && rep.c2));
      CHECK(rep.all() == check_uso(c, r).ok());
      CHECK(rep.all() == image_in_complex_and_c2(c, r));
      if (rep.all()) {
        ++valid;
        for (const Edge& e : InclusionGraph(c).edges())
          CHECK(((r.at(e.from) ^ r.at(e.to)) & coord_bit(e.coord)) != 0);
      }
      ++total;
    } while (std::next_permutation(lower.begin(), lower.end()));
  }
  CHECK(valid > 0);
  CHECK(valid < total);
}

TEST_CASE("sampled verification above the exhaustive cap") {
  auto ball = generate(parse_generator_spec("hamming_ball,n=7,d=2"));
  auto r = build_maximum_repmap(ball);
  VerifyOptions opts;
  opts.exhaustive_cap = 4;
  opts.samples = 64;
  auto rep = verify_repmap(ball, r, opts);
  CHECK_FALSE(rep.exhaustive);
  CHECK(rep.all());
  // Swap two images: both sampled and exhaustive runs must notice.
  auto entries = std::vector<RepMap::Entry>(r.entries().begin(), r.entries().end());
  std::swap(entries[1].second, entries[2].second);
  RepMap broken(ball.n(), entries);
  CHECK_FALSE(verify_repmap(ball, broken, opts).all());
  auto full = verify_repmap(ball, broken);
  CHECK_FALSE(full.r1);
  CHECK_FALSE(full.r2);
  CHECK_FALSE(full.r3);
  CHECK_FALSE(full.r4);
}

TEST_CASE("maximum construction") {
  auto c = cls({"00", "01", "10"});
  auto r = build_maximum_repmap(c);
  CHECK(verify_repmap(c, r).all());
  for (const auto& [x, img] : r.entries()) CHECK(popcount(img) <= 1);
  for (int n = 1; n <= 4; ++n) {
    auto q = ConceptClass::full_cube(n);
    auto rq = build_maximum_repmap(q);
    CHECK(verify_repmap(q, rq).all());
    int empties = 0;
    for (const auto& [x, img] : rq.entries()) empties += img == 0;
    CHECK(empties == 1);
  }
  auto ball = generate(parse_generator_spec("hamming_ball,n=3,d=1"));
  CHECK(verify_repmap(ball, build_maximum_repmap(ball)).all());
  CHECK_THROWS_AS(build_maximum_repmap(cls({"000", "100", "110"})), ContractError);
  for (int n = 2; n <= 8; ++n)
    for (int d = 0; d <= std::min(n, 3); ++d) {
      GeneratorSpec spec;
      spec.kind = GeneratorKind::hamming_ball;
      spec.n = n;
      spec.d = d;
      auto b = generate(spec);
      auto rb = build_maximum_repmap(b);
      CHECK(verify_repmap(b, rb).all());
      std::vector<CoordSet> images;
      for (const auto& [x, img] : rb.entries()) images.push_back(img);
      std::sort(images.begin(), images.end());
      std::vector<CoordSet> small;
      for (Mask y = 0; y <= full_mask(n); ++y)
        if (popcount(y) <= d) small.push_back(y);
      CHECK(images == small);
      if (!b.is_full_cube()) {
        auto star = complement(b);
        CHECK(verify_repmap(star, build_maximum_repmap(star)).all());
      }
    }
}

TEST_CASE("incomplete cube sources") {
  auto c = cls({"00", "01", "10"});
  auto s = incomplete_cube_sources(c, cls({"00"}));
  REQUIRE(s.size() == 2);
  CHECK(s.at(bits("10")) == Cube{0, coords({1})});
  CHECK(s.at(bits("01")) == Cube{0, coords({2})});
  auto s1 = incomplete_cube_sources(ConceptClass::full_cube(1), cls({"0"}));
  CHECK(s1.at(1U) == Cube{0, 1});
  auto s2 = incomplete_cube_sources(ConceptClass::full_cube(2), c);
  REQUIRE(s2.size() == 1);
  CHECK(s2.at(bits("11")) == Cube{0, 3});
  CHECK_THROWS_AS(incomplete_cube_sources(c, cls({"11"})), ContractError);
  auto b3 = generate(parse_generator_spec("hamming_ball,n=5,d=2"));
  auto b2 = generate(parse_generator_spec("hamming_ball,n=5,d=1"));
  auto big = incomplete_cube_sources(b3, b2);
  CHECK(big.size() == b3.size() - b2.size());
  for (const auto& [src, cube] : big) {
    CHECK(cube.contains(src));
    CHECK_FALSE(b2.contains(src));
  }
}

TEST_CASE("unique sink orientations and peelings") {
  auto q2 = ConceptClass::full_cube(2);
  auto r = toward_zero(q2);
  CHECK(check_uso(q2, r).ok());
  Orientation o(q2, r);
  CHECK(o.is_acyclic());
  CHECK(uso_to_peeling(q2, o) == Ordering{bits("00"), bits("01"), bits("10"), bits("11")});

  RepMap cycle(2, {{bits("00"), coords({1})},
                   {bits("10"), coords({2})},
                   {bits("11"), coords({1})},
                   {bits("01"), coords({2})}});
  auto rep = check_uso(q2, cycle);
  CHECK(rep.out_map);
  CHECK_FALSE(rep.c2);
  Orientation oc(q2, cycle);
  auto cyc = oc.find_cycle();
  REQUIRE(cyc.size() == 5);
  CHECK(cyc.front() == cyc.back());
  CHECK_THROWS_AS(uso_to_peeling(q2, oc), ContractError);
  // Not an orientation: the edge 00-10 is oriented both ways.
  RepMap both(2, {{0, 1}, {1, 1}, {2, 0}, {3, 0}});
  CHECK_THROWS_AS(Orientation(q2, both), ContractError);
  CHECK_FALSE(check_uso(q2, both).out_map);

  auto c = cls({"00", "01", "10"});
  auto peel = corner_peeling_search(c).ordering;
  auto uso = peeling_to_uso(c, peel);
  CHECK(uso.is_acyclic());
  CHECK(check_uso(c, uso.out_map()).ok());
  CHECK(uso.out_map().at(peel.front()) == 0U);
  CHECK_THROWS_AS(peeling_to_uso(q2, Ordering{0, 3, 1, 2}), ContractError);

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto a = ample_sample(seed, 6);
    auto p = corner_peeling_search(a);
    REQUIRE(p.status == PeelStatus::found);
    auto u = peeling_to_uso(a, p.ordering);
    CHECK(u.is_acyclic());
    CHECK(check_uso(a, u.out_map()).ok());
    CHECK(verify_repmap(a, u.out_map()).all());
    auto back = uso_to_peeling(a, u);
    CHECK(classify_ordering(a, back).corner_peeling);
  }
}

TEST_CASE("substructure maps") {
  auto q2 = ConceptClass::full_cube(2);
  auto r = toward_zero(q2);
  auto edge = sub_repmap_cube(q2, r, Cube{0, coords({2})});
  CHECK(edge.cls == cls({"00", "01"}));
  CHECK(edge.map.at(bits("00")) == 0U);
  CHECK(edge.map.at(bits("01")) == coords({2}));
  CHECK(verify_repmap(edge.cls, edge.map).all());
  CHECK(sub_repmap_reduction(q2, r, 0).map == r);
  CHECK(sub_repmap_restriction(q2, r, 0).map == r);
  auto red = sub_repmap_reduction(q2, r, coords({1}));
  CHECK(red.cls == ConceptClass::full_cube(1));
  CHECK(red.map.at(0) == 0U);
  CHECK(red.map.at(1) == 1U);
  RepMap bad(2, {{0, 0}, {1, 0}, {2, 2}, {3, 3}});
  CHECK_THROWS_AS(sub_repmap_cube(q2, bad, Cube{0, 1}), ContractError);

  std::mt19937_64 rng(53);
  for (int d = 1; d <= 3; ++d) {
    GeneratorSpec spec;
    spec.kind = GeneratorKind::hamming_ball;
    spec.n = 6;
    spec.d = d;
    auto b = generate(spec);
    auto rb = build_maximum_repmap(b);
    for (int trial = 0; trial < 10; ++trial) {
      Mask support = static_cast<Mask>(rng()) & b.domain_mask();
      Concept tag = b[rng() % b.size()] & ~support;
      auto sc = sub_repmap_cube(b, rb, Cube{tag, support});
      CHECK(verify_repmap(sc.cls, sc.map).all());
      Mask y = static_cast<Mask>(rng()) & b.domain_mask();
      if (reduce(b, y)) {
        auto sr = sub_repmap_reduction(b, rb, y);
        CHECK(verify_repmap(sr.cls, sr.map).all());
      }
      auto st = sub_repmap_restriction(b, rb, y);
      CHECK(verify_repmap(st.cls, st.map).all());
    }
  }
}

TEST_CASE("pre-representation maps") {
  auto c = cls({"00", "01", "10"});
  auto r1 = pre_rep_c1(c);
  auto rep = verify_repmap(c, r1);
  CHECK(rep.c1);
  CHECK(rep.bijective);
  CHECK(pre_rep_c1(cls({"01"})).at(bits("01")) == 0U);
  auto q2 = ConceptClass::full_cube(2);
  auto r2 = pre_rep_c2(q2);
  CHECK(oracle_verdict(q2, r2.images_for(q2)).c2);
  CHECK_THROWS_AS(pre_rep_c1(cls({"00", "11"})), ContractError);
  CHECK_THROWS_AS(pre_rep_c2(cls({"00", "11"})), ContractError);

  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto a = ample_sample(seed, 5);
    auto p1 = pre_rep_c1(a);
    auto o1 = oracle_verdict(a, p1.images_for(a));
    CHECK(o1.c1);
    CHECK(verify_repmap(a, p1).bijective);
    auto p2 = pre_rep_c2(a);
    auto images = p2.images_for(a);
    CHECK(oracle_verdict(a, images).c2);
    std::sort(images.begin(), images.end());
    CHECK(std::adjacent_find(images.begin(), images.end()) == images.end());
    // Hall's condition on every family of sets.
    auto hall = hall_graph(a);
    if (hall.size() <= 12) {
      for (std::uint32_t pick = 1; pick < (1U << hall.size()); ++pick) {
        std::set<Concept> nb;
        for (std::size_t k = 0; k < hall.size(); ++k)
          if (pick >> k & 1U) nb.insert(hall[k].second.begin(), hall[k].second.end());
        CHECK(nb.size() >= static_cast<std::size_t>(std::popcount(pick)));
      }
    }
  }
}

TEST_CASE("independent systems of representatives") {
  auto c = cls({"00", "01", "10"});
  auto inst = isr_instance(c);
  CHECK(inst.vertices.size() == 7);
  CHECK(inst.parts.size() == 3);
  auto res = isr_solve(inst);
  REQUIRE(res.status == IsrStatus::found);
  auto r = isr_to_repmap(inst, res);
  CHECK(verify_repmap(c, r).all());

  auto single = isr_instance(cls({"1"}));
  CHECK(single.vertices.size() == 1);
  CHECK(isr_solve(single).status == IsrStatus::found);
  auto q1 = ConceptClass::full_cube(1);
  auto i1 = isr_instance(q1);
  CHECK(verify_repmap(q1, isr_to_repmap(i1, isr_solve(i1))).all());

  auto j = nlohmann::json::parse(isr_to_json(inst));
  CHECK(j["vertices"].size() == 7);
  CHECK(j["parts"].size() == 3);
  CHECK(j["edges"].size() == inst.edges.size());

  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    auto a = ample_sample(seed, 5);
    auto ia = isr_instance(a);
    auto ra = isr_solve(ia);
    REQUIRE(ra.status == IsrStatus::found);
    CHECK(verify_repmap(a, isr_to_repmap(ia, ra)).all());
  }
  CHECK(isr_solve(isr_instance(generate(parse_generator_spec("hamming_ball,n=6,d=2"))), 1)
            .status == IsrStatus::unknown);
}

TEST_CASE("tail matching") {
  auto c = cls({"00", "01", "10"});
  auto rep = tail_matching_analysis(c, 1);
  CHECK(rep.d == 1);
  CHECK(rep.tail == std::vector<Concept>{bits("01")});
  REQUIRE(rep.labels.size() == 1);
  CHECK(rep.labels[0].support == coords({2}));
  CHECK(rep.labels[0].pattern == coords({2}));
  CHECK(rep.status == MatchingStatus::unique);
  CHECK(rep.corner_candidates == std::vector<Concept>{bits("01")});
  CHECK(rep.confirmed_corners == std::vector<Concept>{bits("01")});
  auto q = tail_matching_analysis(ConceptClass::full_cube(3), 2);
  CHECK(q.tail.empty());
  CHECK(q.status == MatchingStatus::unique);
  CHECK(to_string(MatchingStatus::multiple) == "multiple");
  CHECK_THROWS_AS(tail_matching_analysis(cls({"000", "100", "110"}), 1), ContractError);
  for (int n = 3; n <= 7; ++n)
    for (int d = 1; d < n; ++d) {
      GeneratorSpec spec;
      spec.kind = GeneratorKind::hamming_ball;
      spec.n = n;
      spec.d = d;
      auto b = generate(spec);
      auto corner_list = corners(b);
      for (int x = 1; x <= n; ++x) {
        auto t = tail_matching_analysis(b, x);
        CHECK(t.tail.size() == t.labels.size());
        CHECK(t.status != MatchingStatus::no_perfect_matching);
        for (Concept v : t.confirmed_corners)
          CHECK(std::binary_search(corner_list.begin(), corner_list.end(), v));
      }
    }
}
