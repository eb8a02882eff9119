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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "amplekit/batch.hpp"
#include "amplekit/core.hpp"
#include "amplekit/generate.hpp"
#include "amplekit/io.hpp"
#include "amplekit/shatter.hpp"
#include "helpers.hpp"

using namespace amplekit;
using namespace amplekit::testing;

namespace {

int parse_error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    read_class(in);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "amplekit_io_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("class files") {
  std::istringstream in("# a comment\nn=2\n00\n\n01\n10\n");
  auto c = read_class(in);
  CHECK(c == cls({"00", "01", "10"}));
  std::ostringstream out;
  write_class(out, c);
  CHECK(out.str() == "n=2\n00\n10\n01\n");
  std::istringstream again(out.str());
  CHECK(read_class(again) == c);
  CHECK(parse_error_line("") == 0);
  CHECK(parse_error_line("n=2\n00\n00\n") == 3);
  CHECK(parse_error_line("n=2\n00\n012\n") == 3);
  CHECK(parse_error_line("n=2\n0x\n") == 2);
  CHECK(parse_error_line("00\n") == 1);
  CHECK(parse_error_line("n=25\n") == 1);
  CHECK(parse_error_line("n=2\n") > 0);
}

TEST_CASE("ingest and emit round trip") {
  auto dir = scratch_dir();
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    GeneratorSpec spec;
    spec.kind = GeneratorKind::random_ample;
    spec.n = 6;
    spec.seed = seed;
    auto c = generate(spec);
    auto path = (dir / ("c" + std::to_string(seed) + ".txt")).string();
    emit(path, c);
    CHECK(ingest(path) == c);
  }
  CHECK_THROWS_AS(ingest((dir / "missing.txt").string()), Error);
}

TEST_CASE("orderings") {
  std::istringstream in("11\n00\n");
  auto o = read_ordering(in, 2);
  CHECK(o == std::vector<Concept>{3, 0});
  std::ostringstream out;
  write_ordering(out, 2, o);
  CHECK(out.str() == "n=2\n11\n00\n");
  std::istringstream with_header(out.str());
  CHECK(read_ordering(with_header) == o);
  std::istringstream no_n("11\n");
  CHECK_THROWS(read_ordering(no_n));
}

TEST_CASE("generators") {
  auto ball = generate(parse_generator_spec("hamming_ball,n=3,d=1"));
  CHECK(ball == cls({"000", "100", "010", "001"}));
  CHECK(is_maximum(ball));
  CHECK(generate(parse_generator_spec("cube,n=2")) == ConceptClass::full_cube(2));
  CHECK(generate(parse_generator_spec("simplicial,n=2,facets={1,2}")) ==
        ConceptClass::full_cube(2));
  CHECK(generate(parse_generator_spec("simplicial,n=3,facets={1,2};{3}")) ==
        cls({"000", "100", "010", "110", "001"}));
  auto prod = generate(parse_generator_spec("product,factors=cube,n=1|hamming_ball,n=2,d=1"));
  CHECK(prod.n() == 3);
  CHECK(prod.size() == 6);
  for (int n = 1; n <= 9; ++n)
    for (int d = 0; d <= n; ++d) {
      GeneratorSpec spec;
      spec.kind = GeneratorKind::hamming_ball;
      spec.n = n;
      spec.d = d;
      auto b = generate(spec);
      CHECK(b.size() == phi(d, n));
      CHECK(vc_dim(b) == d);
      CHECK(is_maximum(b));
    }
  for (auto kind : {GeneratorKind::random_ample, GeneratorKind::poset_ideals,
                    GeneratorKind::convex_geometry}) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      GeneratorSpec spec;
      spec.kind = kind;
      spec.n = 7;
      spec.seed = seed;
      auto a = generate(spec);
      CHECK(is_ample(a).ample);
      CHECK(generate(spec) == a);
    }
  }
  GeneratorSpec capped;
  capped.kind = GeneratorKind::random_ample;
  capped.n = 8;
  capped.max_dim = 2;
  capped.size = 40;
  auto small = generate(capped);
  CHECK(vc_dim(small) <= 2);
  CHECK(is_ample(small).ample);
  CHECK_THROWS_AS(parse_generator_spec("sphere,n=3"), UsageError);
  CHECK_THROWS_AS(generate(parse_generator_spec("hamming_ball,n=3,d=-1")), UsageError);
  CHECK(generate(parse_generator_spec("hamming_ball,n=3,d=4")) == ConceptClass::full_cube(3));
  CHECK_THROWS_AS(generate(parse_generator_spec("cube,n=30")), UsageError);
  CHECK(to_string(GeneratorKind::hamming_ball) == "hamming_ball");
}

TEST_CASE("batch driver") {
  auto dir = scratch_dir();
  auto good = (dir / "good.txt").string();
  auto bad = (dir / "bad.txt").string();
  auto twin = (dir / "twin.txt").string();
  emit(good, cls({"00", "01", "10"}));
  emit(twin, cls({"00", "11"}));
  std::ofstream(bad) << "n=2\n0\n";
  auto checks = parse_batch_checks("all");
  CHECK(checks.characterizations);
  CHECK(checks.repmap);
  CHECK_THROWS_AS(parse_batch_checks("ample,bogus"), UsageError);
  CHECK(batch_header() ==
        "file,n,size,vc_dim,shattered,strongly_shattered,sandwich,sauer,ample,maximum,"
        "characterizations,corners,peel,repmap,error");
  auto row = batch_row(good, checks);
  CHECK(row.error.empty());
  CHECK(row.ample);
  CHECK(row.maximum);
  CHECK(row.peel == "found");
  CHECK(row.repmap == "ok");
  CHECK(row.corners == "2");
  CHECK_FALSE(row.failed());
  std::ostringstream out;
  CHECK(batch({good}, checks, out) == 0);
  CHECK(batch({good, twin}, checks, out) == 0);
  std::ostringstream out2;
  CHECK(batch({good, bad}, checks, out2) == 2);
  CHECK(out2.str().find("bad.txt") != std::string::npos);
}
