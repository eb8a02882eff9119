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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "amplekit/core.hpp"

namespace amplekit {

// Invalid generator parameters or a malformed spec string.
class UsageError : public Error {
 public:
  using Error::Error;
};

enum class GeneratorKind {
  cube,
  hamming_ball,
  simplicial,
  product,
  random_ample,
  poset_ideals,
  convex_geometry,
};

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::cube;
  int n = 0;
  int d = 0;                        // hamming_ball radius
  std::uint64_t seed = 1;
  std::size_t size = 0;             // random_ample target; 0 means 2^(n-1)
  int max_dim = -1;                 // random_ample VC cap; -1 means none
  double density = 0.3;             // poset_ideals relation probability
  int chains = 2;                   // convex_geometry shelling count
  std::vector<CoordSet> facets;     // simplicial
  std::vector<GeneratorSpec> factors;  // product

  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

// Throws UsageError on an invalid spec.
ConceptClass generate(const GeneratorSpec& spec);

// "hamming_ball,n=3,d=1", "random_ample,n=6,size=20,seed=7,max_dim=2",
// "simplicial,n=3,facets={1,2};{3}", "product,factors=cube,n=1|hamming_ball,n=2,d=1".
GeneratorSpec parse_generator_spec(std::string_view text);
std::string to_string(GeneratorKind kind);

}  // namespace amplekit
