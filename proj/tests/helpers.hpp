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

#include <initializer_list>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "amplekit/core.hpp"

namespace amplekit::testing {

// Bitstring literal, leftmost character = coordinate 1.
inline Concept bits(const std::string& s) { return parse_bitstring(s, static_cast<int>(s.size())); }

inline ConceptClass cls(std::initializer_list<const char*> items) {
  int n = -1;
  std::vector<Concept> out;
  for (const char* s : items) {
    n = static_cast<int>(std::string(s).size());
    out.push_back(bits(s));
  }
  return ConceptClass(n, out);
}

inline CoordSet coords(std::initializer_list<int> xs) {
  CoordSet out = 0;
  for (int x : xs) out |= coord_bit(x);
  return out;
}

inline std::vector<std::string> strings(const ConceptClass& c) {
  std::vector<std::string> out;
  for (Concept x : c) out.push_back(to_bitstring(x, c.n()));
  return out;
}

// Brute-force oracles, written from the definitions.

inline bool oracle_shattered(const ConceptClass& c, CoordSet y) {
  std::set<Concept> seen;
  for (Concept x : c) seen.insert(x & y);
  return seen.size() == (std::size_t{1} << popcount(y));
}

inline bool oracle_cube_in(const ConceptClass& c, Concept tag, CoordSet y) {
  for (Mask sub = 0; sub <= y; ++sub)
    if (is_subset(sub, y) && !c.contains((tag & ~y) | sub)) return false;
  return true;
}

inline bool oracle_strongly_shattered(const ConceptClass& c, CoordSet y) {
  for (Concept x : c)
    if (oracle_cube_in(c, x, y)) return true;
  return false;
}

inline std::vector<CoordSet> oracle_family(const ConceptClass& c, bool strong) {
  std::vector<CoordSet> out;
  for (Mask y = 0; y <= c.domain_mask(); ++y)
    if (strong ? oracle_strongly_shattered(c, y) : oracle_shattered(c, y)) out.push_back(y);
  return out;
}

// All-pairs graph distances by Floyd–Warshall; -1 for unreachable.
inline std::vector<std::vector<int>> oracle_distances(std::span<const Concept> v) {
  const std::size_t m = v.size();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(m, std::vector<int>(m, inf));
  for (std::size_t i = 0; i < m; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < m; ++j)
      if (popcount(v[i] ^ v[j]) == 1) d[i][j] = 1;
  }
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (int& x : row)
      if (x >= inf) x = -1;
  return d;
}

inline bool oracle_isometric(std::span<const Concept> v) {
  auto d = oracle_distances(v);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (d[i][j] != popcount(v[i] ^ v[j])) return false;
  return true;
}

inline ConceptClass class_from_index(int n, std::uint64_t index) {
  std::vector<Concept> out;
  for (Concept v = 0; index; ++v, index >>= 1)
    if (index & 1U) out.push_back(v);
  return ConceptClass(n, out);
}

}  // namespace amplekit::testing
