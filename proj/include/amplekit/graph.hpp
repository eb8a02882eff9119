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

#include <span>
#include <string>
#include <vector>

#include "amplekit/core.hpp"

namespace amplekit {

struct Edge {
  Concept from = 0;  // the endpoint without the coordinate
  Concept to = 0;
  int coord = 0;     // 1-based differing coordinate

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// G(C): the subgraph of the hypercube induced by C. Vertices are indexed in
/// canonical concept order.
class InclusionGraph {
 public:
  InclusionGraph(std::span<const Concept> sorted, int n);
  explicit InclusionGraph(const ConceptClass& c);

  int n() const { return n_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  Concept vertex(std::size_t i) const { return vertices_[i]; }
  std::span<const Concept> vertices() const { return vertices_; }
  std::span<const int> neighbors(std::size_t i) const {
    return {adjacency_.data() + offsets_[i], adjacency_.data() + offsets_[i + 1]};
  }
  int index_of(Concept c) const;
  std::vector<Edge> edges() const;

  // Hop distances from `source`; -1 where unreachable.
  std::vector<int> distances_from(std::size_t source) const;
  bool connected() const;

 private:
  int n_;
  std::vector<Concept> vertices_;
  std::vector<std::size_t> offsets_;
  std::vector<int> adjacency_;
};

bool is_connected(std::span<const Concept> sorted, int n);

// Cubes of C not properly contained in another cube of C.
std::vector<Cube> maximal_cubes(std::span<const Concept> sorted, int n);
std::vector<Cube> maximal_cubes(const ConceptClass& c);

// Concepts lying in exactly one maximal cube, via the maximal cubes.
std::vector<Concept> corners(const ConceptClass& c);
std::vector<Concept> corners(std::span<const Concept> sorted, int n);

// Local test: the cube spanned by c and all its neighbours lies in C.
bool is_corner(std::span<const Concept> sorted, Concept c);

enum class IsometryMode { full, weak };

// Disconnected classes are never isometric in either mode.
bool is_isometric(std::span<const Concept> sorted, int n, IsometryMode mode);
bool is_isometric(const ConceptClass& c, IsometryMode mode = IsometryMode::full);

/// A path of parallel cubes where consecutive cubes span a cube one
/// dimension higher inside the class.
struct Gallery {
  std::vector<Cube> cubes;
  std::size_t length() const { return cubes.empty() ? 0 : cubes.size() - 1; }
};

// Shortest gallery between two parallel cubes of C. Throws ContractError if
// the cubes are not parallel cubes of C, NotConnectedError if none exists.
Gallery gallery(const ConceptClass& c, const Cube& from, const Cube& to);

// Interval condition B(c,c') ∩ C ⊆ C' for pairs at distance 2 / all pairs.
bool is_locally_convex(const ConceptClass& sub, const ConceptClass& c);
bool is_convex(const ConceptClass& sub, const ConceptClass& c);

// DOT rendering: vertices named by bitstring, edge label = coordinate.
std::string to_dot(const ConceptClass& c);

}  // namespace amplekit
