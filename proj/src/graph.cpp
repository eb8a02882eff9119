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

#include "amplekit/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_set>

namespace amplekit {

InclusionGraph::InclusionGraph(std::span<const Concept> sorted, int n)
    : n_(n), vertices_(sorted.begin(), sorted.end()) {
  offsets_.reserve(vertices_.size() + 1);
  offsets_.push_back(0);
  for (Concept c : vertices_) {
    for (int i = 0; i < n; ++i) {
      int j = index_of(c ^ (Mask{1} << i));
      if (j >= 0) adjacency_.push_back(j);
    }
    offsets_.push_back(adjacency_.size());
  }
}

InclusionGraph::InclusionGraph(const ConceptClass& c) : InclusionGraph(c.concepts(), c.n()) {}

int InclusionGraph::index_of(Concept c) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), c);
  if (it == vertices_.end() || *it != c) return -1;
  return static_cast<int>(it - vertices_.begin());
}

std::vector<Edge> InclusionGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (int j : neighbors(i)) {
      Concept a = vertices_[i];
      Concept b = vertices_[static_cast<std::size_t>(j)];
      if (a < b) out.push_back({a, b, std::countr_zero(a ^ b) + 1});
    }
  }
  return out;
}

std::vector<int> InclusionGraph::distances_from(std::size_t source) const {
  std::vector<int> dist(vertices_.size(), -1);
  std::vector<std::size_t> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t u = queue[head];
    for (int v : neighbors(u)) {
      auto vi = static_cast<std::size_t>(v);
      if (dist[vi] >= 0) continue;
      dist[vi] = dist[u] + 1;
      queue.push_back(vi);
    }
  }
  return dist;
}

bool InclusionGraph::connected() const {
  if (vertices_.empty()) return true;
  auto dist = distances_from(0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool is_connected(std::span<const Concept> sorted, int n) {
  return InclusionGraph(sorted, n).connected();
}

std::vector<Cube> maximal_cubes(std::span<const Concept> sorted, int n) {
  auto cubes = cube_complex(sorted, n);
  std::unordered_set<std::uint64_t> present;
  for (const Cube& q : cubes) present.insert(q.key());
  std::vector<Cube> out;
  for (const Cube& q : cubes) {
    bool maximal = true;
    for (int i = 0; i < n && maximal; ++i) {
      Mask bit = Mask{1} << i;
      if (q.support & bit) continue;
      if (present.count(Cube{q.tag & ~bit, q.support | bit}.key())) maximal = false;
    }
    if (maximal) out.push_back(q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cube> maximal_cubes(const ConceptClass& c) { return maximal_cubes(c.concepts(), c.n()); }

std::vector<Concept> corners(std::span<const Concept> sorted, int n) {
  std::map<Concept, int> count;
  for (const Cube& q : maximal_cubes(sorted, n))
    for_each_subset(q.support, [&](Mask sub) { ++count[q.tag | sub]; });
  std::vector<Concept> out;
  for (auto [c, k] : count)
    if (k == 1) out.push_back(c);
  return out;
}

std::vector<Concept> corners(const ConceptClass& c) { return corners(c.concepts(), c.n()); }

bool is_corner(std::span<const Concept> sorted, Concept c) {
  if (!sorted_contains(sorted, c)) return false;
  Mask span_bits = 0;
  for (int i = 0; i < kMaxDomain; ++i) {
    Mask bit = Mask{1} << i;
    if (sorted_contains(sorted, c ^ bit)) span_bits |= bit;
  }
  bool inside = true;
  for_each_subset(span_bits, [&](Mask sub) {
    if (inside && !sorted_contains(sorted, c ^ sub)) inside = false;
  });
  return inside;
}

bool is_isometric(std::span<const Concept> sorted, int n, IsometryMode mode) {
  InclusionGraph g(sorted, n);
  if (!g.connected()) return false;
  if (mode == IsometryMode::full) {
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
      auto dist = g.distances_from(i);
      for (std::size_t j = i + 1; j < g.vertex_count(); ++j)
        if (dist[j] != popcount(g.vertex(i) ^ g.vertex(j))) return false;
    }
    return true;
  }
  // Pairs at Hamming distance 2 need a common neighbour inside the class.
  for (Concept c : sorted) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        Mask bi = Mask{1} << i, bj = Mask{1} << j;
        if (!sorted_contains(sorted, c ^ bi ^ bj)) continue;
        if (!sorted_contains(sorted, c ^ bi) && !sorted_contains(sorted, c ^ bj)) return false;
      }
    }
  }
  return true;
}

bool is_isometric(const ConceptClass& c, IsometryMode mode) {
  return is_isometric(c.concepts(), c.n(), mode);
}

namespace {

bool cube_inside(const ConceptClass& c, const Cube& q) {
  bool inside = true;
  for_each_subset(q.support, [&](Mask sub) {
    if (inside && !c.contains(q.tag | sub)) inside = false;
  });
  return inside;
}

}  // namespace

Gallery gallery(const ConceptClass& c, const Cube& from, const Cube& to) {
  if (from.support != to.support)
    throw ContractError("gallery endpoints must be parallel cubes");
  if ((from.tag & from.support) || (to.tag & to.support))
    throw ContractError("cube tag overlaps its support");
  if (!cube_inside(c, from) || !cube_inside(c, to))
    throw ContractError("gallery endpoints must be cubes of the class");
  const Mask y = from.support;
  auto tags = reduction_tags(c.concepts(), y);
  InclusionGraph g(tags, c.n());
  auto src = static_cast<std::size_t>(g.index_of(from.tag));
  int dst = g.index_of(to.tag);
  std::vector<int> parent(g.vertex_count(), -1);
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<std::size_t> queue{src};
  seen[src] = true;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (int v : g.neighbors(u)) {
      auto vi = static_cast<std::size_t>(v);
      if (seen[vi]) continue;
      seen[vi] = true;
      parent[vi] = static_cast<int>(u);
      queue.push_back(vi);
    }
  }
  if (!seen[static_cast<std::size_t>(dst)])
    throw NotConnectedError("no gallery between " + format_cube(from, c.n()) + " and " +
                            format_cube(to, c.n()));
  Gallery out;
  for (int v = dst; v >= 0; v = parent[static_cast<std::size_t>(v)]) {
    out.cubes.push_back(Cube{g.vertex(static_cast<std::size_t>(v)), y});
    if (static_cast<std::size_t>(v) == src) break;
  }
  std::reverse(out.cubes.begin(), out.cubes.end());
  return out;
}

namespace {

void check_subclass(const ConceptClass& sub, const ConceptClass& c) {
  if (sub.n() != c.n()) throw DomainError("subclass lives on a different domain");
  for (Concept x : sub)
    if (!c.contains(x)) throw ContractError("subclass is not contained in the class");
}

bool interval_closed(const ConceptClass& sub, const ConceptClass& c, bool only_distance_two) {
  check_subclass(sub, c);
  for (std::size_t i = 0; i < sub.size(); ++i) {
    for (std::size_t j = i + 1; j < sub.size(); ++j) {
      Cube box = interval(sub[i], sub[j]);
      if (only_distance_two && box.dim() != 2) continue;
      for (Concept t : c)
        if (box.contains(t) && !sub.contains(t)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_locally_convex(const ConceptClass& sub, const ConceptClass& c) {
  return interval_closed(sub, c, true);
}

bool is_convex(const ConceptClass& sub, const ConceptClass& c) {
  return interval_closed(sub, c, false);
}

std::string to_dot(const ConceptClass& c) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Concept x : c) out << "  \"" << to_bitstring(x, c.n()) << "\";\n";
  for (const Edge& e : InclusionGraph(c).edges())
    out << "  \"" << to_bitstring(e.from, c.n()) << "\" -- \"" << to_bitstring(e.to, c.n())
        << "\" [label=\"" << e.coord << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace amplekit
