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

#include "amplekit/peeling.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "amplekit/graph.hpp"
#include "amplekit/shatter.hpp"

namespace amplekit {

namespace {

void check_permutation(const ConceptClass& c, std::span<const Concept> order) {
  if (order.size() != c.size())
    throw ValidationError("ordering has " + std::to_string(order.size()) +
                              " entries for a class of " + std::to_string(c.size()),
                          std::min(order.size(), c.size()));
  std::vector<bool> seen(c.size(), false);
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto k = c.index_of(order[i]);
    if (k < 0) throw ValidationError("ordering contains a concept outside the class", i);
    if (seen[static_cast<std::size_t>(k)])
      throw ValidationError("ordering repeats a concept", i);
    seen[static_cast<std::size_t>(k)] = true;
  }
}

void insert_sorted(std::vector<Concept>& v, Concept c) {
  v.insert(std::upper_bound(v.begin(), v.end(), c), c);
}

}  // namespace

OrderingClassification classify_ordering(const ConceptClass& c, std::span<const Concept> order) {
  check_permutation(c, order);
  OrderingClassification out{true, true, true, true};
  std::vector<Concept> level;
  level.reserve(order.size());
  for (Concept ci : order) {
    insert_sorted(level, ci);
    if (out.ample) out.ample = is_ample(level, c.n());
    if (out.corner_peeling) out.corner_peeling = is_corner(level, ci);
    if (out.isometric) out.isometric = is_isometric(level, c.n(), IsometryMode::full);
    if (out.weakly_isometric) out.weakly_isometric = is_isometric(level, c.n(), IsometryMode::weak);
  }
  return out;
}

PeelResult corner_peeling_search(const ConceptClass& c, std::uint64_t budget) {
  if (!is_ample(c)) throw ContractError("corner peeling search requires an ample class");

  struct Frame {
    std::vector<Concept> candidates;
    std::size_t next = 0;
  };
  const std::size_t m = c.size();
  std::vector<bool> alive(m, true);
  std::vector<Concept> remaining(c.begin(), c.end());
  std::vector<Concept> removed;
  std::set<std::vector<bool>> dead;
  PeelResult result;

  auto corners_of = [&]() {
    std::vector<Concept> out;
    for (Concept x : remaining)
      if (is_corner(remaining, x)) out.push_back(x);
    return out;
  };

  std::vector<Frame> stack;
  ++result.expansions;
  stack.push_back({corners_of(), 0});
  bool exhausted = false;
  while (!stack.empty()) {
    if (remaining.empty()) break;
    Frame& top = stack.back();
    if (top.next == top.candidates.size()) {
      dead.insert(alive);
      stack.pop_back();
      if (removed.empty()) break;
      Concept back = removed.back();
      removed.pop_back();
      insert_sorted(remaining, back);
      alive[static_cast<std::size_t>(c.index_of(back))] = true;
      continue;
    }
    if (result.expansions >= budget) {
      exhausted = true;
      break;
    }
    Concept pick = top.candidates[top.next++];
    remaining.erase(std::lower_bound(remaining.begin(), remaining.end(), pick));
    alive[static_cast<std::size_t>(c.index_of(pick))] = false;
    removed.push_back(pick);
    if (!remaining.empty() && dead.count(alive)) {
      removed.pop_back();
      insert_sorted(remaining, pick);
      alive[static_cast<std::size_t>(c.index_of(pick))] = true;
      continue;
    }
    ++result.expansions;
    stack.push_back({corners_of(), 0});
  }

  if (remaining.empty()) {
    result.status = PeelStatus::found;
    result.ordering.assign(removed.rbegin(), removed.rend());
  } else {
    result.status = exhausted ? PeelStatus::budget_exhausted : PeelStatus::not_peelable_proven;
  }
  return result;
}

std::optional<std::string> antimatroid_violation(const ConceptClass& c) {
  if (!c.contains(0)) return "empty set is not a member";
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (!c.contains(c[i] & c[j]))
        return "not closed under intersection: " + to_bitstring(c[i], c.n()) + " and " +
               to_bitstring(c[j], c.n());
  for (Concept x : c) {
    Mask extremal = 0;
    for (Mask rest = x; rest; rest &= rest - 1) {
      Mask bit = rest & (~rest + 1);
      if (c.contains(x & ~bit)) extremal |= bit;
    }
    Mask closure = c.domain_mask();
    for (Concept y : c)
      if (is_subset(extremal, y)) closure &= y;
    if (closure != x)
      return "concept " + to_bitstring(x, c.n()) + " is not generated by its extremal points";
  }
  return std::nullopt;
}

Ordering antimatroid_peeling(const ConceptClass& c) {
  if (auto why = antimatroid_violation(c))
    throw ContractError("not a conditional antimatroid: " + *why);
  Ordering order(c.begin(), c.end());
  std::stable_sort(order.begin(), order.end(),
                   [](Concept a, Concept b) { return popcount(a) < popcount(b); });
  return order;
}

Ordering two_dim_peeling(const ConceptClass& c) {
  if (vc_dim(c) > 2) throw ContractError("two-dimensional peeling requires vc_dim <= 2");
  if (!is_ample(c)) throw ContractError("two-dimensional peeling requires an ample class");
  InclusionGraph g(c);
  const std::size_t m = c.size();
  std::vector<int> placed_neighbors(m, 0);
  std::vector<bool> placed(m, false);
  Ordering order;
  order.reserve(m);
  auto place = [&](std::size_t i) {
    placed[i] = true;
    order.push_back(c[i]);
    for (int j : g.neighbors(i)) ++placed_neighbors[static_cast<std::size_t>(j)];
  };
  place(0);
  while (order.size() < m) {
    std::size_t best = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (placed[i]) continue;
      if (best == m || placed_neighbors[i] > placed_neighbors[best]) best = i;
    }
    place(best);
  }
  return order;
}

namespace {

bool cube_in(std::span<const Concept> sorted, const Cube& q) {
  bool inside = true;
  for_each_subset(q.support, [&](Mask sub) {
    if (inside && !sorted_contains(sorted, q.tag | sub)) inside = false;
  });
  return inside;
}

// Collapsing sequence for a class whose concepts use bits below `k` only.
CollapseSequence collapse_rec(const std::vector<Concept>& sorted, int k) {
  if (k == 0) return CollapseSequence{{}, Cube{0, 0}};
  const Mask bit = Mask{1} << (k - 1);
  std::vector<Concept> projected;
  projected.reserve(sorted.size());
  for (Concept c : sorted) projected.push_back(c & ~bit);
  projected = canonical(std::move(projected));
  CollapseSequence base = collapse_rec(projected, k - 1);

  // Lifts of a cube of C_x: both copies plus the x-extended cube when it lies
  // in the hyperplane, otherwise the unique copy present in C.
  auto in_hyperplane = [&](const Cube& q) {
    return cube_in(sorted, q) && cube_in(sorted, Cube{q.tag | bit, q.support});
  };
  auto unique_lift = [&](const Cube& q) {
    if (cube_in(sorted, q)) return q;
    Cube up{q.tag | bit, q.support};
    if (!cube_in(sorted, up))
      throw IntegrityError("cube " + format_cube(q, k) + " has no lift; class is not ample");
    return up;
  };

  CollapseSequence out;
  for (const CollapsePair& p : base.pairs) {
    const bool face_hyper = in_hyperplane(p.face);
    const bool coface_hyper = in_hyperplane(p.coface);
    if (!face_hyper && !coface_hyper) {
      out.pairs.push_back({unique_lift(p.face), unique_lift(p.coface)});
    } else if (face_hyper && coface_hyper) {
      out.pairs.push_back({Cube{p.face.tag, p.face.support | bit},
                           Cube{p.coface.tag, p.coface.support | bit}});
      out.pairs.push_back({p.face, p.coface});
      out.pairs.push_back({Cube{p.face.tag | bit, p.face.support},
                           Cube{p.coface.tag | bit, p.coface.support}});
    } else if (face_hyper) {
      Cube coface = unique_lift(p.coface);
      Mask side = coface.tag & bit;
      Cube near{p.face.tag | side, p.face.support};
      Cube far{p.face.tag | (side ^ bit), p.face.support};
      out.pairs.push_back({far, Cube{p.face.tag, p.face.support | bit}});
      out.pairs.push_back({near, coface});
    } else {
      throw IntegrityError("coface in the hyperplane but face not; inconsistent sequence");
    }
  }
  const Cube& v = base.survivor;
  if (in_hyperplane(v)) {
    out.pairs.push_back({Cube{v.tag | bit, 0}, Cube{v.tag, bit}});
    out.survivor = v;
  } else {
    out.survivor = unique_lift(v);
  }
  return out;
}

}  // namespace

CollapseSequence collapse_sequence(const ConceptClass& c) {
  if (!is_ample(c)) throw ContractError("collapse sequence requires an ample class");
  std::vector<Concept> sorted(c.begin(), c.end());
  return collapse_rec(sorted, c.n());
}

CollapseReplay replay_collapse(const ConceptClass& c, const CollapseSequence& seq) {
  std::unordered_set<std::uint64_t> faces;
  for (const Cube& q : cube_complex(c)) faces.insert(q.key());
  const int n = c.n();
  auto cofaces = [&](const Cube& q) {
    // Faces of a cube complex are closed under taking faces, so every face
    // strictly above q contains a face one dimension up.
    int count = 0;
    for (int i = 0; i < n; ++i) {
      Mask bit = Mask{1} << i;
      if (q.support & bit) continue;
      if (faces.count(Cube{q.tag & ~bit, q.support | bit}.key())) ++count;
    }
    return count;
  };
  for (std::size_t step = 0; step < seq.pairs.size(); ++step) {
    const auto& [face, coface] = seq.pairs[step];
    auto fail = [&](std::string why) { return CollapseReplay{false, step, std::move(why)}; };
    if (!faces.count(face.key())) return fail("face " + format_cube(face, n) + " not present");
    if (!faces.count(coface.key())) return fail("coface " + format_cube(coface, n) + " not present");
    if (coface.dim() != face.dim() + 1 || !coface.contains(face))
      return fail("coface is not a facet-parent of the face");
    if (cofaces(face) != 1 || cofaces(coface) != 0)
      return fail("face " + format_cube(face, n) + " is not free");
    faces.erase(face.key());
    faces.erase(coface.key());
  }
  if (faces.size() != 1 || !faces.count(seq.survivor.key()) || seq.survivor.dim() != 0)
    return CollapseReplay{false, seq.pairs.size(), "collapse does not end at the survivor vertex"};
  return CollapseReplay{true, seq.pairs.size(), ""};
}

std::optional<std::size_t> first_non_isometric_level(int n, std::span<const Concept> order) {
  std::vector<Concept> level;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (sorted_contains(level, order[i])) return i;
    insert_sorted(level, order[i]);
    if (!is_isometric(level, n, IsometryMode::full)) return i;
  }
  return std::nullopt;
}

namespace {

// Signed-set form: bit i is +x_{i+1}, bit n+i is -x_{i+1}.
std::uint64_t signed_set(Concept facet, int n) {
  std::uint64_t plus = facet;
  std::uint64_t minus = (~facet) & full_mask(n);
  return plus | (minus << n);
}

}  // namespace

std::optional<std::size_t> first_shelling_violation(const ShellingOrder& sh) {
  const int n = sh.n;
  std::vector<std::uint64_t> sigma;
  for (Concept f : sh.facets) {
    if (!is_subset(f, full_mask(n))) return sigma.size();
    sigma.push_back(signed_set(f, n));
  }
  for (std::size_t j = 0; j < sigma.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (sigma[i] == sigma[j]) return j;
      const std::uint64_t shared = sigma[i] & sigma[j];
      bool witnessed = false;
      for (std::size_t k = 0; k < j && !witnessed; ++k) {
        const std::uint64_t ridge = sigma[k] & sigma[j];
        witnessed = std::popcount(ridge) == n - 1 && (shared & ~ridge) == 0;
      }
      if (!witnessed) return j;
    }
  }
  return std::nullopt;
}

ShellingOrder ordering_to_shelling(int n, std::span<const Concept> order) {
  if (auto bad = first_non_isometric_level(n, order))
    throw ValidationError("ordering is not isometric", *bad);
  return ShellingOrder{n, std::vector<Concept>(order.begin(), order.end())};
}

Ordering shelling_to_ordering(const ShellingOrder& sh) {
  if (auto bad = first_shelling_violation(sh))
    throw ValidationError("facet order is not a partial shelling", *bad);
  return Ordering(sh.facets.begin(), sh.facets.end());
}

std::string format_facet(Concept facet, int n) {
  std::string out = "{";
  for (int i = 0; i < n; ++i) {
    if (i) out += ',';
    out += (facet & (Mask{1} << i)) ? '+' : '-';
    out += std::to_string(i + 1);
  }
  out += '}';
  return out;
}

}  // namespace amplekit
