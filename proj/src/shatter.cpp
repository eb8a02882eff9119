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

#include "amplekit/shatter.hpp"

#include <algorithm>
#include <iterator>

#include "amplekit/graph.hpp"

namespace amplekit {

SetFamily::SetFamily(int n, std::vector<CoordSet> members)
    : n_(n), members_(canonical(std::move(members))) {}

bool SetFamily::contains(CoordSet s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

int SetFamily::dimension() const {
  int d = -1;
  for (CoordSet s : members_) d = std::max(d, popcount(s));
  return d;
}

bool SetFamily::is_downward_closed() const {
  for (CoordSet s : members_) {
    for (Mask rest = s; rest; rest &= rest - 1) {
      Mask bit = rest & (~rest + 1);
      if (!contains(s & ~bit)) return false;
    }
  }
  return true;
}

namespace {

// X̄ of `part`, whose concepts all agree above `bit`. Split on `bit`:
// Y without `bit` is shattered iff the projection dropping `bit` shatters
// it, and Y' + bit is shattered iff both halves shatter Y'.
std::vector<CoordSet> shattered_rec(std::span<const Concept> part, int bit) {
  if (part.empty()) return {};
  if (bit < 0 || part.size() == 1) return {0};
  const Mask b = Mask{1} << bit;
  const auto cut = static_cast<std::size_t>(
      std::partition_point(part.begin(), part.end(), [b](Concept c) { return (c & b) == 0; }) -
      part.begin());
  auto lo_part = part.subspan(0, cut);
  auto hi_part = part.subspan(cut);
  if (lo_part.empty() || hi_part.empty()) return shattered_rec(part, bit - 1);
  std::vector<Concept> proj;
  proj.reserve(part.size());
  std::vector<Concept> hi_cleared;
  hi_cleared.reserve(hi_part.size());
  for (Concept c : hi_part) hi_cleared.push_back(c & ~b);
  std::set_union(lo_part.begin(), lo_part.end(), hi_cleared.begin(), hi_cleared.end(),
                 std::back_inserter(proj));
  auto out = shattered_rec(proj, bit - 1);
  auto lo = shattered_rec(lo_part, bit - 1);
  auto hi = shattered_rec(hi_part, bit - 1);
  std::vector<CoordSet> both;
  std::set_intersection(lo.begin(), lo.end(), hi.begin(), hi.end(), std::back_inserter(both));
  // Members with `bit` exceed every member without it; order is preserved.
  for (CoordSet s : both) out.push_back(s | b);
  return out;
}

}  // namespace

std::vector<CoordSet> shattered_sets(std::span<const Concept> sorted, int n) {
  return shattered_rec(sorted, n - 1);
}

std::vector<CoordSet> shattered_sets_naive(std::span<const Concept> sorted, int n) {
  std::vector<CoordSet> out;
  if (sorted.empty()) return out;
  std::vector<Mask> seen;
  for (Mask y = 0;; ++y) {
    seen.clear();
    for (Concept c : sorted) seen.push_back(c & y);
    seen = canonical(std::move(seen));
    if (seen.size() == (std::size_t{1} << popcount(y))) out.push_back(y);
    if (y == full_mask(n)) break;
  }
  return out;
}

std::vector<CoordSet> strongly_shattered_sets(std::span<const Concept> sorted, int n) {
  std::vector<CoordSet> out;
  for (const Cube& q : cube_complex(sorted, n)) out.push_back(q.support);
  return canonical(std::move(out));
}

SetFamily shattered_complex(const ConceptClass& c) {
  return SetFamily(c.n(), shattered_sets(c.concepts(), c.n()));
}

SetFamily strongly_shattered_complex(const ConceptClass& c) {
  return SetFamily(c.n(), strongly_shattered_sets(c.concepts(), c.n()));
}

int vc_dim(const ConceptClass& c) { return shattered_complex(c).dimension(); }

std::uint64_t phi(int d, int n) {
  if (d < 0 || n < 0) return 0;
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // binom(n, i)
  for (int i = 0; i <= std::min(d, n); ++i) {
    total += binom;
    binom = binom * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
  }
  return total;
}

bool is_ample(std::span<const Concept> sorted, int n) {
  return shattered_sets(sorted, n).size() == sorted.size();
}

AmpleResult is_ample(const ConceptClass& c) {
  auto upper = shattered_sets(c.concepts(), c.n());
  AmpleResult result;
  result.ample = upper.size() == c.size();
  if (!result.ample) {
    auto lower = strongly_shattered_sets(c.concepts(), c.n());
    std::vector<CoordSet> diff;
    std::set_difference(upper.begin(), upper.end(), lower.begin(), lower.end(),
                        std::back_inserter(diff));
    if (diff.empty())
      throw IntegrityError("class is not ample but every shattered set is strongly shattered");
    result.witness = diff.front();
  }
  return result;
}

bool is_maximum(const ConceptClass& c) {
  return c.size() == phi(vc_dim(c), c.n());
}

std::vector<Concept> complement_of(std::span<const Concept> sorted, int n) {
  std::vector<Concept> out;
  std::size_t j = 0;
  for (Mask x = 0;; ++x) {
    if (j < sorted.size() && sorted[j] == x)
      ++j;
    else
      out.push_back(x);
    if (x == full_mask(n)) break;
  }
  return out;
}

// C^Y on the original coordinates, as the tags of Y-cubes.
bool all_reductions_connected(std::span<const Concept> sorted, int n) {
  for (Mask y = 0;; ++y) {
    auto tags = reduction_tags(sorted, y);
    if (!tags.empty() && !is_connected(tags, n)) return false;
    if (y == full_mask(n)) break;
  }
  return true;
}

bool AmpleReport::agree() const {
  std::vector<bool> values = {ample,
                              complement_ample,
                              complexes_equal,
                              strong_count_matches,
                              shattered_count_matches,
                              reductions_connected,
                              connected_with_ample_hyperplanes};
  for (const auto& opt : {cube_intersections_ample, reduction_commutes, lopsided_partitions})
    if (opt) values.push_back(*opt);
  return std::all_of(values.begin(), values.end(), [&](bool v) { return v == values.front(); });
}

AmpleReport ample_characterization_report(const ConceptClass& c) {
  const int n = c.n();
  const Mask all = c.domain_mask();
  auto concepts = c.concepts();
  auto upper = shattered_sets(concepts, n);
  auto lower = strongly_shattered_sets(concepts, n);
  auto star = complement_of(concepts, n);

  AmpleReport r;
  r.ample = upper.size() == c.size();
  r.complement_ample = shattered_sets(star, n).size() == star.size();
  r.complexes_equal = upper == lower;
  r.strong_count_matches = lower.size() == c.size();
  r.shattered_count_matches = upper.size() == c.size();

  if (n <= kCubeConditionCap) {
    bool ok = true;
    std::vector<Concept> part;
    for (Mask s = 0; ok; ++s) {
      // Every cube of 2^X with support s: bucket C by tag.
      Mask off = all & ~s;
      std::vector<std::pair<Mask, Concept>> keyed;
      keyed.reserve(concepts.size());
      for (Concept x : concepts) keyed.emplace_back(x & off, x);
      std::sort(keyed.begin(), keyed.end());
      for (std::size_t i = 0; i < keyed.size() && ok;) {
        std::size_t j = i;
        part.clear();
        while (j < keyed.size() && keyed[j].first == keyed[i].first) part.push_back(keyed[j++].second);
        ok = is_ample(part, n);
        i = j;
      }
      if (s == all) break;
    }
    r.cube_intersections_ample = ok;
  }

  if (n <= kPartitionConditionCap) {
    bool commutes = true;
    bool lopsided = true;
    auto lower_star = strongly_shattered_sets(star, n);
    for (Mask y = 0;; ++y) {
      const Mask z = all & ~y;
      // (C^Y)_Z and (C_Z)^Y both live on the empty domain; compare as sets.
      auto reduced = reduce(c, y);
      bool left = reduced.has_value();
      auto dropped = drop(c, z);
      bool right = reduce(dropped, dropped.domain_mask()).has_value();
      if (left != right) commutes = false;
      bool y_strong = std::binary_search(lower.begin(), lower.end(), y);
      bool z_star = std::binary_search(lower_star.begin(), lower_star.end(), z);
      if (!y_strong && !z_star) lopsided = false;
      if (y == all) break;
    }
    r.reduction_commutes = commutes;
    r.lopsided_partitions = lopsided;
  }

  r.reductions_connected = all_reductions_connected(concepts, n);

  bool hyperplanes_ample = true;
  for (int x = 1; x <= n && hyperplanes_ample; ++x) {
    auto tags = reduction_tags(concepts, coord_bit(x));
    hyperplanes_ample = is_ample(tags, n);
  }
  r.connected_with_ample_hyperplanes = is_connected(concepts, n) && hyperplanes_ample;
  return r;
}

std::vector<Concept> missing_patterns(std::span<const Concept> sorted, CoordSet y) {
  std::vector<Concept> present;
  present.reserve(sorted.size());
  for (Concept c : sorted) present.push_back(c & y);
  present = canonical(std::move(present));
  std::vector<Concept> missing;
  for_each_subset(y, [&](Mask p) {
    if (!std::binary_search(present.begin(), present.end(), p)) missing.push_back(p);
  });
  return missing;
}

std::vector<ForbiddenLabel> forbidden_labels(const ConceptClass& c, CoordSet y) {
  const int d = vc_dim(c);
  if (popcount(y) != d + 1)
    throw ContractError("forbidden labels need |Y| = vc_dim + 1 = " + std::to_string(d + 1) +
                        ", got |Y| = " + std::to_string(popcount(y)));
  if (!is_subset(y, c.domain_mask()))
    throw DomainError("coordinate set " + format_coordset(y) + " is not a subset of the domain");
  std::vector<ForbiddenLabel> out;
  for (Concept p : missing_patterns(c.concepts(), y)) out.push_back({y, p});
  return out;
}

}  // namespace amplekit
