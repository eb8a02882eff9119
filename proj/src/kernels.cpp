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

#include "amplekit/kernels.hpp"

#include <algorithm>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "amplekit/graph.hpp"
#include "amplekit/shatter.hpp"

namespace amplekit {

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

void check_aligned(std::span<const Concept> concepts, std::span<const CoordSet> images) {
  if (concepts.size() != images.size())
    throw ContractError("image list is not aligned with the concept list");
}

bool clashes(Concept a, Concept b, CoordSet ra, CoordSet rb, ClashRule rule) {
  CoordSet on = rule == ClashRule::union_of_images ? (ra | rb) : (ra ^ rb);
  return ((a ^ b) & on) == 0;
}

// Smallest pattern on `y` without exactly one candidate, encoded as
// (pattern << 32 | candidates), or kNone. `scratch` is reused across calls.
std::uint64_t scan_domain(std::span<const Concept> concepts, std::span<const CoordSet> images,
                          CoordSet y, std::vector<std::pair<Concept, std::uint32_t>>& scratch) {
  scratch.clear();
  for (std::size_t i = 0; i < concepts.size(); ++i)
    scratch.emplace_back(concepts[i] & y, is_subset(images[i], y) ? 1U : 0U);
  std::sort(scratch.begin(), scratch.end());
  for (std::size_t i = 0; i < scratch.size();) {
    std::size_t j = i;
    std::uint32_t count = 0;
    while (j < scratch.size() && scratch[j].first == scratch[i].first) count += scratch[j++].second;
    if (count != 1) return (std::uint64_t{scratch[i].first} << 32) | count;
    i = j;
  }
  return kNone;
}

struct Keyed {
  Concept tag;
  CoordSet image;  // r(c) ∩ supp(B)
  Concept member;
  friend auto operator<=>(const Keyed&, const Keyed&) = default;
};

// Smallest tag of a bad S-cube, or kNone.
std::uint64_t scan_support(std::span<const Concept> concepts, std::span<const CoordSet> images,
                           CoordSet s, int n, const MembershipBitmap& member,
                           std::vector<Keyed>& scratch) {
  const Mask off = full_mask(n) & ~s;
  scratch.clear();
  for (std::size_t i = 0; i < concepts.size(); ++i)
    scratch.push_back({concepts[i] & off, images[i] & s, concepts[i]});
  std::sort(scratch.begin(), scratch.end());
  for (std::size_t i = 0; i < scratch.size();) {
    std::size_t j = i;
    while (j < scratch.size() && scratch[j].tag == scratch[i].tag) ++j;
    for (std::size_t k = i; k < j; ++k) {
      if (k > i && scratch[k].image == scratch[k - 1].image) return scratch[i].tag;
      // The image must be strongly shattered by C∩B; the cube through the
      // concept itself is tried first.
      CoordSet y = scratch[k].image;
      bool found = member.cube_inside(scratch[k].member, y);
      for (std::size_t v = i; v < j && !found; ++v) found = member.cube_inside(scratch[v].member, y);
      if (!found) return scratch[i].tag;
    }
    i = j;
  }
  return kNone;
}

}  // namespace

void set_threads(int n) {
#ifdef _OPENMP
  omp_set_num_threads(n > 0 ? n : omp_get_num_procs());
#else
  (void)n;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

MembershipBitmap::MembershipBitmap(std::span<const Concept> concepts, int n)
    : words_(((std::size_t{1} << n) + 63) / 64, 0) {
  for (Concept c : concepts) words_[c >> 6] |= std::uint64_t{1} << (c & 63);
}

bool MembershipBitmap::cube_inside(Concept c, CoordSet y) const {
  bool inside = true;
  for_each_subset(y, [&](Mask sub) {
    if (inside && !test(c ^ sub)) inside = false;
  });
  return inside;
}

std::optional<IndexPair> first_clash(std::span<const Concept> concepts,
                                     std::span<const CoordSet> images, ClashRule rule, Exec exec) {
  check_aligned(concepts, images);
  const std::size_t m = concepts.size();
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (clashes(concepts[i], concepts[j], images[i], images[j], rule)) return IndexPair{i, j};
    return std::nullopt;
  }
  std::uint64_t best = kNone;
  const auto rows = static_cast<std::int64_t>(m);
#pragma omp parallel for schedule(dynamic, 8) reduction(min : best)
  for (std::int64_t ii = 0; ii < rows; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    if (std::uint64_t{i} * m >= best) continue;
    for (std::size_t j = i + 1; j < m; ++j) {
      if (clashes(concepts[i], concepts[j], images[i], images[j], rule)) {
        best = std::min<std::uint64_t>(best, std::uint64_t{i} * m + j);
        break;
      }
    }
  }
  if (best == kNone) return std::nullopt;
  return IndexPair{best / m, best % m};
}

std::optional<SampleFailure> first_reconstruction_failure(std::span<const Concept> concepts,
                                                          std::span<const CoordSet> images,
                                                          std::span<const CoordSet> domains,
                                                          Exec exec) {
  check_aligned(concepts, images);
  std::size_t where = domains.size();
  std::uint64_t code = kNone;
  if (exec == Exec::serial) {
    std::vector<std::pair<Concept, std::uint32_t>> scratch;
    for (std::size_t d = 0; d < domains.size() && where == domains.size(); ++d) {
      code = scan_domain(concepts, images, domains[d], scratch);
      if (code != kNone) where = d;
    }
  } else {
    std::uint64_t best = kNone;
    const auto count = static_cast<std::int64_t>(domains.size());
#pragma omp parallel reduction(min : best)
    {
      std::vector<std::pair<Concept, std::uint32_t>> scratch;
#pragma omp for schedule(dynamic, 4)
      for (std::int64_t d = 0; d < count; ++d) {
        if (static_cast<std::uint64_t>(d) >= best) continue;
        if (scan_domain(concepts, images, domains[static_cast<std::size_t>(d)], scratch) != kNone)
          best = std::min(best, static_cast<std::uint64_t>(d));
      }
    }
    if (best != kNone) {
      where = static_cast<std::size_t>(best);
      std::vector<std::pair<Concept, std::uint32_t>> scratch;
      code = scan_domain(concepts, images, domains[where], scratch);
    }
  }
  if (where == domains.size()) return std::nullopt;
  return SampleFailure{domains[where], static_cast<Concept>(code >> 32),
                       static_cast<std::size_t>(code & 0xffffffffU)};
}

std::optional<Cube> first_cube_injectivity_failure(std::span<const Concept> concepts,
                                                   std::span<const CoordSet> images,
                                                   std::span<const CoordSet> supports, int n,
                                                   Exec exec) {
  check_aligned(concepts, images);
  MembershipBitmap member(concepts, n);
  std::size_t where = supports.size();
  std::uint64_t tag = kNone;
  if (exec == Exec::serial) {
    std::vector<Keyed> scratch;
    for (std::size_t k = 0; k < supports.size() && where == supports.size(); ++k) {
      tag = scan_support(concepts, images, supports[k], n, member, scratch);
      if (tag != kNone) where = k;
    }
  } else {
    std::uint64_t best = kNone;
    const auto count = static_cast<std::int64_t>(supports.size());
#pragma omp parallel reduction(min : best)
    {
      std::vector<Keyed> scratch;
#pragma omp for schedule(dynamic, 4)
      for (std::int64_t k = 0; k < count; ++k) {
        if (static_cast<std::uint64_t>(k) >= best) continue;
        if (scan_support(concepts, images, supports[static_cast<std::size_t>(k)], n, member,
                         scratch) != kNone)
          best = std::min(best, static_cast<std::uint64_t>(k));
      }
    }
    if (best != kNone) {
      where = static_cast<std::size_t>(best);
      std::vector<Keyed> scratch;
      tag = scan_support(concepts, images, supports[where], n, member, scratch);
    }
  }
  if (where == supports.size()) return std::nullopt;
  return Cube{static_cast<Concept>(tag), supports[where]};
}

std::vector<Concept> corpus_class(std::uint64_t index) {
  std::vector<Concept> out;
  for (Concept v = 0; index; ++v, index >>= 1)
    if (index & 1U) out.push_back(v);
  return out;
}

namespace {

struct ClassVerdict {
  bool ample = false;
  bool sandwich = true;
  bool sauer = true;
  bool agree = true;
};

ClassVerdict judge(std::uint64_t index, int n, bool characterizations) {
  auto concepts = corpus_class(index);
  auto upper = shattered_sets(concepts, n);
  auto lower = strongly_shattered_sets(concepts, n);
  int vc = 0;
  for (CoordSet s : upper) vc = std::max(vc, popcount(s));
  ClassVerdict v;
  v.sandwich = lower.size() <= concepts.size() && concepts.size() <= upper.size();
  v.sauer = concepts.size() <= phi(vc, n);
  v.ample = upper.size() == concepts.size();
  if (characterizations) {
    auto star = complement_of(concepts, n);
    bool complement_ample = shattered_sets(star, n).size() == star.size();
    bool complexes_equal = lower == upper;
    bool reductions = all_reductions_connected(concepts, n);
    v.agree = complement_ample == complexes_equal && complexes_equal == v.ample &&
              v.ample == reductions;
  }
  return v;
}

void record(CorpusTally& t, std::uint64_t index, const ClassVerdict& v) {
  ++t.classes;
  if (v.ample) ++t.ample;
  if (!v.sandwich) {
    ++t.sandwich_violations;
    if (!t.first_sandwich) t.first_sandwich = index;
  }
  if (!v.sauer) {
    ++t.sauer_violations;
    if (!t.first_sauer) t.first_sauer = index;
  }
  if (!v.agree) {
    ++t.disagreements;
    if (!t.first_disagreement) t.first_disagreement = index;
  }
}

}  // namespace

CorpusTally sweep_corpus(int n, bool characterizations, Exec exec) {
  if (n < 0 || n > 4) throw ContractError("corpus sweep supports n <= 4");
  const std::uint64_t total = (std::uint64_t{1} << (std::uint64_t{1} << n)) - 1;
  CorpusTally tally;
  if (exec == Exec::serial) {
    for (std::uint64_t k = 1; k <= total; ++k) record(tally, k, judge(k, n, characterizations));
    return tally;
  }
  std::vector<ClassVerdict> verdicts(total);
  const auto count = static_cast<std::int64_t>(total);
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t k = 0; k < count; ++k)
    verdicts[static_cast<std::size_t>(k)] =
        judge(static_cast<std::uint64_t>(k) + 1, n, characterizations);
  for (std::uint64_t k = 1; k <= total; ++k) record(tally, k, verdicts[k - 1]);
  return tally;
}

}  // namespace amplekit
