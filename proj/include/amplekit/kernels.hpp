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
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "amplekit/core.hpp"

// Hot verification loops. Each kernel has a serial path, kept as the
// reference the tests compare against, and an OpenMP path that fans out over
// independent items. Both report the same (smallest) witness.

namespace amplekit {

enum class Exec { serial, parallel };

// Team size for the parallel paths; n <= 0 restores the runtime default.
void set_threads(int n);
int max_threads();

/// Membership test over the whole hypercube 2^X, one bit per vertex.
class MembershipBitmap {
 public:
  MembershipBitmap(std::span<const Concept> concepts, int n);
  bool test(Concept c) const { return (words_[c >> 6] >> (c & 63)) & 1U; }
  // True when the Y-cube through c lies inside the set.
  bool cube_inside(Concept c, CoordSet y) const;

 private:
  std::vector<std::uint64_t> words_;
};

enum class ClashRule { union_of_images, symmetric_difference };

using IndexPair = std::pair<std::size_t, std::size_t>;

// First pair i < j (lexicographic) with c_i and c_j agreeing on
// r_i ∪ r_j (or r_i Δ r_j).
std::optional<IndexPair> first_clash(std::span<const Concept> concepts,
                                     std::span<const CoordSet> images, ClashRule rule, Exec exec);

struct SampleFailure {
  CoordSet domain = 0;
  Concept pattern = 0;         // bits within domain
  std::size_t candidates = 0;  // concepts consistent with the sample and r(c) ⊆ domain
};

// First domain in `domains` order, then pattern, whose realizable sample does
// not have exactly one reconstruction candidate.
std::optional<SampleFailure> first_reconstruction_failure(std::span<const Concept> concepts,
                                                          std::span<const CoordSet> images,
                                                          std::span<const CoordSet> domains,
                                                          Exec exec);

// First cube of 2^X (supports in the given order, then tag ascending) on
// which c -> r(c) ∩ supp(B) is not an injection of C∩B into X(C∩B).
std::optional<Cube> first_cube_injectivity_failure(std::span<const Concept> concepts,
                                                   std::span<const CoordSet> images,
                                                   std::span<const CoordSet> supports, int n,
                                                   Exec exec);

/// Tallies over every nonempty class on n <= 4 coordinates. Class k has
/// vertex v iff bit v of k is set.
struct CorpusTally {
  std::uint64_t classes = 0;
  std::uint64_t ample = 0;
  std::uint64_t sandwich_violations = 0;
  std::uint64_t sauer_violations = 0;
  std::uint64_t disagreements = 0;
  std::optional<std::uint64_t> first_sandwich;
  std::optional<std::uint64_t> first_sauer;
  std::optional<std::uint64_t> first_disagreement;

  friend bool operator==(const CorpusTally&, const CorpusTally&) = default;
};

std::vector<Concept> corpus_class(std::uint64_t index);

// Sandwich and Sauer bounds on every class; with `characterizations`, also
// compares C* ample, X̲ = X̄, |X̄| = |C| and connectivity of all reductions.
CorpusTally sweep_corpus(int n, bool characterizations, Exec exec);

}  // namespace amplekit
