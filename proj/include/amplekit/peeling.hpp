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
#include <string>
#include <vector>

#include "amplekit/core.hpp"

namespace amplekit {

// c_1..c_m; the level set C_i is the first i concepts. A corner peeling
// removes c_m first.
using Ordering = std::vector<Concept>;

// Thrown by the ordering/shelling validators; `index` is the 0-based
// position of the first offending element.
class ValidationError : public ContractError {
 public:
  ValidationError(const std::string& what, std::size_t index)
      : ContractError(what + " (at index " + std::to_string(index) + ")"), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

struct OrderingClassification {
  bool ample = false;             // every level set ample
  bool corner_peeling = false;    // every c_i a corner of C_i
  bool isometric = false;         // every level set isometric
  bool weakly_isometric = false;  // every level set weakly isometric

  bool all_equal() const {
    return ample == corner_peeling && ample == isometric && ample == weakly_isometric;
  }
};

// Evaluates each property on every level set separately. Throws
// ValidationError when `order` is not a permutation of C.
OrderingClassification classify_ordering(const ConceptClass& c, std::span<const Concept> order);

enum class PeelStatus { found, not_peelable_proven, budget_exhausted };

struct PeelResult {
  PeelStatus status = PeelStatus::budget_exhausted;
  Ordering ordering;  // empty unless found
  std::uint64_t expansions = 0;
};

inline constexpr std::uint64_t kDefaultPeelBudget = 1'000'000;

// Greedy corner removal (smallest corner first) with chronological
// backtracking and memoized dead ends. Requires C ample.
PeelResult corner_peeling_search(const ConceptClass& c,
                                 std::uint64_t budget = kDefaultPeelBudget);

// Conditional antimatroids: size-monotone order. Throws ContractError naming
// the first violated axiom.
Ordering antimatroid_peeling(const ConceptClass& c);
// Names the violated conditional-antimatroid axiom, or nullopt.
std::optional<std::string> antimatroid_violation(const ConceptClass& c);

// Ample classes of VC dimension <= 2: repeatedly add the concept with the most
// neighbours already placed, starting from the smallest concept.
Ordering two_dim_peeling(const ConceptClass& c);

struct CollapsePair {
  Cube face;    // free face at the time of the collapse
  Cube coface;  // the unique face strictly containing it

  friend bool operator==(const CollapsePair&, const CollapsePair&) = default;
};

struct CollapseSequence {
  std::vector<CollapsePair> pairs;
  Cube survivor;  // the vertex left at the end
};

// Collapsing sequence of the cube complex of an ample class, lifted
// coordinate by coordinate from C_x with x the highest coordinate.
CollapseSequence collapse_sequence(const ConceptClass& c);

struct CollapseReplay {
  bool valid = false;
  std::size_t failed_step = 0;  // pairs.size() when the final state is wrong
  std::string reason;
};

// Replays the sequence against Q(C), checking freeness at every step.
CollapseReplay replay_collapse(const ConceptClass& c, const CollapseSequence& seq);

/// Facets of the cross-polytope O_n: one of ±x_i per coordinate, encoded as
/// a mask whose bit i is set for +x_{i+1}.
struct ShellingOrder {
  int n = 0;
  std::vector<Concept> facets;
};

// First level set (0-based index of its last element) that is not
// isometric, or nullopt.
std::optional<std::size_t> first_non_isometric_level(int n, std::span<const Concept> order);
// First facet violating the partial-shelling condition, or nullopt.
std::optional<std::size_t> first_shelling_violation(const ShellingOrder& sh);

// Both directions validate their input and throw ValidationError.
ShellingOrder ordering_to_shelling(int n, std::span<const Concept> order);
Ordering shelling_to_ordering(const ShellingOrder& sh);

// "{-1,+2}" style text for a facet.
std::string format_facet(Concept facet, int n);

}  // namespace amplekit
