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
#include <vector>

#include "amplekit/core.hpp"

namespace amplekit {

/// A duplicate-free sorted family of coordinate sets. The two complexes
/// below are downward closed (abstract simplicial complexes).
class SetFamily {
 public:
  SetFamily() = default;
  SetFamily(int n, std::vector<CoordSet> members);

  int n() const { return n_; }
  std::size_t size() const { return members_.size(); }
  std::span<const CoordSet> members() const { return members_; }
  bool contains(CoordSet s) const;
  // Largest member size; -1 for the empty family.
  int dimension() const;
  bool is_downward_closed() const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  int n_ = 0;
  std::vector<CoordSet> members_;
};

// Sets Y with C|Y = 2^Y.
SetFamily shattered_complex(const ConceptClass& c);
// Sets Y for which C contains a Y-cube.
SetFamily strongly_shattered_complex(const ConceptClass& c);

// Span versions accept the empty family (whose complexes are empty).
std::vector<CoordSet> shattered_sets(std::span<const Concept> sorted, int n);
std::vector<CoordSet> strongly_shattered_sets(std::span<const Concept> sorted, int n);

// Brute-force X̄(C): tests every Y against its restriction. Reference for the
// recursive version.
std::vector<CoordSet> shattered_sets_naive(std::span<const Concept> sorted, int n);

int vc_dim(const ConceptClass& c);
// Φ_d(n) = sum_{i<=d} binom(n, i); 0 when d < 0.
std::uint64_t phi(int d, int n);

struct AmpleResult {
  bool ample = false;
  // Smallest shattered set that is not strongly shattered.
  std::optional<CoordSet> witness;

  explicit operator bool() const { return ample; }
};

AmpleResult is_ample(const ConceptClass& c);
bool is_ample(std::span<const Concept> sorted, int n);
bool is_maximum(const ConceptClass& c);

// 2^X \ C as a sorted list; may be empty.
std::vector<Concept> complement_of(std::span<const Concept> sorted, int n);
// C^Y nonempty implies connected, for every Y ⊆ X.
bool all_reductions_connected(std::span<const Concept> sorted, int n);

/// Independent evaluations of the equivalent ampleness characterizations.
/// The partition and cube conditions are enumerated only on small domains
/// and left empty above the caps.
struct AmpleReport {
  bool ample = false;                    // |C| = |X̄(C)|
  bool complement_ample = false;         // C* ample
  bool complexes_equal = false;          // X̲(C) = X̄(C)
  bool strong_count_matches = false;     // |X̲(C)| = |C|
  bool shattered_count_matches = false;  // |X̄(C)| = |C|
  std::optional<bool> cube_intersections_ample;  // n <= 12
  std::optional<bool> reduction_commutes;        // n <= 10
  std::optional<bool> lopsided_partitions;       // n <= 10
  bool reductions_connected = false;             // C^Y connected for all Y
  bool connected_with_ample_hyperplanes = false;

  // True when every evaluated condition has the same value.
  bool agree() const;
};

AmpleReport ample_characterization_report(const ConceptClass& c);

inline constexpr int kCubeConditionCap = 12;
inline constexpr int kPartitionConditionCap = 10;

struct ForbiddenLabel {
  CoordSet support = 0;
  Concept pattern = 0;  // bits within support, original coordinates

  friend bool operator==(const ForbiddenLabel&, const ForbiddenLabel&) = default;
};

// All patterns on Y missing from C|Y; requires |Y| = vc_dim(C) + 1. A
// maximum class misses exactly one.
std::vector<ForbiddenLabel> forbidden_labels(const ConceptClass& c, CoordSet y);
// Same without the size contract; for possibly-empty families.
std::vector<Concept> missing_patterns(std::span<const Concept> sorted, CoordSet y);

}  // namespace amplekit
