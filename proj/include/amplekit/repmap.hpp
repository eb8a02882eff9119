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
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "amplekit/core.hpp"
#include "amplekit/kernels.hpp"
#include "amplekit/peeling.hpp"
#include "amplekit/shatter.hpp"

namespace amplekit {

/// A map from concepts to coordinate sets, kept sorted by concept. A valid
/// representation map of C is a non-clashing bijection C -> X(C); read as an
/// out-map it is also an orientation of G(C).
class RepMap {
 public:
  using Entry = std::pair<Concept, CoordSet>;

  RepMap() = default;
  // Throws ContractError on a repeated concept and DomainError on bits
  // outside the domain.
  RepMap(int n, std::vector<Entry> entries);
  // images[i] is the image of c[i].
  RepMap(const ConceptClass& c, std::span<const CoordSet> images);

  int n() const { return n_; }
  std::size_t size() const { return entries_.size(); }
  std::span<const Entry> entries() const { return entries_; }
  std::optional<CoordSet> find(Concept c) const;
  // Throws ContractError when c has no image.
  CoordSet at(Concept c) const;
  // Images aligned with c's canonical order; ContractError unless r is
  // total on C.
  std::vector<CoordSet> images_for(const ConceptClass& c) const;
  // Concept with image z, if any.
  std::optional<Concept> preimage(CoordSet z) const;

  friend bool operator==(const RepMap&, const RepMap&) = default;

 private:
  int n_ = 0;
  std::vector<Entry> entries_;
};

using OutMap = RepMap;

// Text form: one `<concept-bits> -> <coordset-bits>` line per entry.
void write_repmap(std::ostream& out, const RepMap& r);
RepMap read_repmap(std::istream& in);

struct VerifyOptions {
  // R2 domains and R3 supports are enumerated exhaustively up to this n and
  // sampled above it.
  int exhaustive_cap = 12;
  std::size_t samples = 4096;
  std::uint64_t seed = 1;
  Exec exec = Exec::parallel;
};

struct RepMapReport {
  bool bijective = false;  // onto X̲(C)
  bool r1 = false;         // ∪-non-clashing
  bool r2 = false;         // unique reconstruction
  bool r3 = false;         // cube injective
  bool r4 = false;         // Δ-non-clashing
  bool c1 = false;         // the r(c)-cube through c lies in C
  bool c2 = false;         // every cube of C has a unique sink
  bool exhaustive = false;

  std::optional<Concept> bijective_witness;  // concept with a bad or shared image
  std::optional<std::pair<Concept, Concept>> r1_witness;
  std::optional<SampleFailure> r2_witness;
  std::optional<Cube> r3_witness;
  std::optional<std::pair<Concept, Concept>> r4_witness;
  std::optional<Concept> c1_witness;
  std::optional<Cube> c2_witness;

  bool all() const { return bijective && r1 && r2 && r3 && r4 && c1 && c2; }
};

// Checks every condition independently. Requires r total on C.
RepMapReport verify_repmap(const ConceptClass& c, const RepMap& r, const VerifyOptions& opts = {});

// Thm-5.1-style recursion on the highest coordinate. Requires C maximum.
RepMap build_maximum_repmap(const ConceptClass& c);

// For maximum C of dimension d and maximum D ⊆ C of dimension d-1: each
// concept of C \ D paired with the incomplete cube it is the source of.
std::map<Concept, Cube> incomplete_cube_sources(const ConceptClass& c, const ConceptClass& d);

struct UsoReport {
  bool out_map = false;  // consistent orientation of G(C)
  bool c1 = false;
  bool c2 = false;
  std::optional<Concept> out_map_witness;
  std::optional<Concept> c1_witness;
  std::optional<Cube> c2_witness;

  bool ok() const { return out_map && c1 && c2; }
};

// (ii): r is the out-map of a unique sink orientation.
UsoReport check_uso(const ConceptClass& c, const OutMap& r);
// (iii): r(c) ∈ X̲(C) for all c and every cube of C has a unique sink.
bool image_in_complex_and_c2(const ConceptClass& c, const OutMap& r);

/// An orientation of G(C), stored as its out-map.
class Orientation {
 public:
  // Throws ContractError when `out` is not the out-map of an orientation:
  // an out-coordinate without an edge, or an edge oriented both ways or
  // neither.
  Orientation(const ConceptClass& c, const OutMap& out);

  const OutMap& out_map() const { return out_; }
  bool is_acyclic() const;
  // A directed cycle, first vertex repeated at the end; empty if acyclic.
  std::vector<Concept> find_cycle() const;

 private:
  ConceptClass class_;
  OutMap out_;
};

// Removes sources (smallest first) and reverses. Throws ContractError with
// a witness cycle or cube when the orientation is cyclic or not a USO.
Ordering uso_to_peeling(const ConceptClass& c, const Orientation& o);
// Orients c_i c_j from c_i to c_j iff i > j. Requires a corner peeling.
Orientation peeling_to_uso(const ConceptClass& c, std::span<const Concept> order);

struct SubRepMap {
  ConceptClass cls;
  RepMap map;
};

// All three require r to be a representation map of C (checked).
// r_B(c) = r(c) ∩ supp(B) on C∩B, same domain.
SubRepMap sub_repmap_cube(const ConceptClass& c, const RepMap& r, const Cube& b,
                          const VerifyOptions& opts = {});
// r^Y on C^Y over X \ Y (re-indexed).
SubRepMap sub_repmap_reduction(const ConceptClass& c, const RepMap& r, CoordSet y,
                               const VerifyOptions& opts = {});
// r_Y on C_Y = C|(X \ Y) (re-indexed).
SubRepMap sub_repmap_restriction(const ConceptClass& c, const RepMap& r, CoordSet y,
                                 const VerifyOptions& opts = {});

// Bijection C -> X(C) satisfying C1, from a perfect matching of Γ(C).
// Requires C ample.
RepMap pre_rep_c1(const ConceptClass& c);
// Injection C -> 2^X satisfying C2, by recursion on the highest coordinate.
// Requires C ample.
RepMap pre_rep_c2(const ConceptClass& c);

// Neighbourhood sizes of Γ(C) for Hall-condition tests: for each s in X(C),
// the concepts c whose s-cube through c lies in C.
std::vector<std::pair<CoordSet, std::vector<Concept>>> hall_graph(const ConceptClass& c);

struct IsrVertex {
  Concept member = 0;
  CoordSet set = 0;
};

struct IsrInstance {
  int n = 0;
  std::vector<IsrVertex> vertices;              // grouped by concept, sets ascending
  std::vector<std::vector<std::size_t>> parts;  // one per concept of C, canonical order
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // first < second
};

// Requires C ample.
IsrInstance isr_instance(const ConceptClass& c);
std::string isr_to_json(const IsrInstance& inst);

enum class IsrStatus { found, infeasible, unknown };

struct IsrResult {
  IsrStatus status = IsrStatus::unknown;
  std::vector<std::size_t> chosen;  // vertex per part, when found
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultIsrBudget = 10'000'000;

IsrResult isr_solve(const IsrInstance& inst, std::uint64_t budget = kDefaultIsrBudget);
RepMap isr_to_repmap(const IsrInstance& inst, const IsrResult& result);

enum class MatchingStatus { no_perfect_matching, unique, multiple };

struct TailMatchingReport {
  int x = 0;
  int d = 0;
  std::vector<Concept> tail;            // concepts of C with no x-edge
  std::vector<ForbiddenLabel> labels;   // size-d forbidden labels of C^x
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (tail, label)
  MatchingStatus status = MatchingStatus::no_perfect_matching;
  std::vector<std::pair<std::size_t, std::size_t>> matching;
  std::vector<std::size_t> degree_one_tail;
  std::vector<std::size_t> degree_one_labels;
  // Tail concepts that are the only neighbour of some label, and those of
  // them that are corners of C.
  std::vector<Concept> corner_candidates;
  std::vector<Concept> confirmed_corners;
};

// Requires C maximum and 1 <= x <= n.
TailMatchingReport tail_matching_analysis(const ConceptClass& c, int x);

std::string to_string(MatchingStatus s);

}  // namespace amplekit
