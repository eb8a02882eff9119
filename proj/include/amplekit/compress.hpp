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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "amplekit/core.hpp"
#include "amplekit/kernels.hpp"
#include "amplekit/repmap.hpp"

namespace amplekit {

/// A labeled sample: the coordinates in `domain`, each labeled by the
/// matching bit of `values`.
struct LabeledSample {
  CoordSet domain = 0;
  Concept values = 0;  // subset of domain

  bool consistent_with(Concept c) const { return (c & domain) == values; }
  friend bool operator==(const LabeledSample&, const LabeledSample&) = default;
};

// "x1=0,x3=1", ascending coordinates; the empty sample is "".
std::string format_sample(const LabeledSample& s);
// Rejects unsorted or repeated coordinates and coordinates above n.
LabeledSample parse_sample(std::string_view text, int n);

// C|dom as samples, patterns ascending.
std::vector<LabeledSample> realizable_samples(const ConceptClass& c, CoordSet dom);
bool is_realizable(const ConceptClass& c, const LabeledSample& s);

// γ(s): the unique concept consistent with s whose image lies in dom(s).
// Throws IntegrityError when there is not exactly one.
Concept reconstruct_unique(const ConceptClass& c, const RepMap& r, const LabeledSample& s);

// β(Z) = r^{-1}(Z); throws DecodeError when Z is not an image.
Concept decode(const RepMap& r, CoordSet z);

/// The unlabeled scheme of a representation map: α(s) = r(γ(s)) and
/// β = r^{-1}. Immutable after construction.
class CompressionScheme {
 public:
  // Requires r total on C and injective.
  CompressionScheme(ConceptClass c, RepMap r);

  const ConceptClass& concept_class() const { return class_; }
  const RepMap& repmap() const { return map_; }

  // Throws ContractError for a non-realizable sample.
  CoordSet compress(const LabeledSample& s) const;
  Concept decompress(CoordSet z) const;

 private:
  ConceptClass class_;
  RepMap map_;
  std::vector<std::pair<CoordSet, Concept>> inverse_;  // sorted by image
};

struct SchemeReport {
  bool pass = false;
  bool exhaustive = false;
  std::size_t samples_checked = 0;
  int max_size = 0;  // largest |α(s)|
  int vc_dim = 0;
  std::optional<LabeledSample> witness;
  std::string failure;
};

// Checks α(s) ⊆ dom(s), β(α(s))|dom(s) = s and |α(s)| <= vc_dim(C) on every
// realizable sample (every domain for n <= opts.exhaustive_cap, sampled
// domains above).
SchemeReport verify_scheme(const ConceptClass& c, const CompressionScheme& scheme,
                           const VerifyOptions& opts = {});

}  // namespace amplekit
