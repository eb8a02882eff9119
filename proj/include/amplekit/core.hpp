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

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace amplekit {

// Concepts and coordinate sets are both subsets of the domain, stored as
// bit masks: coordinate i (1-based) is bit i-1.
using Mask = std::uint32_t;
using Concept = Mask;
using CoordSet = Mask;

inline constexpr int kMaxDomain = 24;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Coordinate set not contained in the domain, overlapping product domains.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Caller violated a documented precondition.
class ContractError : public Error {
 public:
  using Error::Error;
};

// A guarantee that the mathematics promises did not hold; indicates a bug
// or an input that slipped past a precondition check.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

class EmptyClassError : public Error {
 public:
  using Error::Error;
};

class NotConnectedError : public Error {
 public:
  using Error::Error;
};

class DecodeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask full_mask(int n) {
  return n >= 32 ? ~Mask{0} : ((Mask{1} << n) - 1);
}

inline Mask coord_bit(int x) { return Mask{1} << (x - 1); }

inline bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

// Gathers the bits of `value` selected by `selector` into the low bits
// (software pext).
Mask compress_bits(Mask value, Mask selector);

// Inverse of compress_bits: scatters the low bits of `value` onto the
// positions set in `selector` (software pdep).
Mask expand_bits(Mask value, Mask selector);

// Calls fn(sub) for every subset of `set`, including 0 and `set` itself, in
// increasing numeric order.
template <typename Fn>
void for_each_subset(Mask set, Fn&& fn) {
  Mask sub = 0;
  while (true) {
    fn(sub);
    if (sub == set) break;
    sub = (sub - set) & set;
  }
}

std::string to_bitstring(Mask m, int n);
Mask parse_bitstring(std::string_view s, int n);

// "{1,3}" with 1-based coordinates, ascending.
std::string format_coordset(CoordSet s);
CoordSet parse_coordset(std::string_view text, int n);

/// A subcube of the hypercube: all concepts agreeing with `tag` off
/// `support`. The tag has no bits on the support.
struct Cube {
  Concept tag = 0;
  CoordSet support = 0;

  int dim() const { return popcount(support); }
  bool contains(Concept c) const { return (c & ~support) == tag; }
  bool contains(const Cube& other) const {
    return is_subset(other.support, support) && contains(other.tag);
  }
  std::uint64_t key() const {
    return (std::uint64_t{support} << 32) | tag;
  }
  static Cube from_key(std::uint64_t k) {
    return Cube{static_cast<Mask>(k), static_cast<Mask>(k >> 32)};
  }
  static Cube of(Concept c, CoordSet support) {
    return Cube{c & ~support, support};
  }

  friend bool operator==(const Cube&, const Cube&) = default;
  friend auto operator<=>(const Cube& a, const Cube& b) {
    if (auto cmp = a.support <=> b.support; cmp != 0) return cmp;
    return a.tag <=> b.tag;
  }
};

// Smallest cube containing both concepts.
inline Cube interval(Concept a, Concept b) {
  return Cube{a & ~(a ^ b), a ^ b};
}

// Text form of a cube with '*' on support coordinates, e.g. "0*1".
std::string format_cube(const Cube& cube, int n);

/// A nonempty finite set of concepts over a fixed domain, kept sorted
/// ascending by mask value so equal classes compare equal as lists.
///
/// Classes produced by restriction or reduction are re-indexed onto
/// coordinates 1..|Y|; `labels()` records, for each local coordinate, the
/// coordinate of the original domain it came from.
class ConceptClass {
 public:
  // Sorts and removes duplicates. Throws EmptyClassError on an empty list
  // and DomainError when a concept has bits outside the domain.
  ConceptClass(int n, std::vector<Concept> concepts);
  ConceptClass(int n, std::vector<Concept> concepts, std::vector<int> labels);

  static ConceptClass full_cube(int n);

  int n() const { return n_; }
  Mask domain_mask() const { return full_mask(n_); }
  std::size_t size() const { return concepts_.size(); }
  std::span<const Concept> concepts() const { return concepts_; }
  Concept operator[](std::size_t i) const { return concepts_[i]; }
  auto begin() const { return concepts_.begin(); }
  auto end() const { return concepts_.end(); }

  bool contains(Concept c) const;
  // Position of c in canonical order, or -1.
  std::ptrdiff_t index_of(Concept c) const;
  bool is_full_cube() const { return concepts_.size() == (std::size_t{1} << n_); }

  const std::vector<int>& labels() const { return labels_; }
  // Maps a local coordinate set back to the original labels' bit positions.
  Mask to_original(Mask local) const;

  friend bool operator==(const ConceptClass& a, const ConceptClass& b) {
    return a.n_ == b.n_ && a.concepts_ == b.concepts_;
  }

 private:
  int n_;
  std::vector<Concept> concepts_;
  std::vector<int> labels_;
};

// Sorted duplicate-free concept list; the working representation for
// possibly-empty intermediate families.
std::vector<Concept> canonical(std::vector<Concept> concepts);
bool sorted_contains(std::span<const Concept> sorted, Concept c);

// C|Y, re-indexed onto 1..|Y|.
ConceptClass restrict(const ConceptClass& c, CoordSet y);
// C_Y = C|(X \ Y).
ConceptClass drop(const ConceptClass& c, CoordSet y);
// C^Y over X \ Y (re-indexed); nullopt is the empty family.
std::optional<ConceptClass> reduce(const ConceptClass& c, CoordSet y);
// Tags of the Y-cubes of C, kept over the original domain (no re-indexing).
std::vector<Concept> reduction_tags(std::span<const Concept> sorted, CoordSet y);

ConceptClass complement(const ConceptClass& c);
ConceptClass twist(const ConceptClass& c, CoordSet y);
// The second factor's coordinates follow the first's.
ConceptClass product(const ConceptClass& a, const ConceptClass& b);
std::optional<ConceptClass> intersect_cube(const ConceptClass& c, const Cube& b);

// N_x(C): union of the cubes of C whose support contains x; same domain.
std::optional<ConceptClass> carrier(const ConceptClass& c, int x);
// tail_x(C) over X \ {x}: concepts with no x-edge, with the x bit dropped.
std::optional<ConceptClass> tail(const ConceptClass& c, int x);

// Q(C): every cube contained in C, grouped by dimension ascending, each
// group sorted. Grown upward from vertices.
std::vector<Cube> cube_complex(std::span<const Concept> sorted, int n);
std::vector<Cube> cube_complex(const ConceptClass& c);

}  // namespace amplekit
