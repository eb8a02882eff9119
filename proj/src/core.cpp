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

#include "amplekit/core.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace amplekit {

Mask compress_bits(Mask value, Mask selector) {
  Mask out = 0;
  int pos = 0;
  while (selector) {
    Mask low = selector & (~selector + 1);
    if (value & low) out |= Mask{1} << pos;
    ++pos;
    selector &= selector - 1;
  }
  return out;
}

Mask expand_bits(Mask value, Mask selector) {
  Mask out = 0;
  int pos = 0;
  while (selector) {
    Mask low = selector & (~selector + 1);
    if (value & (Mask{1} << pos)) out |= low;
    ++pos;
    selector &= selector - 1;
  }
  return out;
}

std::string to_bitstring(Mask m, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i)
    if (m & (Mask{1} << i)) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

Mask parse_bitstring(std::string_view s, int n) {
  if (static_cast<int>(s.size()) != n)
    throw ParseError("expected " + std::to_string(n) + " bits, got '" +
                         std::string(s) + "'",
                     0);
  Mask m = 0;
  for (int i = 0; i < n; ++i) {
    char ch = s[static_cast<std::size_t>(i)];
    if (ch == '1')
      m |= Mask{1} << i;
    else if (ch != '0')
      throw ParseError("invalid bit character '" + std::string(1, ch) + "'", 0);
  }
  return m;
}

std::string format_coordset(CoordSet s) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i) {
    if (!(s & (Mask{1} << i))) continue;
    if (!first) out += ',';
    out += std::to_string(i + 1);
    first = false;
  }
  out += '}';
  return out;
}

CoordSet parse_coordset(std::string_view text, int n) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
    return v;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw ParseError("coordinate set must look like {1,3}", 0);
  text = trim(text.substr(1, text.size() - 2));
  CoordSet out = 0;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = trim(text.substr(0, comma));
    if (item.empty()) throw ParseError("empty coordinate in set", 0);
    int x = 0;
    for (char ch : item) {
      if (ch < '0' || ch > '9') throw ParseError("bad coordinate '" + std::string(item) + "'", 0);
      x = x * 10 + (ch - '0');
      if (x > kMaxDomain) break;
    }
    if (x < 1 || x > n)
      throw DomainError("coordinate " + std::string(item) + " outside domain 1.." +
                        std::to_string(n));
    out |= coord_bit(x);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return out;
}

std::string format_cube(const Cube& cube, int n) {
  std::string s = to_bitstring(cube.tag, n);
  for (int i = 0; i < n; ++i)
    if (cube.support & (Mask{1} << i)) s[static_cast<std::size_t>(i)] = '*';
  return s;
}

std::vector<Concept> canonical(std::vector<Concept> concepts) {
  std::sort(concepts.begin(), concepts.end());
  concepts.erase(std::unique(concepts.begin(), concepts.end()), concepts.end());
  return concepts;
}

bool sorted_contains(std::span<const Concept> sorted, Concept c) {
  return std::binary_search(sorted.begin(), sorted.end(), c);
}

namespace {

std::vector<int> identity_labels(int n) {
  std::vector<int> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 1);
  return labels;
}

void check_domain(int n) {
  if (n < 0 || n > kMaxDomain)
    throw DomainError("domain size " + std::to_string(n) + " outside 0.." +
                      std::to_string(kMaxDomain));
}

void check_coord(const ConceptClass& c, int x) {
  if (x < 1 || x > c.n())
    throw DomainError("coordinate " + std::to_string(x) + " outside domain 1.." +
                      std::to_string(c.n()));
}

void check_subset(const ConceptClass& c, CoordSet y) {
  if (!is_subset(y, c.domain_mask()))
    throw DomainError("coordinate set " + format_coordset(y) +
                      " is not a subset of the domain");
}

std::vector<int> select_labels(const std::vector<int>& labels, Mask keep) {
  std::vector<int> out;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (keep & (Mask{1} << i)) out.push_back(labels[i]);
  return out;
}

}  // namespace

ConceptClass::ConceptClass(int n, std::vector<Concept> concepts)
    : ConceptClass(n, std::move(concepts), identity_labels(n < 0 ? 0 : n)) {}

ConceptClass::ConceptClass(int n, std::vector<Concept> concepts, std::vector<int> labels)
    : n_(n), concepts_(canonical(std::move(concepts))), labels_(std::move(labels)) {
  check_domain(n);
  if (concepts_.empty()) throw EmptyClassError("concept class must be nonempty");
  if (!is_subset(concepts_.back(), full_mask(n)))
    throw DomainError("concept " + std::to_string(concepts_.back()) +
                      " has bits outside the domain of size " + std::to_string(n));
  if (static_cast<int>(labels_.size()) != n)
    throw DomainError("label map size does not match domain");
}

ConceptClass ConceptClass::full_cube(int n) {
  check_domain(n);
  std::vector<Concept> all(std::size_t{1} << n);
  std::iota(all.begin(), all.end(), Concept{0});
  return ConceptClass(n, std::move(all));
}

bool ConceptClass::contains(Concept c) const { return sorted_contains(concepts_, c); }

std::ptrdiff_t ConceptClass::index_of(Concept c) const {
  auto it = std::lower_bound(concepts_.begin(), concepts_.end(), c);
  if (it == concepts_.end() || *it != c) return -1;
  return it - concepts_.begin();
}

Mask ConceptClass::to_original(Mask local) const {
  Mask out = 0;
  for (int i = 0; i < n_; ++i)
    if (local & (Mask{1} << i)) out |= coord_bit(labels_[static_cast<std::size_t>(i)]);
  return out;
}

ConceptClass restrict(const ConceptClass& c, CoordSet y) {
  check_subset(c, y);
  std::vector<Concept> out;
  out.reserve(c.size());
  for (Concept x : c) out.push_back(compress_bits(x, y));
  return ConceptClass(popcount(y), std::move(out), select_labels(c.labels(), y));
}

ConceptClass drop(const ConceptClass& c, CoordSet y) {
  check_subset(c, y);
  return restrict(c, c.domain_mask() & ~y);
}

std::vector<Concept> reduction_tags(std::span<const Concept> sorted, CoordSet y) {
  std::vector<Concept> tags;
  for (Concept c : sorted) {
    if (c & y) continue;  // only visit each cube at its bottom vertex
    bool full = true;
    for_each_subset(y, [&](Mask sub) {
      if (full && sub && !sorted_contains(sorted, c | sub)) full = false;
    });
    if (full) tags.push_back(c);
  }
  return tags;
}

std::optional<ConceptClass> reduce(const ConceptClass& c, CoordSet y) {
  check_subset(c, y);
  auto tags = reduction_tags(c.concepts(), y);
  if (tags.empty()) return std::nullopt;
  Mask rest = c.domain_mask() & ~y;
  for (Concept& t : tags) t = compress_bits(t, rest);
  return ConceptClass(popcount(rest), std::move(tags), select_labels(c.labels(), rest));
}

ConceptClass complement(const ConceptClass& c) {
  if (c.is_full_cube())
    throw EmptyClassError("complement of the full cube is empty");
  std::vector<Concept> out;
  out.reserve((std::size_t{1} << c.n()) - c.size());
  std::size_t j = 0;
  auto cs = c.concepts();
  for (Concept x = 0; x <= c.domain_mask(); ++x) {
    if (j < cs.size() && cs[j] == x)
      ++j;
    else
      out.push_back(x);
    if (x == c.domain_mask()) break;
  }
  return ConceptClass(c.n(), std::move(out), c.labels());
}

ConceptClass twist(const ConceptClass& c, CoordSet y) {
  check_subset(c, y);
  std::vector<Concept> out;
  out.reserve(c.size());
  for (Concept x : c) out.push_back(x ^ y);
  return ConceptClass(c.n(), std::move(out), c.labels());
}

ConceptClass product(const ConceptClass& a, const ConceptClass& b) {
  if (a.n() + b.n() > kMaxDomain)
    throw DomainError("product domain exceeds " + std::to_string(kMaxDomain) +
                      " coordinates");
  std::vector<Concept> out;
  out.reserve(a.size() * b.size());
  for (Concept x : a)
    for (Concept y : b) out.push_back(x | (y << a.n()));
  std::vector<int> labels = identity_labels(a.n() + b.n());
  return ConceptClass(a.n() + b.n(), std::move(out), std::move(labels));
}

std::optional<ConceptClass> intersect_cube(const ConceptClass& c, const Cube& b) {
  check_subset(c, b.support | b.tag);
  if (b.tag & b.support) throw DomainError("cube tag overlaps its support");
  std::vector<Concept> out;
  for (Concept x : c)
    if (b.contains(x)) out.push_back(x);
  if (out.empty()) return std::nullopt;
  return ConceptClass(c.n(), std::move(out), c.labels());
}

std::optional<ConceptClass> carrier(const ConceptClass& c, int x) {
  check_coord(c, x);
  Mask bit = coord_bit(x);
  std::vector<Concept> out;
  for (Concept v : c)
    if (c.contains(v ^ bit)) out.push_back(v);
  if (out.empty()) return std::nullopt;
  return ConceptClass(c.n(), std::move(out), c.labels());
}

std::optional<ConceptClass> tail(const ConceptClass& c, int x) {
  check_coord(c, x);
  Mask bit = coord_bit(x);
  Mask rest = c.domain_mask() & ~bit;
  std::vector<Concept> out;
  for (Concept v : c)
    if (!c.contains(v ^ bit)) out.push_back(compress_bits(v, rest));
  if (out.empty()) return std::nullopt;
  return ConceptClass(c.n() - 1, std::move(out), select_labels(c.labels(), rest));
}

std::vector<Cube> cube_complex(std::span<const Concept> sorted, int n) {
  std::vector<Cube> all;
  std::vector<Cube> level;
  level.reserve(sorted.size());
  for (Concept c : sorted) level.push_back(Cube{c, 0});
  std::unordered_set<std::uint64_t> present;
  while (!level.empty()) {
    all.insert(all.end(), level.begin(), level.end());
    present.clear();
    for (const Cube& q : level) present.insert(q.key());
    std::vector<Cube> next;
    for (const Cube& q : level) {
      // Extend only below the lowest support bit so each cube is built once.
      Mask limit = q.support ? (q.support & (~q.support + 1)) : (Mask{1} << n);
      for (Mask bit = 1; bit < limit; bit <<= 1) {
        if (q.tag & bit) continue;
        if (present.count(Cube{q.tag | bit, q.support}.key()))
          next.push_back(Cube{q.tag, q.support | bit});
      }
    }
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }
  return all;
}

std::vector<Cube> cube_complex(const ConceptClass& c) {
  return cube_complex(c.concepts(), c.n());
}

}  // namespace amplekit
