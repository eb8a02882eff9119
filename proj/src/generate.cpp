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

#include "amplekit/generate.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>

#include "amplekit/shatter.hpp"

namespace amplekit {

namespace {

void check_n(int n, int lo = 1) {
  if (n < lo || n > kMaxDomain)
    throw UsageError("n must be in [" + std::to_string(lo) + ", " + std::to_string(kMaxDomain) + "]");
}

ConceptClass hamming_ball(int n, int d) {
  check_n(n, 0);
  if (d < 0) throw UsageError("radius must be nonnegative");
  std::vector<Concept> out;
  for (Mask c = 0;; ++c) {
    if (popcount(c) <= d) out.push_back(c);
    if (c == full_mask(n)) break;
  }
  return ConceptClass(n, std::move(out));
}

ConceptClass simplicial(int n, const std::vector<CoordSet>& facets) {
  check_n(n, 0);
  std::vector<Concept> out{0};
  for (CoordSet f : facets) {
    if (f & ~full_mask(n)) throw UsageError("facet outside the domain");
    for_each_subset(f, [&](Mask sub) { out.push_back(sub); });
  }
  return ConceptClass(n, canonical(std::move(out)));
}

// Grows from a random vertex, adding a uniformly chosen neighbour t while
// C ∪ {t} stays isometric.
ConceptClass random_ample(const GeneratorSpec& spec) {
  check_n(spec.n);
  if (spec.n > 20) throw UsageError("random_ample supports n <= 20");
  const std::size_t cap = std::size_t{1} << spec.n;
  const std::size_t target = spec.size ? spec.size : cap / 2;
  if (target > cap) throw UsageError("size exceeds 2^n");
  std::mt19937_64 rng(spec.seed);
  const Mask all = full_mask(spec.n);
  std::vector<std::uint8_t> in(cap, 0);
  std::vector<Concept> members{static_cast<Concept>(rng()) & all};
  in[members.front()] = 1;
  std::vector<Concept> candidates;
  while (members.size() < target) {
    candidates.clear();
    for (Concept c : members) {
      for (int i = 0; i < spec.n; ++i) {
        Concept t = c ^ (Mask{1} << i);
        if (in[t] != 0) continue;
        in[t] = 2;  // seen this round
        Mask nb = 0;
        for (int j = 0; j < spec.n; ++j)
          if (in[t ^ (Mask{1} << j)] == 1) nb |= Mask{1} << j;
        if (spec.max_dim >= 0 && popcount(nb) > spec.max_dim) continue;
        bool isometric = std::all_of(members.begin(), members.end(),
                                     [&](Concept v) { return ((t ^ v) & nb) != 0; });
        if (isometric) candidates.push_back(t);
      }
    }
    for (Concept c : members)
      for (int i = 0; i < spec.n; ++i)
        if (in[c ^ (Mask{1} << i)] == 2) in[c ^ (Mask{1} << i)] = 0;
    if (candidates.empty()) break;
    std::sort(candidates.begin(), candidates.end());
    Concept pick = candidates[rng() % candidates.size()];
    members.push_back(pick);
    in[pick] = 1;
  }
  ConceptClass out(spec.n, std::move(members));
  if (!is_ample(out)) throw IntegrityError("random_ample produced a non-ample class");
  return out;
}

// Down-sets of a random order on 1..n (i below j with probability
// `density` for i < j, then transitively closed).
ConceptClass poset_ideals(const GeneratorSpec& spec) {
  check_n(spec.n);
  if (spec.n > 20) throw UsageError("poset_ideals supports n <= 20");
  if (spec.density < 0.0 || spec.density > 1.0) throw UsageError("density must be in [0, 1]");
  std::mt19937_64 rng(spec.seed);
  std::vector<Mask> below(static_cast<std::size_t>(spec.n), 0);
  for (int j = 0; j < spec.n; ++j) {
    for (int i = 0; i < j; ++i) {
      double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < spec.density) below[static_cast<std::size_t>(j)] |= (Mask{1} << i) | below[static_cast<std::size_t>(i)];
    }
  }
  std::vector<Concept> out;
  for (Mask m = 0;; ++m) {
    bool ideal = true;
    for (int j = 0; j < spec.n && ideal; ++j)
      if ((m >> j) & 1U) ideal = is_subset(below[static_cast<std::size_t>(j)], m);
    if (ideal) out.push_back(m);
    if (m == full_mask(spec.n)) break;
  }
  return ConceptClass(spec.n, std::move(out));
}

// Closed sets of the convex geometry whose feasible sets are generated
// (under union) by the prefixes of `chains` random permutations.
ConceptClass convex_geometry(const GeneratorSpec& spec) {
  check_n(spec.n);
  if (spec.n > 16) throw UsageError("convex_geometry supports n <= 16");
  if (spec.chains < 1) throw UsageError("chains must be positive");
  std::mt19937_64 rng(spec.seed);
  std::vector<Mask> prefixes;
  std::vector<int> perm(static_cast<std::size_t>(spec.n));
  for (int k = 0; k < spec.chains; ++k) {
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
    Mask prefix = 0;
    for (int x : perm) prefixes.push_back(prefix |= Mask{1} << x);
  }
  prefixes = canonical(std::move(prefixes));
  std::vector<std::uint8_t> seen(std::size_t{1} << spec.n, 0);
  std::vector<Mask> feasible{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < feasible.size(); ++head) {
    for (Mask g : prefixes) {
      Mask u = feasible[head] | g;
      if (!seen[u]) {
        seen[u] = 1;
        feasible.push_back(u);
      }
    }
  }
  std::vector<Concept> out;
  for (Mask f : feasible) out.push_back(full_mask(spec.n) & ~f);
  return ConceptClass(spec.n, std::move(out));
}

}  // namespace

ConceptClass generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::cube:
      check_n(spec.n, 0);
      return ConceptClass::full_cube(spec.n);
    case GeneratorKind::hamming_ball:
      return hamming_ball(spec.n, spec.d);
    case GeneratorKind::simplicial:
      return simplicial(spec.n, spec.facets);
    case GeneratorKind::product: {
      if (spec.factors.empty()) throw UsageError("product needs at least one factor");
      int total = 0;
      for (const auto& f : spec.factors) total += f.n;
      if (total > kMaxDomain) throw UsageError("product domain too large");
      ConceptClass acc = generate(spec.factors.front());
      for (std::size_t i = 1; i < spec.factors.size(); ++i) acc = product(acc, generate(spec.factors[i]));
      return acc;
    }
    case GeneratorKind::random_ample:
      return random_ample(spec);
    case GeneratorKind::poset_ideals:
      return poset_ideals(spec);
    case GeneratorKind::convex_geometry:
      return convex_geometry(spec);
  }
  throw UsageError("unknown generator kind");
}

std::string to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::cube:
      return "cube";
    case GeneratorKind::hamming_ball:
      return "hamming_ball";
    case GeneratorKind::simplicial:
      return "simplicial";
    case GeneratorKind::product:
      return "product";
    case GeneratorKind::random_ample:
      return "random_ample";
    case GeneratorKind::poset_ideals:
      return "poset_ideals";
    case GeneratorKind::convex_geometry:
      return "convex_geometry";
  }
  return "unknown";
}

namespace {

GeneratorKind parse_kind(std::string_view name) {
  for (auto k : {GeneratorKind::cube, GeneratorKind::hamming_ball, GeneratorKind::simplicial,
                 GeneratorKind::product, GeneratorKind::random_ample, GeneratorKind::poset_ideals,
                 GeneratorKind::convex_geometry})
    if (to_string(k) == name) return k;
  throw UsageError("unknown generator kind '" + std::string(name) + "'");
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size())
    throw UsageError("bad value for " + std::string(key) + ": '" + std::string(value) + "'");
  return out;
}

// Splits on commas outside braces.
std::vector<std::string_view> split_top(std::string_view text) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '{') ++depth;
    if (text[i] == '}') --depth;
    if (text[i] == ',' && depth == 0) {
      out.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(text.substr(start));
  return out;
}

}  // namespace

GeneratorSpec parse_generator_spec(std::string_view text) {
  GeneratorSpec spec;
  std::string_view factors_text;
  if (auto at = text.find("factors="); at != std::string_view::npos) {
    factors_text = text.substr(at + 8);
    text = text.substr(0, at);
    while (!text.empty() && text.back() == ',') text.remove_suffix(1);
  }
  auto items = split_top(text);
  if (items.empty() || items.front().empty()) throw UsageError("empty generator spec");
  spec.kind = parse_kind(items.front());
  std::string_view facets_text;
  bool have_facets = false;
  for (std::size_t i = 1; i < items.size(); ++i) {
    auto item = items[i];
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw UsageError("expected key=value, got '" + std::string(item) + "'");
    auto key = item.substr(0, eq);
    auto value = item.substr(eq + 1);
    if (key == "n") spec.n = parse_number<int>(key, value);
    else if (key == "d") spec.d = parse_number<int>(key, value);
    else if (key == "seed") spec.seed = parse_number<std::uint64_t>(key, value);
    else if (key == "size") spec.size = parse_number<std::size_t>(key, value);
    else if (key == "max_dim") spec.max_dim = parse_number<int>(key, value);
    else if (key == "chains") spec.chains = parse_number<int>(key, value);
    else if (key == "density") {
      try {
        spec.density = std::stod(std::string(value));
      } catch (const std::exception&) {
        throw UsageError("bad value for density");
      }
    } else if (key == "facets") {
      facets_text = value;
      have_facets = true;
    } else {
      throw UsageError("unknown key '" + std::string(key) + "'");
    }
  }
  if (have_facets) {
    std::size_t pos = 0;
    while (pos < facets_text.size()) {
      auto end = facets_text.find(';', pos);
      if (end == std::string_view::npos) end = facets_text.size();
      try {
        spec.facets.push_back(parse_coordset(facets_text.substr(pos, end - pos), spec.n));
      } catch (const Error& e) {
        throw UsageError(std::string("bad facet: ") + e.what());
      }
      pos = end + 1;
    }
  }
  if (!factors_text.empty()) {
    std::size_t pos = 0;
    while (pos <= factors_text.size()) {
      auto end = factors_text.find('|', pos);
      if (end == std::string_view::npos) end = factors_text.size();
      spec.factors.push_back(parse_generator_spec(factors_text.substr(pos, end - pos)));
      pos = end + 1;
    }
    spec.n = 0;
    for (const auto& f : spec.factors) spec.n += f.n;
  }
  if (spec.kind == GeneratorKind::product && spec.factors.empty())
    throw UsageError("product needs factors=");
  return spec;
}

}  // namespace amplekit
