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

#include "amplekit/repmap.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "amplekit/graph.hpp"
#include "amplekit/matching.hpp"

namespace amplekit {

RepMap::RepMap(int n, std::vector<Entry> entries) : n_(n), entries_(std::move(entries)) {
  if (n < 0 || n > kMaxDomain) throw DomainError("domain size out of range");
  std::sort(entries_.begin(), entries_.end());
  const Mask outside = ~full_mask(n);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if ((entries_[i].first | entries_[i].second) & outside)
      throw DomainError("representation map entry outside the domain");
    if (i > 0 && entries_[i].first == entries_[i - 1].first)
      throw ContractError("concept " + to_bitstring(entries_[i].first, n) +
                          " has two images");
  }
}

RepMap::RepMap(const ConceptClass& c, std::span<const CoordSet> images) : n_(c.n()) {
  if (images.size() != c.size()) throw ContractError("image list is not aligned with the class");
  entries_.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (images[i] & ~c.domain_mask()) throw DomainError("image outside the domain");
    entries_.emplace_back(c[i], images[i]);
  }
}

std::optional<CoordSet> RepMap::find(Concept c) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), c,
                             [](const Entry& e, Concept v) { return e.first < v; });
  if (it == entries_.end() || it->first != c) return std::nullopt;
  return it->second;
}

CoordSet RepMap::at(Concept c) const {
  auto v = find(c);
  if (!v) throw ContractError("no image for concept " + to_bitstring(c, n_));
  return *v;
}

std::vector<CoordSet> RepMap::images_for(const ConceptClass& c) const {
  if (c.n() != n_) throw DomainError("representation map and class have different domains");
  std::vector<CoordSet> out;
  out.reserve(c.size());
  for (Concept x : c) out.push_back(at(x));
  return out;
}

std::optional<Concept> RepMap::preimage(CoordSet z) const {
  for (const auto& [c, img] : entries_)
    if (img == z) return c;
  return std::nullopt;
}

void write_repmap(std::ostream& out, const RepMap& r) {
  for (const auto& [c, img] : r.entries())
    out << to_bitstring(c, r.n()) << " -> " << to_bitstring(img, r.n()) << '\n';
}

RepMap read_repmap(std::istream& in) {
  std::vector<RepMap::Entry> entries;
  int n = -1;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    std::string body = line.substr(first, last - first + 1);
    auto arrow = body.find("->");
    if (arrow == std::string::npos) throw ParseError("expected '<concept> -> <set>'", lineno);
    auto trim = [](std::string s) {
      auto a = s.find_first_not_of(" \t");
      auto b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
    };
    std::string lhs = trim(body.substr(0, arrow));
    std::string rhs = trim(body.substr(arrow + 2));
    if (lhs.empty() || lhs.size() != rhs.size())
      throw ParseError("concept and set must be bitstrings of equal width", lineno);
    if (n < 0) n = static_cast<int>(lhs.size());
    if (static_cast<int>(lhs.size()) != n) throw ParseError("inconsistent width", lineno);
    try {
      entries.emplace_back(parse_bitstring(lhs, n), parse_bitstring(rhs, n));
    } catch (const Error& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  if (n < 0) throw ParseError("empty representation map", 0);
  return RepMap(n, std::move(entries));
}

namespace {

std::vector<CoordSet> domain_list(int n, const VerifyOptions& opts, bool& exhaustive) {
  std::vector<CoordSet> out;
  const Mask all = full_mask(n);
  if (n <= opts.exhaustive_cap) {
    exhaustive = true;
    for (Mask y = 0;; ++y) {
      out.push_back(y);
      if (y == all) break;
    }
    return out;
  }
  exhaustive = false;
  std::mt19937_64 rng(opts.seed);
  out.push_back(0);
  out.push_back(all);
  for (std::size_t i = 0; i < opts.samples; ++i) out.push_back(static_cast<Mask>(rng()) & all);
  return canonical(std::move(out));
}

CoordSet neighbor_coords(const MembershipBitmap& member, Concept c, int n) {
  CoordSet out = 0;
  for (int i = 0; i < n; ++i)
    if (member.test(c ^ (Mask{1} << i))) out |= Mask{1} << i;
  return out;
}

// Every S such that the S-cube through c lies in the class, ascending.
std::vector<CoordSet> cubes_through(const MembershipBitmap& member, Concept c, int n) {
  const CoordSet nb = neighbor_coords(member, c, n);
  std::vector<CoordSet> out{0};
  for (std::size_t head = 0; head < out.size(); ++head) {
    CoordSet s = out[head];
    int from = s ? std::bit_width(s) : 0;
    for (int i = from; i < n; ++i) {
      Mask bit = Mask{1} << i;
      if ((nb & bit) && member.cube_inside(c ^ bit, s)) out.push_back(s | bit);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Concept> first_c1_failure(const ConceptClass& c, std::span<const CoordSet> images,
                                        const MembershipBitmap& member) {
  for (std::size_t i = 0; i < c.size(); ++i)
    if ((images[i] & ~c.domain_mask()) || !member.cube_inside(c[i], images[i])) return c[i];
  return std::nullopt;
}

// Smallest cube of C (support, then tag) without exactly one sink.
std::optional<Cube> first_c2_failure(const ConceptClass& c, std::span<const CoordSet> images) {
  auto cubes = cube_complex(c);
  std::sort(cubes.begin(), cubes.end());
  for (const Cube& q : cubes) {
    int sinks = 0;
    for_each_subset(q.support, [&](Mask sub) {
      auto i = static_cast<std::size_t>(c.index_of(q.tag | sub));
      if ((images[i] & q.support) == 0) ++sinks;
    });
    if (sinks != 1) return q;
  }
  return std::nullopt;
}

}  // namespace

RepMapReport verify_repmap(const ConceptClass& c, const RepMap& r, const VerifyOptions& opts) {
  const auto images = r.images_for(c);
  const int n = c.n();
  const auto concepts = c.concepts();
  RepMapReport rep;

  auto lower = strongly_shattered_sets(concepts, n);
  {
    std::vector<std::pair<CoordSet, Concept>> by_image;
    for (std::size_t i = 0; i < c.size(); ++i) by_image.emplace_back(images[i], c[i]);
    std::sort(by_image.begin(), by_image.end());
    std::optional<Concept> bad;
    auto note = [&](Concept x) {
      if (!bad || x < *bad) bad = x;
    };
    for (std::size_t i = 0; i < by_image.size(); ++i) {
      if (!std::binary_search(lower.begin(), lower.end(), by_image[i].first)) note(by_image[i].second);
      if (i > 0 && by_image[i].first == by_image[i - 1].first) {
        note(by_image[i].second);
        note(by_image[i - 1].second);
      }
    }
    rep.bijective_witness = bad;
    rep.bijective = !bad && lower.size() == c.size();
  }

  if (auto p = first_clash(concepts, images, ClashRule::union_of_images, opts.exec))
    rep.r1_witness = std::pair{c[p->first], c[p->second]};
  rep.r1 = !rep.r1_witness;
  if (auto p = first_clash(concepts, images, ClashRule::symmetric_difference, opts.exec))
    rep.r4_witness = std::pair{c[p->first], c[p->second]};
  rep.r4 = !rep.r4_witness;

  auto domains = domain_list(n, opts, rep.exhaustive);
  rep.r2_witness = first_reconstruction_failure(concepts, images, domains, opts.exec);
  rep.r2 = !rep.r2_witness;
  rep.r3_witness = first_cube_injectivity_failure(concepts, images, domains, n, opts.exec);
  rep.r3 = !rep.r3_witness;

  MembershipBitmap member(concepts, n);
  rep.c1_witness = first_c1_failure(c, images, member);
  rep.c1 = !rep.c1_witness;
  rep.c2_witness = first_c2_failure(c, images);
  rep.c2 = !rep.c2_witness;
  return rep;
}

namespace {

std::size_t position(std::span<const Concept> sorted, Concept c) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), c);
  if (it == sorted.end() || *it != c) throw IntegrityError("concept missing from its class");
  return static_cast<std::size_t>(it - sorted.begin());
}

// Sources of the incomplete cubes of cx relative to d ⊆ cx: for each
// simplex σ of X(cx) \ X(d), every σ-cube of cx has exactly one vertex whose
// σ-pattern is missing from d|σ.
std::vector<std::pair<Concept, Cube>> source_assignment(std::span<const Concept> cx,
                                                        std::span<const Concept> d, int n) {
  auto lower_c = strongly_shattered_sets(cx, n);
  auto lower_d = strongly_shattered_sets(d, n);
  std::vector<CoordSet> missed;
  std::set_difference(lower_c.begin(), lower_c.end(), lower_d.begin(), lower_d.end(),
                      std::back_inserter(missed));
  std::vector<std::pair<Concept, Cube>> out;
  for (CoordSet sigma : missed) {
    auto miss = missing_patterns(d, sigma);
    if (miss.size() != 1)
      throw IntegrityError("restriction to " + format_coordset(sigma) +
                           " does not miss exactly one pattern");
    for (Concept tag : reduction_tags(cx, sigma)) {
      Concept src = tag | miss.front();
      if (!sorted_contains(cx, src) || sorted_contains(d, src))
        throw IntegrityError("source of an incomplete cube lies outside C \\ D");
      out.emplace_back(src, Cube{tag, sigma});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i].first == out[i - 1].first)
      throw IntegrityError("concept " + to_bitstring(out[i].first, n) +
                           " is the source of two incomplete cubes");
  std::size_t outside = 0;
  for (Concept x : cx)
    if (!sorted_contains(d, x)) ++outside;
  if (out.size() != outside) throw IntegrityError("sources do not cover C \\ D");
  return out;
}

std::vector<CoordSet> build_rec(const std::vector<Concept>& cs, int k) {
  if (cs.size() == 1) return {0};
  if (k == 0) throw IntegrityError("distinct concepts on an empty domain");
  const Mask bit = Mask{1} << (k - 1);
  std::vector<Concept> cx;
  cx.reserve(cs.size());
  for (Concept c : cs) cx.push_back(c & ~bit);
  cx = canonical(std::move(cx));
  auto tags = reduction_tags(cs, bit);
  if (tags.empty()) throw IntegrityError("maximum class without an edge in its last coordinate");

  auto r_hyper = build_rec(tags, k - 1);
  std::vector<CoordSet> r_x(cx.size(), 0);
  if (tags.size() == cx.size()) {
    r_x = r_hyper;
  } else {
    for (std::size_t i = 0; i < tags.size(); ++i) r_x[position(cx, tags[i])] = r_hyper[i];
    for (const auto& [src, cube] : source_assignment(cx, tags, k - 1))
      r_x[position(cx, src)] = cube.support;
  }

  std::vector<CoordSet> out;
  out.reserve(cs.size());
  for (Concept c : cs) {
    CoordSet img = r_x[position(cx, c & ~bit)];
    if ((c & bit) && sorted_contains(tags, c & ~bit)) img |= bit;
    out.push_back(img);
  }
  return out;
}

}  // namespace

RepMap build_maximum_repmap(const ConceptClass& c) {
  if (!is_maximum(c)) throw ContractError("build_maximum_repmap requires a maximum class");
  std::vector<Concept> cs(c.begin(), c.end());
  auto images = build_rec(cs, c.n());
  return RepMap(c, images);
}

std::map<Concept, Cube> incomplete_cube_sources(const ConceptClass& c, const ConceptClass& d) {
  if (c.n() != d.n()) throw ContractError("classes live on different domains");
  if (!is_maximum(c) || !is_maximum(d)) throw ContractError("both classes must be maximum");
  for (Concept x : d)
    if (!c.contains(x)) throw ContractError("D is not contained in C");
  if (vc_dim(d) + 1 != vc_dim(c)) throw ContractError("dim D must be dim C - 1");
  std::map<Concept, Cube> out;
  for (const auto& [src, cube] : source_assignment(c.concepts(), d.concepts(), c.n()))
    out.emplace(src, cube);
  return out;
}

namespace {

std::optional<Concept> first_out_map_failure(const ConceptClass& c,
                                             std::span<const CoordSet> images,
                                             const MembershipBitmap& member) {
  const int n = c.n();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (images[i] & ~c.domain_mask()) return c[i];
    for (int b = 0; b < n; ++b) {
      Mask bit = Mask{1} << b;
      Concept other = c[i] ^ bit;
      bool mine = images[i] & bit;
      if (!member.test(other)) {
        if (mine) return c[i];
        continue;
      }
      bool theirs = images[static_cast<std::size_t>(c.index_of(other))] & bit;
      if (mine == theirs) return std::min(c[i], other);
    }
  }
  return std::nullopt;
}

}  // namespace

UsoReport check_uso(const ConceptClass& c, const OutMap& r) {
  auto images = r.images_for(c);
  MembershipBitmap member(c.concepts(), c.n());
  UsoReport rep;
  rep.out_map_witness = first_out_map_failure(c, images, member);
  rep.out_map = !rep.out_map_witness;
  rep.c1_witness = first_c1_failure(c, images, member);
  rep.c1 = !rep.c1_witness;
  rep.c2_witness = first_c2_failure(c, images);
  rep.c2 = !rep.c2_witness;
  return rep;
}

bool image_in_complex_and_c2(const ConceptClass& c, const OutMap& r) {
  auto images = r.images_for(c);
  auto lower = strongly_shattered_sets(c.concepts(), c.n());
  for (CoordSet img : images)
    if (!std::binary_search(lower.begin(), lower.end(), img)) return false;
  return !first_c2_failure(c, images);
}

Orientation::Orientation(const ConceptClass& c, const OutMap& out) : class_(c), out_(out) {
  auto images = out_.images_for(c);
  MembershipBitmap member(c.concepts(), c.n());
  if (auto bad = first_out_map_failure(c, images, member))
    throw ContractError("not the out-map of an orientation at concept " +
                        to_bitstring(*bad, c.n()));
}

std::vector<Concept> Orientation::find_cycle() const {
  const std::size_t m = class_.size();
  const int n = class_.n();
  auto images = out_.images_for(class_);
  auto successors = [&](std::size_t u) {
    std::vector<std::size_t> out;
    for (Mask rest = images[u]; rest; rest &= rest - 1)
      out.push_back(static_cast<std::size_t>(class_.index_of(class_[u] ^ (rest & (~rest + 1)))));
    return out;
  };
  (void)n;
  // 0 unvisited, 1 on stack, 2 done.
  std::vector<int> color(m, 0);
  std::vector<std::size_t> parent(m, m);
  for (std::size_t root = 0; root < m; ++root) {
    if (color[root]) continue;
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> stack;
    stack.emplace_back(root, successors(root));
    color[root] = 1;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      if (next.empty()) {
        color[u] = 2;
        stack.pop_back();
        continue;
      }
      std::size_t v = next.back();
      next.pop_back();
      if (color[v] == 1) {
        std::vector<Concept> cycle{class_[v]};
        for (std::size_t w = u; w != v; w = parent[w]) cycle.push_back(class_[w]);
        cycle.push_back(class_[v]);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (color[v] == 0) {
        color[v] = 1;
        parent[v] = u;
        stack.emplace_back(v, successors(v));
      }
    }
  }
  return {};
}

bool Orientation::is_acyclic() const { return find_cycle().empty(); }

Ordering uso_to_peeling(const ConceptClass& c, const Orientation& o) {
  auto cycle = o.find_cycle();
  if (!cycle.empty()) {
    std::string text;
    for (Concept x : cycle) text += (text.empty() ? "" : " -> ") + to_bitstring(x, c.n());
    throw ContractError("orientation has a directed cycle: " + text);
  }
  auto uso = check_uso(c, o.out_map());
  if (!uso.ok()) {
    if (uso.c2_witness)
      throw ContractError("cube " + format_cube(*uso.c2_witness, c.n()) +
                          " does not have a unique sink");
    throw ContractError("outgoing edges of " +
                        to_bitstring(uso.c1_witness.value_or(0), c.n()) + " do not span a cube");
  }
  auto images = o.out_map().images_for(c);
  const std::size_t m = c.size();
  std::vector<bool> present(m, true);
  Ordering removed;
  removed.reserve(m);
  for (std::size_t step = 0; step < m; ++step) {
    std::size_t pick = m;
    for (std::size_t i = 0; i < m && pick == m; ++i) {
      if (!present[i]) continue;
      bool source = true;
      for (int b = 0; b < c.n() && source; ++b) {
        Mask bit = Mask{1} << b;
        auto j = c.index_of(c[i] ^ bit);
        if (j >= 0 && present[static_cast<std::size_t>(j)] && !(images[i] & bit)) source = false;
      }
      if (source) pick = i;
    }
    if (pick == m) throw IntegrityError("acyclic orientation without a source");
    present[pick] = false;
    removed.push_back(c[pick]);
  }
  std::reverse(removed.begin(), removed.end());
  return removed;
}

Orientation peeling_to_uso(const ConceptClass& c, std::span<const Concept> order) {
  if (!classify_ordering(c, order).corner_peeling)
    throw ContractError("ordering is not a corner peeling");
  std::vector<std::size_t> pos(c.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    pos[static_cast<std::size_t>(c.index_of(order[i]))] = i;
  std::vector<CoordSet> images(c.size(), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (int b = 0; b < c.n(); ++b) {
      Mask bit = Mask{1} << b;
      auto j = c.index_of(c[i] ^ bit);
      if (j >= 0 && pos[static_cast<std::size_t>(j)] < pos[i]) images[i] |= bit;
    }
  }
  return Orientation(c, RepMap(c, images));
}

namespace {

void require_repmap(const ConceptClass& c, const RepMap& r, const VerifyOptions& opts) {
  if (!verify_repmap(c, r, opts).all()) throw ContractError("not a representation map of the class");
}

}  // namespace

SubRepMap sub_repmap_cube(const ConceptClass& c, const RepMap& r, const Cube& b,
                          const VerifyOptions& opts) {
  if ((b.tag | b.support) & ~c.domain_mask()) throw DomainError("cube outside the domain");
  if (b.tag & b.support) throw ContractError("cube tag overlaps its support");
  require_repmap(c, r, opts);
  auto part = intersect_cube(c, b);
  if (!part) throw ContractError("the class does not meet the cube");
  std::vector<RepMap::Entry> entries;
  for (Concept x : *part) entries.emplace_back(x, r.at(x) & b.support);
  return {*part, RepMap(c.n(), std::move(entries))};
}

SubRepMap sub_repmap_reduction(const ConceptClass& c, const RepMap& r, CoordSet y,
                               const VerifyOptions& opts) {
  if (y & ~c.domain_mask()) throw DomainError("coordinate set outside the domain");
  require_repmap(c, r, opts);
  auto reduced = reduce(c, y);
  if (!reduced) throw ContractError("the reduction is empty");
  const Mask rest = c.domain_mask() & ~y;
  std::vector<RepMap::Entry> entries;
  for (Concept tag : reduction_tags(c.concepts(), y)) {
    std::optional<Concept> source;
    int found = 0;
    for_each_subset(y, [&](Mask sub) {
      Concept v = tag | sub;
      if ((r.at(v) & y) == y) {
        ++found;
        source = v;
      }
    });
    if (found != 1) throw IntegrityError("Y-cube without a unique source");
    entries.emplace_back(compress_bits(tag, rest), compress_bits(r.at(*source) & ~y, rest));
  }
  return {*reduced, RepMap(reduced->n(), std::move(entries))};
}

SubRepMap sub_repmap_restriction(const ConceptClass& c, const RepMap& r, CoordSet y,
                                 const VerifyOptions& opts) {
  if (y & ~c.domain_mask()) throw DomainError("coordinate set outside the domain");
  require_repmap(c, r, opts);
  auto dropped = drop(c, y);
  const Mask rest = c.domain_mask() & ~y;
  std::vector<RepMap::Entry> entries;
  for (Concept local : dropped) {
    Concept tag = expand_bits(local, rest);
    std::optional<Concept> sink;
    int found = 0;
    for_each_subset(y, [&](Mask sub) {
      Concept v = tag | sub;
      if (c.contains(v) && (r.at(v) & y) == 0) {
        ++found;
        sink = v;
      }
    });
    if (found != 1) throw IntegrityError("fiber without a unique sink");
    entries.emplace_back(local, compress_bits(r.at(*sink), rest));
  }
  return {dropped, RepMap(dropped.n(), std::move(entries))};
}

namespace {

void require_ample(const ConceptClass& c) {
  if (!is_ample(c)) throw ContractError("the class is not ample");
}

}  // namespace

std::vector<std::pair<CoordSet, std::vector<Concept>>> hall_graph(const ConceptClass& c) {
  require_ample(c);
  MembershipBitmap member(c.concepts(), c.n());
  std::map<CoordSet, std::vector<Concept>> by_set;
  for (Concept x : c)
    for (CoordSet s : cubes_through(member, x, c.n())) by_set[s].push_back(x);
  return {by_set.begin(), by_set.end()};
}

RepMap pre_rep_c1(const ConceptClass& c) {
  require_ample(c);
  auto lower = strongly_shattered_sets(c.concepts(), c.n());
  MembershipBitmap member(c.concepts(), c.n());
  BipartiteMatching gamma(c.size(), lower.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    for (CoordSet s : cubes_through(member, c[i], c.n()))
      gamma.add_edge(i, position(lower, s));
  gamma.solve();
  if (!gamma.perfect()) throw IntegrityError("no perfect matching between C and X(C)");
  std::vector<CoordSet> images(c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    images[i] = lower[static_cast<std::size_t>(gamma.mate_of_left(i))];
  if (first_c1_failure(c, images, member)) throw IntegrityError("matched map violates C1");
  return RepMap(c, images);
}

namespace {

std::vector<CoordSet> pre_rep_c2_rec(const std::vector<Concept>& cs, int k) {
  if (cs.size() == 1 || k == 0) return std::vector<CoordSet>(cs.size(), 0);
  const Mask bit = Mask{1} << (k - 1);
  std::vector<Concept> cx;
  cx.reserve(cs.size());
  for (Concept c : cs) cx.push_back(c & ~bit);
  cx = canonical(std::move(cx));
  auto r_x = pre_rep_c2_rec(cx, k - 1);
  std::vector<CoordSet> out;
  out.reserve(cs.size());
  for (Concept c : cs) {
    CoordSet img = r_x[position(cx, c & ~bit)];
    if ((c & bit) && sorted_contains(cs, c & ~bit)) img |= bit;
    out.push_back(img);
  }
  return out;
}

}  // namespace

RepMap pre_rep_c2(const ConceptClass& c) {
  require_ample(c);
  std::vector<Concept> cs(c.begin(), c.end());
  auto images = pre_rep_c2_rec(cs, c.n());
  auto sorted = images;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw IntegrityError("recursive map is not injective");
  if (first_c2_failure(c, images)) throw IntegrityError("recursive map violates C2");
  return RepMap(c, images);
}

IsrInstance isr_instance(const ConceptClass& c) {
  require_ample(c);
  MembershipBitmap member(c.concepts(), c.n());
  IsrInstance inst;
  inst.n = c.n();
  for (Concept x : c) {
    std::vector<std::size_t> part;
    for (CoordSet s : cubes_through(member, x, c.n())) {
      part.push_back(inst.vertices.size());
      inst.vertices.push_back({x, s});
    }
    inst.parts.push_back(std::move(part));
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      const Mask diff = c[i] ^ c[j];
      // Any cube of C through both contains the interval, and the condition
      // only gets weaker on a smaller support.
      if (!member.cube_inside(c[i], diff)) continue;
      for (std::size_t u : inst.parts[i])
        for (std::size_t v : inst.parts[j])
          if (((inst.vertices[u].set ^ inst.vertices[v].set) & diff) == 0)
            inst.edges.emplace_back(u, v);
    }
  }
  std::sort(inst.edges.begin(), inst.edges.end());
  return inst;
}

std::string isr_to_json(const IsrInstance& inst) {
  nlohmann::ordered_json j;
  j["n"] = inst.n;
  auto vertices = nlohmann::ordered_json::array();
  for (std::size_t v = 0; v < inst.vertices.size(); ++v) {
    nlohmann::ordered_json item;
    item["id"] = v;
    item["concept"] = to_bitstring(inst.vertices[v].member, inst.n);
    item["set"] = format_coordset(inst.vertices[v].set);
    vertices.push_back(item);
  }
  j["vertices"] = vertices;
  auto parts = nlohmann::ordered_json::array();
  for (const auto& part : inst.parts) {
    nlohmann::ordered_json item;
    item["concept"] = part.empty() ? std::string{} : to_bitstring(inst.vertices[part.front()].member, inst.n);
    item["vertices"] = part;
    parts.push_back(item);
  }
  j["parts"] = parts;
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [u, v] : inst.edges) edges.push_back({u, v});
  j["edges"] = edges;
  return j.dump(1);
}

namespace {

class IsrSearch {
 public:
  IsrSearch(const IsrInstance& inst, std::uint64_t budget)
      : inst_(inst), budget_(budget), adj_(inst.vertices.size()),
        part_of_(inst.vertices.size()), blocked_(inst.vertices.size(), 0),
        available_(inst.parts.size()), chosen_(inst.parts.size(), kUnset) {
    for (const auto& [u, v] : inst.edges) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (std::size_t p = 0; p < inst.parts.size(); ++p) {
      available_[p] = inst.parts[p].size();
      for (std::size_t v : inst.parts[p]) part_of_[v] = p;
    }
  }

  IsrResult run() {
    IsrResult result;
    bool ok = descend(0);
    result.nodes = nodes_;
    if (ok) {
      result.status = IsrStatus::found;
      result.chosen = chosen_;
    } else {
      result.status = out_of_budget_ ? IsrStatus::unknown : IsrStatus::infeasible;
    }
    return result;
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  bool descend(std::size_t depth) {
    if (depth == inst_.parts.size()) return true;
    // Fewest remaining candidates first.
    std::size_t best = kUnset;
    for (std::size_t p = 0; p < inst_.parts.size(); ++p)
      if (chosen_[p] == kUnset && (best == kUnset || available_[p] < available_[best])) best = p;
    if (available_[best] == 0) return false;
    for (std::size_t v : inst_.parts[best]) {
      if (blocked_[v]) continue;
      if (nodes_ >= budget_) {
        out_of_budget_ = true;
        return false;
      }
      ++nodes_;
      chosen_[best] = v;
      for (std::size_t w : adj_[v])
        if (blocked_[w]++ == 0) --available_[part_of_[w]];
      bool ok = descend(depth + 1);
      if (ok) return true;
      for (std::size_t w : adj_[v])
        if (--blocked_[w] == 0) ++available_[part_of_[w]];
      chosen_[best] = kUnset;
      if (out_of_budget_) return false;
    }
    return false;
  }

  const IsrInstance& inst_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> part_of_;
  std::vector<std::size_t> blocked_;
  std::vector<std::size_t> available_;
  std::vector<std::size_t> chosen_;
};

}  // namespace

IsrResult isr_solve(const IsrInstance& inst, std::uint64_t budget) {
  return IsrSearch(inst, budget).run();
}

RepMap isr_to_repmap(const IsrInstance& inst, const IsrResult& result) {
  if (result.status != IsrStatus::found) throw ContractError("no ISR to convert");
  std::vector<RepMap::Entry> entries;
  for (std::size_t v : result.chosen)
    entries.emplace_back(inst.vertices[v].member, inst.vertices[v].set);
  return RepMap(inst.n, std::move(entries));
}

TailMatchingReport tail_matching_analysis(const ConceptClass& c, int x) {
  if (x < 1 || x > c.n()) throw DomainError("coordinate out of range");
  if (!is_maximum(c)) throw ContractError("tail matching requires a maximum class");
  TailMatchingReport rep;
  rep.x = x;
  rep.d = vc_dim(c);
  const Mask bit = coord_bit(x);
  for (Concept v : c)
    if (!c.contains(v ^ bit)) rep.tail.push_back(v);
  auto hyper = reduction_tags(c.concepts(), bit);
  const Mask others = c.domain_mask() & ~bit;
  for (Mask y = 0;; ++y) {
    if (is_subset(y, others) && popcount(y) == rep.d)
      for (Concept p : missing_patterns(hyper, y)) rep.labels.push_back({y, p});
    if (y == c.domain_mask()) break;
  }

  BipartiteMatching gamma(rep.tail.size(), rep.labels.size());
  for (std::size_t i = 0; i < rep.tail.size(); ++i) {
    for (std::size_t j = 0; j < rep.labels.size(); ++j) {
      if ((rep.tail[i] & rep.labels[j].support) == rep.labels[j].pattern) {
        rep.edges.emplace_back(i, j);
        gamma.add_edge(i, j);
      }
    }
  }
  gamma.solve();
  if (!gamma.perfect())
    rep.status = MatchingStatus::no_perfect_matching;
  else
    rep.status = gamma.unique() ? MatchingStatus::unique : MatchingStatus::multiple;
  for (std::size_t i = 0; i < rep.tail.size(); ++i)
    if (gamma.mate_of_left(i) != BipartiteMatching::kFree)
      rep.matching.emplace_back(i, static_cast<std::size_t>(gamma.mate_of_left(i)));

  auto left = gamma.left_degrees();
  auto right = gamma.right_degrees();
  for (std::size_t i = 0; i < left.size(); ++i)
    if (left[i] == 1) rep.degree_one_tail.push_back(i);
  std::set<Concept> candidates;
  for (std::size_t j = 0; j < right.size(); ++j) {
    if (right[j] != 1) continue;
    rep.degree_one_labels.push_back(j);
    for (const auto& [ti, lj] : rep.edges)
      if (lj == j) candidates.insert(rep.tail[ti]);
  }
  rep.corner_candidates.assign(candidates.begin(), candidates.end());
  for (Concept v : rep.corner_candidates)
    if (is_corner(c.concepts(), v)) rep.confirmed_corners.push_back(v);
  return rep;
}

std::string to_string(MatchingStatus s) {
  switch (s) {
    case MatchingStatus::no_perfect_matching:
      return "no_perfect_matching";
    case MatchingStatus::unique:
      return "unique";
    case MatchingStatus::multiple:
      return "multiple";
  }
  return "unknown";
}

}  // namespace amplekit
