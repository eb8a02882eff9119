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

#include "amplekit/compress.hpp"

#include <algorithm>
#include <charconv>
#include <random>

#include "amplekit/shatter.hpp"

namespace amplekit {

std::string format_sample(const LabeledSample& s) {
  std::string out;
  for (int i = 0; i < kMaxDomain; ++i) {
    Mask bit = Mask{1} << i;
    if (!(s.domain & bit)) continue;
    if (!out.empty()) out += ',';
    out += 'x' + std::to_string(i + 1) + '=' + ((s.values & bit) ? '1' : '0');
  }
  return out;
}

LabeledSample parse_sample(std::string_view text, int n) {
  LabeledSample s;
  int last = 0;
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (text.empty()) return s;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    auto eq = item.find('=');
    if (item.size() < 4 || item.front() != 'x' || eq == std::string_view::npos ||
        eq + 2 != item.size() || (item.back() != '0' && item.back() != '1'))
      throw ContractError("malformed sample item '" + std::string(item) + "'");
    int x = 0;
    auto digits = item.substr(1, eq - 1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), x);
    if (ec != std::errc{} || ptr != digits.data() + digits.size())
      throw ContractError("malformed coordinate in '" + std::string(item) + "'");
    if (x < 1 || x > n) throw DomainError("coordinate x" + std::to_string(x) + " outside the domain");
    if (x <= last) throw ContractError("sample coordinates must be strictly ascending");
    last = x;
    s.domain |= coord_bit(x);
    if (item.back() == '1') s.values |= coord_bit(x);
    pos = end + 1;
  }
  return s;
}

std::vector<LabeledSample> realizable_samples(const ConceptClass& c, CoordSet dom) {
  if (dom & ~c.domain_mask()) throw DomainError("sample domain outside the class domain");
  std::vector<Concept> patterns;
  patterns.reserve(c.size());
  for (Concept x : c) patterns.push_back(x & dom);
  patterns = canonical(std::move(patterns));
  std::vector<LabeledSample> out;
  out.reserve(patterns.size());
  for (Concept p : patterns) out.push_back({dom, p});
  return out;
}

bool is_realizable(const ConceptClass& c, const LabeledSample& s) {
  return std::any_of(c.begin(), c.end(), [&](Concept x) { return s.consistent_with(x); });
}

Concept reconstruct_unique(const ConceptClass& c, const RepMap& r, const LabeledSample& s) {
  std::optional<Concept> found;
  int count = 0;
  for (Concept x : c) {
    if (s.consistent_with(x) && is_subset(r.at(x), s.domain)) {
      ++count;
      found = x;
    }
  }
  if (count != 1)
    throw IntegrityError("sample '" + format_sample(s) + "' has " + std::to_string(count) +
                         " reconstruction candidates");
  return *found;
}

Concept decode(const RepMap& r, CoordSet z) {
  if (auto c = r.preimage(z)) return *c;
  throw DecodeError("set " + format_coordset(z) + " is not an image of the representation map");
}

CompressionScheme::CompressionScheme(ConceptClass c, RepMap r)
    : class_(std::move(c)), map_(std::move(r)) {
  auto images = map_.images_for(class_);
  for (std::size_t i = 0; i < images.size(); ++i) inverse_.emplace_back(images[i], class_[i]);
  std::sort(inverse_.begin(), inverse_.end());
  for (std::size_t i = 1; i < inverse_.size(); ++i)
    if (inverse_[i].first == inverse_[i - 1].first)
      throw ContractError("representation map is not injective");
}

CoordSet CompressionScheme::compress(const LabeledSample& s) const {
  if (s.domain & ~class_.domain_mask()) throw DomainError("sample outside the domain");
  if (!is_realizable(class_, s)) throw ContractError("sample is not realizable");
  return map_.at(reconstruct_unique(class_, map_, s));
}

Concept CompressionScheme::decompress(CoordSet z) const {
  auto it = std::lower_bound(inverse_.begin(), inverse_.end(), std::pair<CoordSet, Concept>{z, 0});
  if (it == inverse_.end() || it->first != z)
    throw DecodeError("set " + format_coordset(z) + " is not an image of the representation map");
  return it->second;
}

namespace {

struct DomainOutcome {
  std::size_t samples = 0;
  int max_size = 0;
  std::optional<LabeledSample> witness;
  std::string failure;
};

DomainOutcome check_domain(const ConceptClass& c, std::span<const CoordSet> images,
                           const CompressionScheme& scheme, CoordSet dom, int vc) {
  DomainOutcome out;
  std::vector<std::pair<Concept, std::size_t>> keyed;
  keyed.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) keyed.emplace_back(c[i] & dom, i);
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 0; i < keyed.size();) {
    std::size_t j = i;
    std::size_t count = 0;
    std::size_t gamma = 0;
    for (; j < keyed.size() && keyed[j].first == keyed[i].first; ++j) {
      if (is_subset(images[keyed[j].second], dom)) {
        ++count;
        gamma = keyed[j].second;
      }
    }
    LabeledSample s{dom, keyed[i].first};
    ++out.samples;
    i = j;
    if (count != 1) {
      out.witness = s;
      out.failure = std::to_string(count) + " reconstruction candidates";
      return out;
    }
    CoordSet alpha = images[gamma];
    out.max_size = std::max(out.max_size, popcount(alpha));
    if (!is_subset(alpha, dom)) {
      out.witness = s;
      out.failure = "compressed set leaves the sample domain";
      return out;
    }
    Concept back = 0;
    try {
      back = scheme.decompress(alpha);
    } catch (const DecodeError&) {
      out.witness = s;
      out.failure = "compressed set does not decode";
      return out;
    }
    if (!s.consistent_with(back)) {
      out.witness = s;
      out.failure = "reconstruction is inconsistent with the sample";
      return out;
    }
    if (popcount(alpha) > vc) {
      out.witness = s;
      out.failure = "compressed set larger than the VC dimension";
      return out;
    }
  }
  return out;
}

}  // namespace

SchemeReport verify_scheme(const ConceptClass& c, const CompressionScheme& scheme,
                           const VerifyOptions& opts) {
  SchemeReport rep;
  rep.vc_dim = vc_dim(c);
  const auto images = scheme.repmap().images_for(c);
  const int n = c.n();
  const Mask all = full_mask(n);
  std::vector<CoordSet> domains;
  if (n <= opts.exhaustive_cap) {
    rep.exhaustive = true;
    for (Mask y = 0;; ++y) {
      domains.push_back(y);
      if (y == all) break;
    }
  } else {
    std::mt19937_64 rng(opts.seed);
    domains = {0, all};
    for (std::size_t i = 0; i < opts.samples; ++i) domains.push_back(static_cast<Mask>(rng()) & all);
    domains = canonical(std::move(domains));
  }

  std::vector<DomainOutcome> outcomes(domains.size());
  const auto count = static_cast<std::int64_t>(domains.size());
  if (opts.exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t k = 0; k < count; ++k)
      outcomes[static_cast<std::size_t>(k)] =
          check_domain(c, images, scheme, domains[static_cast<std::size_t>(k)], rep.vc_dim);
  } else {
    for (std::int64_t k = 0; k < count; ++k)
      outcomes[static_cast<std::size_t>(k)] =
          check_domain(c, images, scheme, domains[static_cast<std::size_t>(k)], rep.vc_dim);
  }

  rep.pass = true;
  for (const auto& o : outcomes) {
    rep.samples_checked += o.samples;
    rep.max_size = std::max(rep.max_size, o.max_size);
    if (o.witness && rep.pass) {
      rep.pass = false;
      rep.witness = o.witness;
      rep.failure = o.failure;
    }
  }
  return rep;
}

}  // namespace amplekit
