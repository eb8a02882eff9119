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

#include "amplekit/matching.hpp"

#include <limits>
#include <queue>

#include "amplekit/core.hpp"

namespace amplekit {

namespace {
constexpr int kInf = std::numeric_limits<int>::max();
}

BipartiteMatching::BipartiteMatching(std::size_t left, std::size_t right)
    : adj_(left), match_left_(left, kFree), match_right_(right, kFree), level_(left, kInf) {}

void BipartiteMatching::add_edge(std::size_t u, std::size_t v) {
  if (u >= adj_.size() || v >= match_right_.size())
    throw ContractError("bipartite edge endpoint out of range");
  adj_[u].push_back(static_cast<int>(v));
}

bool BipartiteMatching::bfs() {
  std::queue<std::size_t> q;
  bool reachable_free = false;
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    if (match_left_[u] == kFree) {
      level_[u] = 0;
      q.push(u);
    } else {
      level_[u] = kInf;
    }
  }
  while (!q.empty()) {
    std::size_t u = q.front();
    q.pop();
    for (int v : adj_[u]) {
      int w = match_right_[static_cast<std::size_t>(v)];
      if (w == kFree) {
        reachable_free = true;
      } else if (level_[static_cast<std::size_t>(w)] == kInf) {
        level_[static_cast<std::size_t>(w)] = level_[u] + 1;
        q.push(static_cast<std::size_t>(w));
      }
    }
  }
  return reachable_free;
}

bool BipartiteMatching::dfs(std::size_t u) {
  for (int v : adj_[u]) {
    int w = match_right_[static_cast<std::size_t>(v)];
    if (w == kFree || (level_[static_cast<std::size_t>(w)] == level_[u] + 1 &&
                       dfs(static_cast<std::size_t>(w)))) {
      match_left_[u] = v;
      match_right_[static_cast<std::size_t>(v)] = static_cast<int>(u);
      return true;
    }
  }
  level_[u] = kInf;
  return false;
}

std::size_t BipartiteMatching::solve() {
  while (bfs())
    for (std::size_t u = 0; u < adj_.size(); ++u)
      if (match_left_[u] == kFree && dfs(u)) ++size_;
  return size_;
}

bool BipartiteMatching::perfect() const {
  return adj_.size() == match_right_.size() && size_ == adj_.size();
}

bool BipartiteMatching::unique() const {
  if (!perfect()) throw ContractError("uniqueness is defined for perfect matchings only");
  // Left u -> left w when u is adjacent to w's mate through a non-matching
  // edge; a directed cycle is an alternating cycle.
  const std::size_t n = adj_.size();
  std::vector<int> indegree(n, 0);
  std::vector<std::vector<int>> next(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (int v : adj_[u]) {
      if (v == match_left_[u]) continue;
      int w = match_right_[static_cast<std::size_t>(v)];
      next[u].push_back(w);
      ++indegree[static_cast<std::size_t>(w)];
    }
  }
  std::vector<std::size_t> ready;
  for (std::size_t u = 0; u < n; ++u)
    if (indegree[u] == 0) ready.push_back(u);
  std::size_t removed = 0;
  while (!ready.empty()) {
    std::size_t u = ready.back();
    ready.pop_back();
    ++removed;
    for (int w : next[u])
      if (--indegree[static_cast<std::size_t>(w)] == 0) ready.push_back(static_cast<std::size_t>(w));
  }
  return removed == n;
}

std::vector<std::size_t> BipartiteMatching::left_degrees() const {
  std::vector<std::size_t> out;
  out.reserve(adj_.size());
  for (const auto& row : adj_) out.push_back(row.size());
  return out;
}

std::vector<std::size_t> BipartiteMatching::right_degrees() const {
  std::vector<std::size_t> out(match_right_.size(), 0);
  for (const auto& row : adj_)
    for (int v : row) ++out[static_cast<std::size_t>(v)];
  return out;
}

}  // namespace amplekit
