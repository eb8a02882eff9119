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
#include <utility>
#include <vector>

namespace amplekit {

/// Maximum matching in a bipartite graph (Hopcroft–Karp), plus the
/// uniqueness test used for perfect matchings.
class BipartiteMatching {
 public:
  static constexpr int kFree = -1;

  BipartiteMatching(std::size_t left, std::size_t right);

  void add_edge(std::size_t u, std::size_t v);
  // Runs Hopcroft–Karp; returns the matching size.
  std::size_t solve();

  std::size_t left_size() const { return adj_.size(); }
  std::size_t right_size() const { return match_right_.size(); }
  int mate_of_left(std::size_t u) const { return match_left_[u]; }
  int mate_of_right(std::size_t v) const { return match_right_[v]; }
  bool perfect() const;

  // Requires a perfect matching. True when no alternating cycle exists.
  bool unique() const;

  std::vector<std::size_t> left_degrees() const;
  std::vector<std::size_t> right_degrees() const;
  const std::vector<int>& neighbors(std::size_t u) const { return adj_[u]; }

 private:
  bool bfs();
  bool dfs(std::size_t u);

  std::vector<std::vector<int>> adj_;
  std::vector<int> match_left_;
  std::vector<int> match_right_;
  std::vector<int> level_;
  std::size_t size_ = 0;
};

}  // namespace amplekit
