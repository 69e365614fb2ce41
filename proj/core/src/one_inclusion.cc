// Copyright 2026 The scaledim Authors.
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

#include "scaledim/one_inclusion.h"

#include <algorithm>
#include <deque>
#include <limits>

#include "scaledim/error.h"

namespace scaledim {

OneInclusionModel OneInclusionModel::Build(std::span<const Pattern> patterns,
                                           std::size_t width) {
  Require(!patterns.empty(), "one-inclusion graph needs at least one pattern");
  Require(width <= 63, "pattern width must be at most 63");
  const Pattern all = width == 0 ? 0 : (~Pattern{0} >> (64 - width));
  OneInclusionModel m;
  m.width_ = width;
  for (Pattern p : patterns) {
    Require((p & ~all) == 0, "pattern has bits outside its width");
  }
  m.vertices_.assign(patterns.begin(), patterns.end());
  std::sort(m.vertices_.begin(), m.vertices_.end());
  m.vertices_.erase(std::unique(m.vertices_.begin(), m.vertices_.end()),
                    m.vertices_.end());
  const std::size_t n = m.vertices_.size();
  m.incident_.assign(n, {});
  m.out_degree_.assign(n, 0);
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t c = 0; c < width; ++c) {
      const Pattern q = m.vertices_[u] ^ (Pattern{1} << c);
      if (q < m.vertices_[u]) continue;
      auto v = m.Find(q);
      if (!v) continue;
      const auto id = static_cast<std::uint32_t>(m.edges_.size());
      m.edges_.push_back({u, *v, c, *v});
      m.incident_[u].push_back(id);
      m.incident_[*v].push_back(id);
      ++m.out_degree_[u];
    }
  }
  for (auto& inc : m.incident_) {
    std::sort(inc.begin(), inc.end(), [&](std::uint32_t a, std::uint32_t b) {
      return m.edges_[a].coordinate < m.edges_[b].coordinate;
    });
  }
  m.Orient();
  return m;
}

std::optional<std::uint32_t> OneInclusionModel::Find(Pattern p) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), p);
  if (it == vertices_.end() || *it != p) return std::nullopt;
  return static_cast<std::uint32_t>(it - vertices_.begin());
}

std::uint32_t OneInclusionModel::max_out_degree() const {
  std::uint32_t best = 0;
  for (std::uint32_t d : out_degree_) best = std::max(best, d);
  return best;
}

// For a target k, repeatedly take the first vertex with out-degree above k,
// search breadth-first along out-edges for a vertex with out-degree below k
// and reverse the path found. When no such vertex is reachable, the
// reachable set spans more than k times its size in edges, so no
// orientation achieves k and the target is raised.
void OneInclusionModel::Orient() {
  const std::size_t n = vertices_.size();
  if (edges_.empty()) return;
  std::uint32_t k = static_cast<std::uint32_t>((edges_.size() + n - 1) / n);
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> via(n);
  while (true) {
    std::uint32_t start = kNone;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (out_degree_[v] > k) {
        start = v;
        break;
      }
    }
    if (start == kNone) return;
    std::fill(via.begin(), via.end(), kNone);
    std::deque<std::uint32_t> queue = {start};
    via[start] = static_cast<std::uint32_t>(edges_.size());
    std::uint32_t target = kNone;
    while (!queue.empty() && target == kNone) {
      const std::uint32_t v = queue.front();
      queue.pop_front();
      for (std::uint32_t e : incident_[v]) {
        const Edge& edge = edges_[e];
        if (edge.head == v) continue;
        const std::uint32_t w = edge.head;
        if (via[w] != kNone) continue;
        via[w] = e;
        if (out_degree_[w] < k) {
          target = w;
          break;
        }
        queue.push_back(w);
      }
    }
    if (target == kNone) {
      ++k;
      continue;
    }
    for (std::uint32_t w = target; w != start;) {
      Edge& edge = edges_[via[w]];
      const std::uint32_t tail = edge.lower == w ? edge.upper : edge.lower;
      edge.head = tail;
      --out_degree_[tail];
      ++out_degree_[w];
      w = tail;
    }
  }
}

int OneInclusionModel::Predict(Pattern known_mask, Pattern known_bits,
                               std::size_t query) const {
  Require(query < width_, "query coordinate out of range");
  const Pattern qbit = Pattern{1} << query;
  Require((known_mask & qbit) == 0, "query coordinate is already labelled");
  std::vector<std::uint32_t> match;
  for (std::uint32_t v = 0; v < vertices_.size(); ++v) {
    if ((vertices_[v] & known_mask) == (known_bits & known_mask)) {
      match.push_back(v);
    }
  }
  if (match.empty()) {
    Fail(ErrorCode::kInconsistentPrefix,
         "prefix labels are not realized by any pattern");
  }
  const Pattern first = vertices_[match.front()] & qbit;
  bool agree = true;
  for (std::uint32_t v : match) agree &= (vertices_[v] & qbit) == first;
  if (agree) return first != 0 ? 1 : 0;
  if (match.size() != 2 || (vertices_[match[0]] ^ vertices_[match[1]]) != qbit) {
    Fail(ErrorCode::kInvalidArgument,
         "prefix leaves more than one free coordinate besides the query");
  }
  for (std::uint32_t e : incident_[match[0]]) {
    const Edge& edge = edges_[e];
    if (edge.coordinate == query) {
      return (vertices_[edge.head] & qbit) != 0 ? 1 : 0;
    }
  }
  Fail(ErrorCode::kInvalidArgument, "missing query edge");
}

}  // namespace scaledim
