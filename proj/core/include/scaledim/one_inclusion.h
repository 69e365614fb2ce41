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

#ifndef SCALEDIM_ONE_INCLUSION_H_
#define SCALEDIM_ONE_INCLUSION_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace scaledim {

// A binary pattern over at most 63 coordinates; bit c holds coordinate c.
using Pattern = std::uint64_t;

// One-inclusion graph of a set of binary patterns, with an orientation of
// minimum possible maximum out-degree.
//
// Vertices are the distinct patterns in increasing mask order; edges join
// patterns at Hamming distance one and are listed by (lower vertex,
// coordinate). The orientation starts with every edge pointing from its
// lower to its higher vertex and then reverses augmenting paths, so it
// depends only on the pattern set.
class OneInclusionModel {
 public:
  struct Edge {
    std::uint32_t lower;
    std::uint32_t upper;
    std::uint32_t coordinate;
    // Vertex the edge points to.
    std::uint32_t head;
  };

  OneInclusionModel() = default;
  static OneInclusionModel Build(std::span<const Pattern> patterns,
                                 std::size_t width);

  std::size_t width() const { return width_; }
  const std::vector<Pattern>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::uint32_t>& out_degrees() const { return out_degree_; }
  std::uint32_t max_out_degree() const;

  std::optional<std::uint32_t> Find(Pattern p) const;

  // Prediction for coordinate `query` given the bits of `known` coordinates
  // (`known_mask` selects them, `known_bits` holds their values). The query
  // coordinate must not be in known_mask. Raises kInconsistentPrefix when no
  // vertex matches, and kInvalidArgument when the matching vertices are not
  // a single vertex or a single edge in the query direction.
  int Predict(Pattern known_mask, Pattern known_bits, std::size_t query) const;

 private:
  void Orient();

  std::size_t width_ = 0;
  std::vector<Pattern> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> out_degree_;
  // Incident edge ids per vertex, ordered by coordinate.
  std::vector<std::vector<std::uint32_t>> incident_;
};

}  // namespace scaledim

#endif  // SCALEDIM_ONE_INCLUSION_H_
