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

// Slow, literal reference computations used to cross-check the search
// implementations. Each one enumerates its definition directly and shares
// no search code with the library. Intended for tiny inputs only.

#ifndef SCALEDIM_ORACLES_H_
#define SCALEDIM_ORACLES_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "scaledim/function_class.h"
#include "scaledim/rational.h"

namespace scaledim::oracle {

// Largest subset of points on which every 0/1 pattern appears exactly.
std::size_t VcdimStar(const TernaryClass& g);

// Thresholds scanned on the grid 1/(2L), L = lcm(class grid, gamma grid).
std::size_t FatV(const FunctionClass& f, const Rational& gamma);
std::size_t Fat(const FunctionClass& f, const Rational& gamma);
// Level pairs drawn from the values attained at each point.
std::size_t Sfat(const FunctionClass& f, const Rational& gamma);

// Plain VC dimension of 0/1 patterns packed in the low `width` bits.
std::size_t VcDimension(std::span<const std::uint64_t> patterns,
                        std::size_t width);

// Largest pairwise > eps separated row subset, by exhaustive extension.
std::size_t PackingNumber(const ValueMatrix& s, const Rational& eps);
// Smallest set of rows within eps of every row, by subsets in size order.
std::size_t ProperCoverNumber(const ValueMatrix& s, const Rational& eps);

// Minimum over all orientations of the Hamming-distance-1 graph on the
// distinct patterns of the largest out-degree. Exponential in the edges.
std::size_t OptimalMaxOutDegree(std::span<const std::uint64_t> patterns,
                                std::size_t width);

// Both sides of the aggregation inequality from the definitions.
struct InequalitySides {
  BigRational lhs;
  BigRational rhs;
};
InequalitySides AggregationInequality(const Rational& y, const Rational& tau,
                                      const Rational& gamma,
                                      std::span<const int> b);

// Rows gathered entry by entry.
std::vector<std::vector<Rational>> Restrict(const FunctionClass& f,
                                            std::span<const PointIndex> xi);

}  // namespace scaledim::oracle

#endif  // SCALEDIM_ORACLES_H_
