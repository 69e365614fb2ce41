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

// Packing and proper covering numbers of finite row sets under the
// normalized l1 distance, decided exactly on the shared value grid.
//
// Packings require pairwise distance strictly greater than epsilon; covers
// require every row within distance at most epsilon of a center. Centers are
// always rows of the set itself. An optional column weight vector turns the
// metric into sum_c w_c |a_c - b_c| / sum_c w_c, which is the normalized l1
// distance on a sequence in which column c is repeated w_c times.

#ifndef SCALEDIM_PACKING_H_
#define SCALEDIM_PACKING_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "scaledim/function_class.h"
#include "scaledim/rational.h"

namespace scaledim {

enum class PackingMethod { kExact, kGreedyLower, kProperCoverUpper };

const char* PackingMethodName(PackingMethod method);

struct PackingResult {
  Rational epsilon;
  std::size_t size = 0;
  // Row indices into the input matrix, ascending for exact results.
  std::vector<std::size_t> witness;
  PackingMethod method = PackingMethod::kExact;
};

// Distances between rows of one matrix with optional column weights.
class RowMetric {
 public:
  explicit RowMetric(const ValueMatrix& m, std::span<const std::int64_t> weights = {});

  const ValueMatrix& matrix() const { return *m_; }
  // Weighted sum of |a_c - b_c| in grid units.
  std::int64_t Units(std::size_t a, std::size_t b) const;
  bool Within(std::size_t a, std::size_t b, const Rational& eps) const;
  bool Separated(std::size_t a, std::size_t b, const Rational& eps) const;
  Rational Distance(std::size_t a, std::size_t b) const;

 private:
  const ValueMatrix* m_;
  std::vector<std::int64_t> weights_;
  // Sum of weights times the grid denominator.
  std::int64_t scale_;
};

// Largest subset with all pairwise distances > eps (branch and bound maximum
// clique). Among maximum subsets the lexicographically smallest is returned.
PackingResult PackingExact(const ValueMatrix& s, const Rational& eps,
                           std::span<const std::int64_t> weights = {});

// Maximal packing built greedily in `order` (identity when empty). The
// result is also a proper eps-cover of s.
PackingResult PackingGreedy(const ValueMatrix& s, const Rational& eps,
                            std::span<const std::size_t> order = {},
                            std::span<const std::int64_t> weights = {});

// Smallest subset T of s with every row within eps of some member of T.
PackingResult CoverProperExact(const ValueMatrix& s, const Rational& eps,
                               std::span<const std::int64_t> weights = {});

bool VerifyPacking(const ValueMatrix& s, const Rational& eps,
                   std::span<const std::size_t> witness,
                   std::span<const std::int64_t> weights = {});
bool VerifyCover(const ValueMatrix& s, const Rational& eps,
                 std::span<const std::size_t> centers,
                 std::span<const std::int64_t> weights = {});

struct SandwichReport {
  std::size_t packing_double = 0;  // M(2 eps)
  std::size_t cover = 0;           // proper N(eps)
  std::size_t packing = 0;         // M(eps)
  bool holds = false;
};

// M(2 eps) <= N_proper(eps) <= M(eps), all computed exactly.
SandwichReport SandwichCheck(const ValueMatrix& s, const Rational& eps);

// Takes a minimum proper (eps - alpha)-cover of the alpha-quantized rows and
// checks directly that it covers the original rows at radius eps.
// Requires 0 < alpha < eps / 2.
bool QuantizationCoverCheck(const ValueMatrix& s, const Rational& eps,
                            const Rational& alpha);

// Builds the absolute-loss rows of f on the labelled sample z, takes a
// minimum proper eps-cover T of f restricted to the sample points, and
// checks that the loss rows of T cover the loss class at radius eps.
bool LossClassCoverCheck(const FunctionClass& f,
                         std::span<const LabeledPoint> z, const Rational& eps);

}  // namespace scaledim

#endif  // SCALEDIM_PACKING_H_
