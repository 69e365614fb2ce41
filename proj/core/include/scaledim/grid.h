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

#ifndef SCALEDIM_GRID_H_
#define SCALEDIM_GRID_H_

#include <cstdint>

#include "scaledim/function_class.h"
#include "scaledim/rational.h"

namespace scaledim {

// psi_{r,gamma} precomputed for values n/den on a fixed grid: a value is 1
// when n >= one_from and 0 when n <= zero_upto.
class GridThresholds {
 public:
  GridThresholds(std::int64_t den, const Rational& r, const Rational& gamma);

  Ternary Classify(std::int64_t n) const {
    if (n >= one_from_) return Ternary::kOne;
    if (n <= zero_upto_) return Ternary::kZero;
    return Ternary::kStar;
  }
  std::int64_t one_from() const { return one_from_; }
  std::int64_t zero_upto() const { return zero_upto_; }

 private:
  std::int64_t one_from_;
  std::int64_t zero_upto_;
};

// ceil(q * den) and floor(q * den) without forming q * den as a Rational.
std::int64_t CeilTimes(const Rational& q, std::int64_t den);
std::int64_t FloorTimes(const Rational& q, std::int64_t den);

}  // namespace scaledim

#endif  // SCALEDIM_GRID_H_
