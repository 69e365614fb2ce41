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

#include "scaledim/grid.h"

namespace scaledim {
namespace {

__int128 FloorDiv(__int128 a, __int128 b) {
  __int128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t Clamp(__int128 v) {
  constexpr __int128 kLo = -(static_cast<__int128>(1) << 62);
  constexpr __int128 kHi = static_cast<__int128>(1) << 62;
  if (v < kLo) return static_cast<std::int64_t>(kLo);
  if (v > kHi) return static_cast<std::int64_t>(kHi);
  return static_cast<std::int64_t>(v);
}

}  // namespace

std::int64_t FloorTimes(const Rational& q, std::int64_t den) {
  return Clamp(FloorDiv(static_cast<__int128>(q.num()) * den, q.den()));
}

std::int64_t CeilTimes(const Rational& q, std::int64_t den) {
  return Clamp(-FloorDiv(-static_cast<__int128>(q.num()) * den, q.den()));
}

GridThresholds::GridThresholds(std::int64_t den, const Rational& r,
                               const Rational& gamma)
    : one_from_(CeilTimes(r + gamma, den)),
      zero_upto_(FloorTimes(r - gamma, den)) {}

}  // namespace scaledim
