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

// Exact fat-shattering style dimensions of finite classes, with witnesses.
//
// All four searches are exponential in the number of domain points and are
// refused above guard::kDimsMaxPoints points or guard::kDimsMaxRows rows.
// Among all shattered sets of maximum size the witness is the one whose
// sorted point list is lexicographically smallest; thresholds are the
// smallest admissible ones in candidate order.

#ifndef SCALEDIM_DIMS_H_
#define SCALEDIM_DIMS_H_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "scaledim/function_class.h"
#include "scaledim/rational.h"

namespace scaledim {

enum class DimensionKind { kVcdimStar, kFatV, kFat, kSfat };

const char* DimensionKindName(DimensionKind kind);
DimensionKind ParseDimensionKind(const std::string& name);

struct DimensionWitness {
  DimensionKind kind = DimensionKind::kVcdimStar;
  std::vector<PointIndex> points;
  // kFatV: one shared threshold. kFat: one threshold per point.
  std::vector<Rational> thresholds;
  // kSfat: (lower, upper) value pair per point.
  std::vector<std::pair<Rational, Rational>> levels;

  std::size_t size() const { return points.size(); }
};

struct DimensionResult {
  std::size_t size = 0;
  DimensionWitness witness;
};

// Largest point set on which every 0/1 pattern is realized by some row that
// is non-* on the whole set.
DimensionResult VcdimStar(const TernaryClass& g);

DimensionResult FatV(const FunctionClass& f, const Rational& gamma);
DimensionResult Fat(const FunctionClass& f, const Rational& gamma);
DimensionResult Sfat(const FunctionClass& f, const Rational& gamma);

// kVcdimStar is evaluated on PsiClass(f, r, gamma); the other kinds ignore r.
DimensionResult ComputeDimension(DimensionKind kind, const FunctionClass& f,
                                 const Rational& gamma,
                                 const Rational& r = Rational(1, 2));

// Replays the shattering condition on a witness directly from definitions.
bool VerifyWitness(const TernaryClass& g, const DimensionWitness& w);
bool VerifyWitness(const FunctionClass& f, const Rational& gamma,
                   const DimensionWitness& w);

// VC dimension of a set of binary patterns over `width` coordinates, each
// pattern stored as a bit mask (bit c = coordinate c).
std::size_t VcDimension(const std::vector<std::uint64_t>& patterns,
                        std::size_t width);

}  // namespace scaledim

#endif  // SCALEDIM_DIMS_H_
