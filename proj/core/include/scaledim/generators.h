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

// Constructors for the named example classes. Infinite-domain families are
// truncated to the points {1, ..., n}, stored as columns 0, ..., n-1.
// Families too large to enumerate also have implicit ProductClass forms.

#ifndef SCALEDIM_GENERATORS_H_
#define SCALEDIM_GENERATORS_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "scaledim/function_class.h"
#include "scaledim/rational.h"

namespace scaledim {

// All 2^d functions to {0, 1}.
FunctionClass GenBinaryCube(std::size_t d);

// All functions to {0, 2 (gamma - kappa)}; needs 0 < kappa < gamma <= 1/2.
FunctionClass GenTwoValue(std::size_t n, const Rational& gamma,
                          const Rational& kappa);
ProductClass TwoValueProduct(std::size_t n, const Rational& gamma,
                             const Rational& kappa);

// One step of a non-increasing dimension profile: the profile equals `d` on
// an interval whose supremum is `sup`, attained or not.
struct ProfileStep {
  std::size_t d = 0;
  Rational sup;
  bool attained = true;
};

// Parses "3@1/5,1@2/5" (attained suprema) with an optional ")" suffix per
// step for a supremum that is not attained, e.g. "2@1/4)".
std::vector<ProfileStep> ParseProfile(const std::string& text);

// Class whose fatV profile follows `steps` (profile 0 outside them). Each
// step with dimension d gets its own block of d points carrying values
// 1/2 +- sup; a step whose supremum is not attained instead gets `levels`
// blocks with values 1/2 +- sup (1 - 1/n), n = 1..levels, approximating the
// open end. Every function is 1/2 outside its block. An empty profile gives
// the single zero function. Suprema must increase as dimensions decrease.
FunctionClass GenProfile(const std::vector<ProfileStep>& steps,
                         std::size_t levels = 4);

// Value pair 1/2 +- (eps/2 + 1/(i+3)) at point i = 1..n; needs 0 < eps < 1/2.
FunctionClass GenGcCounterexample(const Rational& eps, std::size_t n);
ProductClass GcCounterexampleProduct(const Rational& eps, std::size_t n);
// The function taking the lower value on the sampled points and the upper
// value elsewhere, as per-point values.
std::vector<Rational> GcAdversarialFunction(const Rational& eps, std::size_t n,
                                            const std::vector<PointIndex>& sample);

enum class BandLevels { kTwo, kThree };

// All functions to {1/2 - eps/2, 1/2 + eps/2} (two levels) or
// {1/2 - eps, 1/2, 1/2 + eps} (three levels).
FunctionClass GenBandClass(const Rational& eps, std::size_t n,
                           BandLevels levels);
ProductClass BandProduct(const Rational& eps, std::size_t n, BandLevels levels);

// n_funcs rows with i.i.d. uniform entries on {0, 1/b, ..., 1}.
FunctionClass GenRandom(std::size_t n_points, std::size_t n_funcs,
                        std::int64_t b, std::uint64_t seed);

struct GeneratorSpec {
  std::string name;
  std::map<std::string, std::string> params;
  std::uint64_t seed = 0;
};

// Parses "k=v,k=v"; values are kept as text.
std::map<std::string, std::string> ParseParams(const std::string& text);

// Dispatches on spec.name: binary_cube(d), two_value(n, gamma, kappa),
// profile(phi, levels), gc_counterexample(eps, n), band(eps, n, levels),
// random(points, funcs, b).
FunctionClass Generate(const GeneratorSpec& spec);

}  // namespace scaledim

#endif  // SCALEDIM_GENERATORS_H_
