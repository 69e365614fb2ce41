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

// Prediction strategies: the concept-with-don't-cares predictor built on
// one-inclusion graphs, and the threshold-aggregating real-valued predictor.

#ifndef SCALEDIM_PREDICT_H_
#define SCALEDIM_PREDICT_H_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "scaledim/function_class.h"
#include "scaledim/one_inclusion.h"
#include "scaledim/rational.h"

namespace scaledim {

struct TernaryLabel {
  PointIndex point = 0;
  Ternary label = Ternary::kStar;
};

// Predicts the query coordinate's bit for a one-inclusion graph whose
// coordinates are the listed points. Convenience wrapper over
// OneInclusionModel::Predict taking the prefix as (coordinate, bit) pairs.
int OigPredict(const OneInclusionModel& model,
               std::span<const std::pair<std::size_t, int>> prefix,
               std::size_t query);

// Concept-with-don't-cares prediction. Rows of g that are non-* on every
// non-* prefix point and on the query form the candidate set; when it is
// empty, or none of its rows agrees with the prefix, the prediction is 0
// (the target is then * at the query, so no mistake is possible).
// Otherwise the one-inclusion graph of the candidate patterns decides.
int CwdcPredict(const TernaryClass& g, std::span<const TernaryLabel> prefix,
                PointIndex query);

// Same rule on candidate patterns already restricted to the relevant
// coordinates. `known_mask`/`known_bits` describe the prefix labels and
// `conflict` marks a prefix that labels one point both 0 and 1.
int CwdcPredictPatterns(std::vector<Pattern> patterns, std::size_t width,
                        Pattern known_mask, Pattern known_bits, bool conflict,
                        std::size_t query);

struct AggregatorConfig {
  Rational gamma;
  Rational tau;

  void Validate() const;
  // tau, 2 tau, ..., floor(1/tau) tau.
  std::vector<Rational> Thresholds() const;
};

struct AggregateOutcome {
  Rational prediction;
  // One bit per threshold, in Thresholds() order.
  std::vector<int> bits;
};

// Runs the don't-care predictor at every threshold r on the psi-translated
// prefix and predicts tau times the number of thresholds voting 1.
AggregateOutcome AggregatePredict(const FunctionClass& f,
                                  const AggregatorConfig& cfg,
                                  std::span<const LabeledPoint> prefix,
                                  PointIndex query);
AggregateOutcome AggregatePredict(const ProductClass& f,
                                  const AggregatorConfig& cfg,
                                  std::span<const LabeledPoint> prefix,
                                  PointIndex query);

struct InequalityCheck {
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

// lhs = |y - tau * sum b|, rhs = 2 tau + gamma + tau * #{r : b_r differs
// from a non-* psi_r(y)}; holds iff lhs < rhs.
InequalityCheck CheckAggregationInequality(const Rational& y,
                                           const AggregatorConfig& cfg,
                                           std::span<const int> b);

struct TranscriptRow {
  std::size_t round = 0;
  PointIndex query = 0;
  Rational prediction;
  Rational truth;
  Rational abs_error;
  // Per threshold: the vote was wrong and the truth was not * there.
  std::vector<int> mistakes;
};

using PredictorTranscript = std::vector<TranscriptRow>;

// Plays the prediction game along `sample`: round t predicts the t-th point
// from the first t-1 labelled points.
PredictorTranscript RunTranscript(const FunctionClass& f,
                                  const AggregatorConfig& cfg,
                                  std::span<const LabeledPoint> sample);

// Superseded binary-search predictor: `depth` rounds of bisection on [0,1]
// steered by the don't-care predictor at each midpoint, predicting the final
// lower end. Its error analysis does not hold; it is kept only for
// comparison experiments and is never used by default.
Rational BinarySearchPredict(const FunctionClass& f, const Rational& gamma,
                             std::size_t depth,
                             std::span<const LabeledPoint> prefix,
                             PointIndex query);

}  // namespace scaledim

#endif  // SCALEDIM_PREDICT_H_
