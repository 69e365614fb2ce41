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

// Prediction games, uniform-convergence deviations and the agnostic
// learners, evaluated exactly by enumeration or estimated by seeded Monte
// Carlo. Trial t of stream s under root seed r always uses
// Rng::ForTrial(r, s, t), so results do not depend on evaluation order.

#ifndef SCALEDIM_SIMULATE_H_
#define SCALEDIM_SIMULATE_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "scaledim/bounds.h"
#include "scaledim/function_class.h"
#include "scaledim/predict.h"
#include "scaledim/rational.h"

namespace scaledim {

class Rng;

// Maps (labelled prefix, query point) to a prediction in [0,1].
using Predictor =
    std::function<Rational(std::span<const LabeledPoint>, PointIndex)>;

Predictor AggregatorPredictor(const FunctionClass& f,
                              const AggregatorConfig& cfg);
Predictor AggregatorPredictor(const ProductClass& f,
                              const AggregatorConfig& cfg);
Predictor BinarySearchPredictor(const FunctionClass& f, const Rational& gamma,
                                std::size_t depth);

struct TargetError {
  std::size_t target = 0;
  bool exact = false;
  BigRational exact_error;  // valid when exact
  double estimate = 0.0;
  double std_error = 0.0;
};

struct GameResult {
  std::vector<TargetError> per_target;
  std::size_t worst = 0;  // index into per_target
  bool exhaustive = false;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;

  const TargetError& worst_target() const { return per_target[worst]; }
};

// Expected last-round error for every target row, summed exactly over all
// of domain^m weighted by D^m. Guarded by guard::kExhaustiveMaxSequences.
GameResult GameExhaustive(const FunctionClass& f, const DiscreteDistribution& d,
                          std::size_t m, const Predictor& predictor);

// Monte Carlo estimate with standard error, `trials` games per target.
GameResult GameMc(const FunctionClass& f, const DiscreteDistribution& d,
                  std::size_t m, const Predictor& predictor,
                  std::uint64_t trials, std::uint64_t seed);

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t trials = 0;
};

// Monte Carlo error with a fresh uniformly random target per trial.
Estimate GameMcRandomTarget(const ProductClass& f,
                            const DiscreteDistribution& d, std::size_t m,
                            const Predictor& predictor, std::uint64_t trials,
                            std::uint64_t seed);

// Fraction of the m! orderings of `x` on which the don't-care predictor,
// given the first m-1 points labelled by row `target` of g, errs on the
// last point while the target is not * there. m! is guarded.
Rational CwdcPermutationExhaustive(const TernaryClass& g,
                                   std::span<const PointIndex> x,
                                   std::size_t target);

// |mean of f over the sample - E_D f| for one function given per point.
BigRational Deviation(std::span<const Rational> f,
                      const DiscreteDistribution& d,
                      std::span<const PointIndex> sample);
// Supremum of Deviation over the class.
BigRational SupDeviation(const FunctionClass& f, const DiscreteDistribution& d,
                         std::span<const PointIndex> sample);
BigRational SupDeviation(const ProductClass& f, const DiscreteDistribution& d,
                         std::span<const PointIndex> sample);

struct GcDeviationResult {
  bool exhaustive = false;
  std::vector<Rational> eps;
  // P(sup deviation > eps) per queried eps.
  std::vector<BigRational> exceed_exact;
  std::vector<double> exceed_estimate;
  std::vector<double> exceed_std_error;
  BigRational max_deviation;
  double mean_deviation = 0.0;
  std::uint64_t samples = 0;
};

// Exact distribution of the supremum deviation over all samples of size m,
// enumerated as multisets with multinomial weights.
GcDeviationResult GcDeviationExhaustive(const FunctionClass& f,
                                        const DiscreteDistribution& d,
                                        std::size_t m,
                                        std::span<const Rational> eps);
GcDeviationResult GcDeviationMc(const FunctionClass& f,
                                const DiscreteDistribution& d, std::size_t m,
                                std::span<const Rational> eps,
                                std::uint64_t trials, std::uint64_t seed);

// Finite joint distribution on (point, label) pairs.
class JointSample {
 public:
  JointSample() = default;
  JointSample(std::vector<LabeledPoint> support, std::vector<Rational> weights);

  const std::vector<LabeledPoint>& support() const { return support_; }
  const std::vector<Rational>& weights() const { return dist_.weights(); }
  std::size_t size() const { return support_.size(); }

  LabeledPoint Sample(Rng& rng) const;
  // Counts of each support element among n independent draws.
  std::vector<std::int64_t> SampleCounts(std::int64_t n, Rng& rng) const;

 private:
  std::vector<LabeledPoint> support_;
  DiscreteDistribution dist_;
};

// Multinomial(n, probs) by sequential binomial draws.
std::vector<std::int64_t> MultinomialCounts(std::int64_t n,
                                            std::span<const Rational> probs,
                                            Rng& rng);

// Expected absolute error of hypothesis h (one value per domain point).
BigRational EvalError(std::span<const Rational> h, const JointSample& p);

struct InfErrorResult {
  BigRational value;
  std::size_t argmin = 0;
};
InfErrorResult InfError(const FunctionClass& f, const JointSample& p);

// Sample summarized as counts: `labelled[i]` copies of support element i of
// `p` (the first half of a block) plus `unlabelled[x]` extra copies of point
// x. The learners are permutation invariant, so counts carry all the
// information they use.
struct CountedBlock {
  std::vector<std::int64_t> labelled;
  std::vector<std::int64_t> unlabelled;
};

// The cover-based prediction on 2k points: a minimum proper cover of the
// class restricted to all points (in canonical order) at `radius`, the
// member with least absolute error on the labelled half, evaluated at
// `query`.
Rational CoverLearnerQ(const FunctionClass& f,
                       std::span<const LabeledPoint> sample,
                       const Rational& radius);
// Same with the radius eps - 9 gamma.
Rational CoverLearnerQ(const FunctionClass& f,
                       std::span<const LabeledPoint> sample,
                       const Rational& eps, const Rational& gamma);

// Hypothesis of one block: the prediction with each domain point appended
// as the final query.
std::vector<Rational> CoverLearnerHypothesis(const FunctionClass& f,
                                             const JointSample& p,
                                             const CountedBlock& block,
                                             const Rational& radius);

struct AgnosticOutput {
  std::vector<Rational> hypothesis;
  std::size_t chosen = 0;
  std::vector<std::vector<Rational>> candidates;
};

// Learner on an explicit sample of at least plan.total examples: plan.n1
// blocks of 2k-1 examples give candidate hypotheses and the next plan.n2
// examples pick the one with least empirical error.
AgnosticOutput AgnosticLearn(const FunctionClass& f,
                             std::span<const LabeledPoint> sample,
                             const CoverLearnerPlan& plan);
// Same learner on a sample drawn from p, generated as per-block counts.
AgnosticOutput AgnosticLearnSampled(const FunctionClass& f,
                                    const JointSample& p,
                                    const CoverLearnerPlan& plan, Rng& rng);

// Row of f with least empirical absolute error (first on ties). The
// minimization is exact, so any slack beta > 0 is met.
std::size_t ErmLearner(const FunctionClass& f,
                       std::span<const LabeledPoint> sample,
                       const Rational& beta);
std::size_t ErmLearnerCounts(const FunctionClass& f, const JointSample& p,
                             std::span<const std::int64_t> counts);

}  // namespace scaledim

#endif  // SCALEDIM_SIMULATE_H_
