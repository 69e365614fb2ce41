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

// Closed-form sample-size, prediction-error and packing bounds, evaluated
// exactly where the formula is rational or integral and in the log domain
// where the value overflows every fixed-width type.

#ifndef SCALEDIM_BOUNDS_H_
#define SCALEDIM_BOUNDS_H_

#include <cstdint>
#include <optional>
#include <string>

#include "scaledim/rational.h"

namespace scaledim {

// A non-negative real stored as its natural logarithm.
class LogNumber {
 public:
  LogNumber() = default;
  static LogNumber Zero() { return LogNumber(); }
  static LogNumber FromLog(double log_value);
  static LogNumber FromValue(double value);
  static LogNumber FromBig(const BigInt& value);

  bool is_zero() const { return zero_; }
  // Natural log; -infinity for zero.
  double log() const;
  // exp(log()); +infinity when out of double range.
  double value() const;

  friend bool operator<=(const LogNumber& a, const LogNumber& b);

 private:
  double log_ = 0.0;
  bool zero_ = true;
};

// d/m + gamma, plus 2 tau when tau is given.
Rational PredictionBoundCorrected(std::int64_t d, std::int64_t m,
                                  const Rational& gamma,
                                  std::optional<Rational> tau = std::nullopt);
// 2d/m + gamma (superseded constant).
Rational PredictionBoundOriginal(std::int64_t d, std::int64_t m,
                                 const Rational& gamma);

struct PredictionSampleSize {
  std::int64_t printed = 0;    // ceil(2d / alpha)
  std::int64_t corrected = 0;  // ceil(d / alpha)
  // d = 0: both values are 1 and the statement's d >= 1 assumption fails.
  bool degenerate = false;
};

PredictionSampleSize MPred(std::int64_t d, const Rational& eps,
                           const Rational& alpha);

// ln of (eps / 2 alpha) (b + 1)^(4 d / alpha); needs 0 < alpha < eps / 4.
LogNumber PackBoundFatV(const Rational& eps, const Rational& alpha,
                        std::int64_t b, std::int64_t d);

struct PackBoundFatResult {
  BigInt exact;  // 2 b^(3 (floor(log2 y) + 1))
  LogNumber exact_log;
  LogNumber loose;  // 2 b^(6 d log2(2 b e m / d))
};

// Needs b > 4 / eps and m >= d >= 1.
PackBoundFatResult PackBoundFat(const Rational& eps, std::int64_t b,
                                std::int64_t m, std::int64_t d);

// sum_{i=0}^{d} C(m, i) (1 + b)^i.
BigInt SauerY(std::int64_t m, std::int64_t d, std::int64_t b);

// 2 exp(-2 eps^2 m / (b - a)^2).
double HoeffdingTail(double eps, std::int64_t m, double a, double b);

// Smallest m* of the closed form guaranteeing
// y1 exp(y2 ln(y3 m) - y4 m) <= delta for all m >= m*.
std::int64_t InverseSampleSize(double y1, double y2, double y3, double y4,
                               double delta);
// Left side of the guarantee at m.
double InverseSampleSizeLhs(double y1, double y2, double y3, double y4,
                            std::int64_t m);

struct GcSampleSize {
  Rational alpha;  // 1 / ceil(1 / (kappa eps))
  std::int64_t m = 0;
  // fat form only: smallest integer above ln(4) / (2 alpha^2).
  std::int64_t side_condition = 0;
};

// Uniform convergence sample sizes with explicit constants; d is the fat
// (resp. fatV) dimension at scale (1/4 - kappa) eps.
GcSampleSize GcSampleFat(const Rational& eps, const Rational& delta,
                         std::int64_t d, const Rational& kappa);
GcSampleSize GcSampleFatV(const Rational& eps, const Rational& delta,
                          std::int64_t d, const Rational& kappa);

// Sizes for the cover-based agnostic learner. c multiplies the block size
// and has no canonical value; 8 is the default used throughout.
struct CoverLearnerPlan {
  Rational alpha;  // 1 / ceil(1 / (eps kappa))
  Rational gamma;  // alpha / 13
  std::int64_t k = 0;
  std::int64_t n1 = 0;
  std::int64_t n2 = 0;
  std::int64_t total = 0;  // n1 (2k - 1) + n2
  // Cover radius eps - 9 gamma.
  Rational cover_radius;
};

inline constexpr double kDefaultCoverConstant = 8.0;

// d is fat at scale eps - 13 gamma.
CoverLearnerPlan PlanCoverLearner(const Rational& eps, const Rational& delta,
                                  const Rational& kappa, std::int64_t d,
                                  double c = kDefaultCoverConstant);

}  // namespace scaledim

#endif  // SCALEDIM_BOUNDS_H_
