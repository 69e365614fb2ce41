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

#include <gtest/gtest.h>

#include <cmath>

#include "scaledim/bounds.h"
#include "scaledim/error.h"
#include "scaledim/rng.h"
#include "test_util.h"

namespace scaledim {
namespace {

using testing::Q;

TEST(PredictionBoundTest, Values) {
  EXPECT_EQ(PredictionBoundCorrected(2, 10, Q("0.1")), Q("0.3"));
  EXPECT_EQ(PredictionBoundCorrected(0, 1, Q("0.1")), Q("0.1"));
  EXPECT_EQ(PredictionBoundCorrected(2, 10, Q("0.1"), Q("0.02")), Q("0.34"));
  EXPECT_EQ(PredictionBoundOriginal(2, 10, Q("0.1")), Q("0.5"));
  EXPECT_EQ(PredictionBoundOriginal(0, 5, Q("0.2")), Q("0.2"));
  EXPECT_THROW(PredictionBoundCorrected(1, 0, Q("0.1")), Error);
  for (std::int64_t d = 0; d < 6; ++d) {
    for (std::int64_t m = 1; m < 12; ++m) {
      EXPECT_GE(PredictionBoundOriginal(d, m, Q("1/7")),
                PredictionBoundCorrected(d, m, Q("1/7")));
    }
  }
}

TEST(MPredTest, Values) {
  const PredictionSampleSize a = MPred(3, Q("0.3"), Q("0.1"));
  EXPECT_EQ(a.printed, 60);
  EXPECT_EQ(a.corrected, 30);
  EXPECT_FALSE(a.degenerate);
  EXPECT_EQ(MPred(1, Q("2"), Q("1")).printed, 2);
  const PredictionSampleSize z = MPred(0, Q("0.3"), Q("0.1"));
  EXPECT_TRUE(z.degenerate);
  EXPECT_EQ(z.printed, 1);
}

TEST(PackBoundTest, FatVLogValue) {
  const LogNumber v = PackBoundFatV(Q("0.4"), Q("0.05"), 4, 2);
  EXPECT_NEAR(v.log(), std::log(4.0) + 160 * std::log(5.0), 1e-9);
  const LogNumber w = PackBoundFatV(Q("0.4"), Q("0.05"), 4, 3);
  EXPECT_NEAR(w.log() - v.log(), 80 * std::log(5.0), 1e-9);
  EXPECT_THROW(PackBoundFatV(Q("0.4"), Q("0.1"), 4, 2), Error);
}

TEST(PackBoundTest, FatExactValue) {
  const PackBoundFatResult r = PackBoundFat(Q("1"), 5, 1, 1);
  BigInt expect = 2;
  for (int i = 0; i < 9; ++i) expect *= 5;
  EXPECT_EQ(r.exact, expect);
  EXPECT_NEAR(r.exact_log.log(), std::log(2.0) + 9 * std::log(5.0), 1e-9);
  EXPECT_THROW(PackBoundFat(Q("1/2"), 8, 1, 1), Error);
  EXPECT_THROW(PackBoundFat(Q("1"), 5, 1, 2), Error);
}

TEST(PackBoundTest, ExactBelowLoose) {
  for (std::int64_t b : {5, 9, 20}) {
    for (std::int64_t m = 1; m <= 30; m += 3) {
      for (std::int64_t d = 1; d <= m; d += 2) {
        const PackBoundFatResult r = PackBoundFat(Q("1"), b, m, d);
        EXPECT_TRUE(r.exact_log <= r.loose) << b << " " << m << " " << d;
      }
    }
  }
}

TEST(SauerTest, Values) {
  EXPECT_EQ(SauerY(1, 1, 5), BigInt(7));
  EXPECT_EQ(SauerY(9, 0, 3), BigInt(1));
  EXPECT_EQ(SauerY(4, 2, 1), BigInt(33));
  // At d = m the sum is (2 + b)^m.
  BigInt p = 1;
  for (int i = 0; i < 40; ++i) p *= 8;
  EXPECT_EQ(SauerY(40, 40, 6), p);
}

TEST(HoeffdingTest, Values) {
  EXPECT_NEAR(HoeffdingTail(0.1, 100, 0, 1), 0.270671, 1e-6);
  EXPECT_NEAR(HoeffdingTail(0.1, 100, 0, 1), 2 * std::exp(-2.0), 1e-15);
  double prev = 3;
  for (std::int64_t m = 1; m < 2000; m *= 2) {
    const double v = HoeffdingTail(0.05, m, 0, 1);
    EXPECT_LT(v, prev);
    prev = v;
  }
}

TEST(HoeffdingTest, DominatesEmpiricalTail) {
  Rng rng(5);
  const int m = 50, trials = 100000;
  int exceed = 0;
  for (int t = 0; t < trials; ++t) {
    int ones = 0;
    for (int i = 0; i < m; ++i) ones += static_cast<int>(rng.Below(2));
    exceed += std::abs(ones / static_cast<double>(m) - 0.5) > 0.15;
  }
  EXPECT_LE(exceed / static_cast<double>(trials), HoeffdingTail(0.15, m, 0, 1));
}

TEST(InverseSampleSizeTest, GuaranteeHoldsAtAndBeyond) {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const double y1 = 0.1 + 100 * rng.Uniform01();
    const double y2 = 0.01 + 10 * rng.Uniform01();
    const double y3 = 1 + 50 * rng.Uniform01();
    const double y4 = 0.001 + rng.Uniform01();
    const double delta = 0.001 + 0.9 * rng.Uniform01();
    const std::int64_t m = InverseSampleSize(y1, y2, y3, y4, delta);
    for (std::int64_t k : {m, m + 1, 2 * m, 10 * m}) {
      EXPECT_LE(InverseSampleSizeLhs(y1, y2, y3, y4, k), delta);
    }
    EXPECT_LE(InverseSampleSize(y1, y2, y3, y4, std::min(1.0, 2 * delta)), m);
  }
  EXPECT_THROW(InverseSampleSize(1, 1, 0.5, 1, 0.1), Error);
}

// The fat-dimension size written out directly in long double.
long double LiteralGcFat(long double a, long double d, long double delta) {
  const long double e = std::exp(1.0L), ln2 = std::log(2.0L);
  const long double t = std::log(7.0L / a);
  const long double main = (4.0L / (a * a)) *
      ((6.0L * d / ln2) * t * std::log((336.0L * e / (a * ln2)) * t) +
       std::log(8.0L / delta));
  return std::max(std::ceil(main), std::floor(std::log(4.0L) / (2 * a * a)) + 1);
}

long double LiteralGcFatV(long double a, long double d, long double eps,
                          long double delta) {
  return std::ceil(8.0L * d / (a * a * a) * std::log(6.0L / a) +
                   std::log(8.0L * eps / (delta * a)) / (2 * a * a));
}

TEST(GcSampleTest, MatchesLiteralFormula) {
  const GcSampleSize fat = GcSampleFat(Q("1/2"), Q("1/2"), 1, Q("1/10"));
  EXPECT_EQ(fat.alpha, Q("1/20"));
  EXPECT_EQ(fat.m, static_cast<std::int64_t>(LiteralGcFat(0.05L, 1, 0.5L)));
  const GcSampleSize fatv = GcSampleFatV(Q("1/2"), Q("1/2"), 1, Q("1/10"));
  EXPECT_EQ(fatv.m,
            static_cast<std::int64_t>(LiteralGcFatV(0.05L, 1, 0.5L, 0.5L)));
  EXPECT_GT(fat.m, fat.side_condition);
}

TEST(GcSampleTest, Monotone) {
  for (std::int64_t d = 0; d < 5; ++d) {
    for (const char* delta : {"1/100", "1/10", "1/2"}) {
      const auto f = GcSampleFat(Q("1/2"), Q(delta), d, Q("1/10"));
      const auto g = GcSampleFatV(Q("1/2"), Q(delta), d, Q("1/10"));
      EXPECT_LE(f.m, GcSampleFat(Q("1/2"), Q(delta), d + 1, Q("1/10")).m);
      EXPECT_LE(g.m, GcSampleFatV(Q("1/2"), Q(delta), d + 1, Q("1/10")).m);
      EXPECT_GE(f.m, GcSampleFat(Q("1/2"), Q("3/4"), d, Q("1/10")).m);
      EXPECT_GE(g.m, GcSampleFatV(Q("1/2"), Q("3/4"), d, Q("1/10")).m);
    }
  }
  EXPECT_THROW(GcSampleFat(Q("1/2"), Q("1/2"), 1, Q("1/4")), Error);
}

TEST(CoverLearnerPlanTest, Consistency) {
  const CoverLearnerPlan p = PlanCoverLearner(Q("1/2"), Q("1/2"), Q("2/5"), 1);
  EXPECT_EQ(p.alpha, Q("1/5"));
  EXPECT_EQ(p.gamma, Q("1/65"));
  EXPECT_EQ(p.cover_radius, Q("1/2") - Q("9/65"));
  EXPECT_EQ(p.total, p.n1 * (2 * p.k - 1) + p.n2);
  const CoverLearnerPlan q = PlanCoverLearner(Q("1/2"), Q("1/2"), Q("2/5"), 1, 16);
  EXPECT_GE(q.k, p.k);
}

TEST(LogNumberTest, RoundTrip) {
  for (double v : {1e-300, 0.5, 1.0, 3.0, 1e300}) {
    EXPECT_NEAR(LogNumber::FromValue(v).value() / v, 1.0, 1e-12);
  }
  EXPECT_TRUE(LogNumber::Zero().is_zero());
  EXPECT_TRUE(LogNumber::Zero() <= LogNumber::FromValue(1e-300));
  BigInt big = 1;
  for (int i = 0; i < 500; ++i) big *= 10;
  EXPECT_NEAR(LogNumber::FromBig(big).log(), 500 * std::log(10.0), 1e-9);
}

}  // namespace
}  // namespace scaledim
