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
#include <numeric>

#include "scaledim/bounds.h"
#include "scaledim/dims.h"
#include "scaledim/error.h"
#include "scaledim/generators.h"
#include "scaledim/parallel.h"
#include "scaledim/rng.h"
#include "scaledim/simulate.h"
#include "test_util.h"

namespace scaledim {
namespace {

using testing::Cls;
using testing::Q;
using testing::Tern;

const AggregatorConfig kCfg{Q("1/10"), Q("1/20")};

TEST(GameTest, ConstantZeroClassHasNoError) {
  const FunctionClass f = Cls(4, {{0, 0, 0}});
  const auto d = DiscreteDistribution::Uniform(3);
  const GameResult r = GameExhaustive(f, d, 3, AggregatorPredictor(f, kCfg));
  EXPECT_EQ(r.worst_target().exact_error, BigRational(0));
  const GameResult mc = GameMc(f, d, 3, AggregatorPredictor(f, kCfg), 200, 1);
  EXPECT_EQ(mc.worst_target().estimate, 0.0);
  EXPECT_EQ(mc.worst_target().std_error, 0.0);
}

TEST(GameTest, ConstantClassErrorIsDeterministic) {
  // Votes at thresholds inside the * band around c are 0, so the error is
  // the band's share of the threshold grid, the same on every draw.
  const FunctionClass f = Cls(10, {{7, 7}});
  const auto d = DiscreteDistribution::Uniform(2);
  const GameResult r = GameExhaustive(f, d, 2, AggregatorPredictor(f, kCfg));
  EXPECT_EQ(r.worst_target().exact_error, BigRational(1, 10));
  EXPECT_LT(r.worst_target().exact_error, (kCfg.gamma + kCfg.tau * 2).to_big());
  const GameResult mc = GameMc(f, d, 2, AggregatorPredictor(f, kCfg), 300, 3);
  EXPECT_DOUBLE_EQ(mc.worst_target().estimate, 0.1);
  EXPECT_EQ(mc.worst_target().std_error, 0.0);
}

TEST(GameTest, CubeExhaustiveWithinCorrectedBound) {
  const FunctionClass f = GenBinaryCube(2);
  const auto d = DiscreteDistribution::Uniform(2);
  const GameResult r = GameExhaustive(f, d, 3, AggregatorPredictor(f, kCfg));
  ASSERT_EQ(r.per_target.size(), 4u);
  const Rational bound = PredictionBoundCorrected(2, 3, kCfg.gamma, kCfg.tau);
  for (const TargetError& t : r.per_target) {
    EXPECT_TRUE(t.exact);
    EXPECT_LE(t.exact_error, bound.to_big());
  }
}

TEST(GameTest, MonteCarloAgreesWithExhaustive) {
  for (std::uint64_t s = 0; s < 6; ++s) {
    const FunctionClass f = GenRandom(2 + s % 2, 4, 4, s);
    std::vector<Rational> w(f.num_points());
    for (std::size_t i = 0; i < w.size(); ++i) {
      w[i] = Rational(static_cast<std::int64_t>(i) + 1,
                      static_cast<std::int64_t>(w.size() * (w.size() + 1) / 2));
    }
    const DiscreteDistribution d(w);
    const Predictor p = AggregatorPredictor(f, kCfg);
    const GameResult ex = GameExhaustive(f, d, 3, p);
    const GameResult mc = GameMc(f, d, 3, p, 4000, 100 + s);
    for (std::size_t t = 0; t < f.num_functions(); ++t) {
      const double exact = ex.per_target[t].exact_error.convert_to<double>();
      const TargetError& e = mc.per_target[t];
      EXPECT_LE(std::abs(e.estimate - exact), 3 * e.std_error + 1e-12)
          << "seed " << s << " target " << t;
    }
  }
}

TEST(GameTest, SameSeedSameResultAnyWorkerCount) {
  const FunctionClass f = GenRandom(3, 5, 4, 8);
  const auto d = DiscreteDistribution::Uniform(3);
  const Predictor p = AggregatorPredictor(f, kCfg);
  const GameResult a = GameMc(f, d, 4, p, 300, 77);
  SetMaxJobs(2);
  const GameResult b = GameMc(f, d, 4, p, 300, 77);
  SetMaxJobs(1);
  for (std::size_t t = 0; t < a.per_target.size(); ++t) {
    EXPECT_EQ(a.per_target[t].estimate, b.per_target[t].estimate);
    EXPECT_EQ(a.per_target[t].std_error, b.per_target[t].std_error);
  }
}

TEST(GameTest, ExhaustiveGuard) {
  const FunctionClass f = GenBinaryCube(4);
  const auto d = DiscreteDistribution::Uniform(4);
  try {
    GameExhaustive(f, d, 11, AggregatorPredictor(f, kCfg));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGuardLimit);
  }
}

TEST(CwdcGameTest, BoundedByDimensionOverSize) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    Rng rng(s);
    std::vector<std::string> rows(1 + rng.Below(6));
    for (auto& r : rows) {
      r.clear();
      for (int i = 0; i < 3; ++i) r.push_back("01*"[rng.Below(3)]);
    }
    const TernaryClass g = Tern(rows);
    const std::size_t vc = VcdimStar(g).size;
    std::vector<PointIndex> x(4);
    for (auto& p : x) p = rng.Below(3);
    for (std::size_t t = 0; t < g.num_functions(); ++t) {
      EXPECT_LE(CwdcPermutationExhaustive(g, x, t),
                Rational(static_cast<std::int64_t>(vc), 4));
    }
  }
}

TEST(DeviationTest, Examples) {
  const auto d = DiscreteDistribution::Uniform(2);
  const std::vector<Rational> f = {0, 1};
  const PointIndex s0[] = {0};
  EXPECT_EQ(Deviation(f, d, s0), BigRational(1, 2));
  const PointIndex s01[] = {0, 1};
  EXPECT_EQ(Deviation(f, d, s01), BigRational(0));
  const FunctionClass c = Cls(4, {{1, 1}});
  EXPECT_EQ(SupDeviation(c, d, s0), BigRational(0));
}

TEST(DeviationTest, ProductMatchesMaterialized) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    Rng rng(s);
    std::vector<std::vector<Rational>> vals(4);
    for (auto& v : vals) {
      for (std::size_t i = 0, k = 1 + rng.Below(3); i < k; ++i) {
        v.push_back(Rational(static_cast<std::int64_t>(rng.Below(7)), 6));
      }
    }
    const ProductClass p(vals);
    const auto d = DiscreteDistribution({Q("1/2"), Q("1/4"), Q("1/8"), Q("1/8")});
    std::vector<PointIndex> sample(1 + rng.Below(5));
    for (auto& x : sample) x = rng.Below(4);
    EXPECT_EQ(SupDeviation(p, d, sample), SupDeviation(p.Materialize(), d, sample));
  }
}

TEST(GcDeviationTest, BandClassNeverExceedsEps) {
  const Rational eps = Q("1/5");
  const FunctionClass f = GenBandClass(eps, 3, BandLevels::kTwo);
  const auto d = DiscreteDistribution({Q("1/2"), Q("1/3"), Q("1/6")});
  const Rational e[] = {eps};
  const GcDeviationResult r = GcDeviationExhaustive(f, d, 4, e);
  EXPECT_EQ(r.exceed_exact[0], BigRational(0));
  EXPECT_LE(r.max_deviation, eps.to_big());
}

TEST(GcDeviationTest, ExhaustiveAndMonteCarloAgree) {
  const FunctionClass f = GenRandom(3, 4, 4, 5);
  const auto d = DiscreteDistribution({Q("1/2"), Q("1/4"), Q("1/4")});
  const Rational e[] = {Q("1/10"), Q("1/5"), Q("3/10")};
  const GcDeviationResult ex = GcDeviationExhaustive(f, d, 4, e);
  const GcDeviationResult mc = GcDeviationMc(f, d, 4, e, 20000, 9);
  for (std::size_t i = 0; i < 3; ++i) {
    const double p = ex.exceed_exact[i].convert_to<double>();
    EXPECT_LE(std::abs(mc.exceed_estimate[i] - p), 3 * mc.exceed_std_error[i] + 1e-12);
    if (i > 0) EXPECT_LE(ex.exceed_exact[i], ex.exceed_exact[i - 1]);
  }
  // Exceedance over every size-4 sample, weighted directly.
  BigRational direct = 0;
  const Rational eps = e[0];
  for (PointIndex a = 0; a < 3; ++a)
    for (PointIndex b = 0; b < 3; ++b)
      for (PointIndex c = 0; c < 3; ++c)
        for (PointIndex g = 0; g < 3; ++g) {
          const PointIndex s[] = {a, b, c, g};
          if (SupDeviation(f, d, s) > eps.to_big()) {
            direct += d.weight(a).to_big() * d.weight(b).to_big() *
                      d.weight(c).to_big() * d.weight(g).to_big();
          }
        }
  EXPECT_EQ(ex.exceed_exact[0], direct);
}

TEST(GcDeviationTest, AdversarialFunctionDeviates) {
  const Rational eps = Q("1/5");
  const std::size_t n = 70;
  const auto d = DiscreteDistribution::Uniform(n);
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    std::vector<PointIndex> sample(3);
    for (auto& x : sample) x = rng.Below(n);
    const auto f = GcAdversarialFunction(eps, n, sample);
    EXPECT_GT(Deviation(f, d, sample), eps.to_big());
  }
}

TEST(MultinomialTest, CountsSumAndReplay) {
  const std::vector<Rational> p = {Q("1/2"), Q("1/3"), Q("1/6")};
  Rng a(4), b(4);
  const auto ca = MultinomialCounts(1000, p, a);
  EXPECT_EQ(ca, MultinomialCounts(1000, p, b));
  EXPECT_EQ(std::accumulate(ca.begin(), ca.end(), std::int64_t{0}), 1000);
  const std::vector<Rational> point = {0, 1, 0};
  EXPECT_EQ(MultinomialCounts(50, point, a), (std::vector<std::int64_t>{0, 50, 0}));
}

JointSample Joint(std::vector<LabeledPoint> s, std::vector<Rational> w) {
  return JointSample(std::move(s), std::move(w));
}

TEST(ErrorTest, EvalAndInf) {
  const JointSample p = Joint({{0, Q("1/2")}, {1, 0}, {1, 1}},
                              {Q("1/2"), Q("1/4"), Q("1/4")});
  const std::vector<Rational> h = {Q("1/2"), Q("1/2")};
  EXPECT_EQ(EvalError(h, p), BigRational(1, 4));
  const std::vector<Rational> exact = {Q("1/2"), 0};
  EXPECT_EQ(EvalError(exact, p), BigRational(1, 4));
  const FunctionClass f = Cls(2, {{0, 0}, {1, 1}, {2, 2}});
  const InfErrorResult inf = InfError(f, p);
  EXPECT_EQ(inf.argmin, 1u);
  EXPECT_EQ(inf.value, BigRational(1, 4));
}

TEST(ErrorTest, ThreeLevelConstantHalfIsClose) {
  const Rational eps = Q("1/5");
  const FunctionClass f = GenBandClass(eps, 3, BandLevels::kThree);
  const std::vector<Rational> half(3, Q("1/2"));
  Rng rng(2);
  for (std::size_t r = 0; r < f.num_functions(); ++r) {
    std::vector<LabeledPoint> s;
    for (PointIndex x = 0; x < 3; ++x) s.push_back({x, f.value(r, x)});
    std::vector<Rational> w = {Q("1/2"), Q("1/4"), Q("1/4")};
    EXPECT_LE(EvalError(half, Joint(s, w)), eps.to_big());
  }
}

TEST(ErmTest, PicksBetterFunction) {
  const FunctionClass f = Cls(4, {{0, 0}, {4, 4}});
  const LabeledSample z = {{0, Q("3/4")}, {1, 1}, {0, Q("1/4")}, {1, Q("3/4")}};
  EXPECT_EQ(ErmLearner(f, z, Q("1/100")), 1u);
  const FunctionClass tie = Cls(2, {{0}, {2}});
  const LabeledSample h = {{0, Q("1/2")}};
  EXPECT_EQ(ErmLearner(tie, h, Q("1/100")), 0u);
  const FunctionClass g = GenRandom(3, 6, 4, 1);
  LabeledSample real;
  for (PointIndex x = 0; x < 3; ++x) real.push_back({x, g.value(4, x)});
  const std::size_t pick = ErmLearner(g, real, Q("1/100"));
  for (const auto& z : real) EXPECT_EQ(g.value(pick, z.point), z.label);
}

TEST(ErmTest, CountsAgreeWithExpandedSample) {
  const FunctionClass f = GenRandom(3, 7, 4, 6);
  const JointSample p = Joint({{0, Q("1/4")}, {1, 1}, {2, 0}, {0, 1}},
                              {Q("1/4"), Q("1/4"), Q("1/4"), Q("1/4")});
  Rng rng(6);
  for (int t = 0; t < 30; ++t) {
    const auto counts = p.SampleCounts(1 + static_cast<std::int64_t>(rng.Below(12)), rng);
    LabeledSample z;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      for (std::int64_t c = 0; c < counts[i]; ++c) z.push_back(p.support()[i]);
    }
    EXPECT_EQ(ErmLearnerCounts(f, p, counts), ErmLearner(f, z, Q("1/100")));
  }
}

TEST(CoverLearnerTest, SingleFunctionReturnsItsValue) {
  const FunctionClass f = Cls(4, {{1, 3, 2}});
  const LabeledSample z = {{0, Q("1/4")}, {1, Q("3/4")}, {0, Q("1/4")}, {2, 0}};
  EXPECT_EQ(CoverLearnerQ(f, z, Q("1/2"), Q("1/100")), Q("1/2"));
}

TEST(CoverLearnerTest, ZeroRadiusIsErmOnRestriction) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const FunctionClass f = GenRandom(3, 6, 4, s);
    Rng rng(s);
    LabeledSample z(6);
    for (auto& x : z) {
      x = {rng.Below(3), Rational(static_cast<std::int64_t>(rng.Below(5)), 4)};
    }
    const std::size_t erm = ErmLearner(f, std::span(z).first(3), Q("1/100"));
    const Rational q = CoverLearnerQ(f, z, Rational(0));
    // Distinct rows on the sample points may tie on the labelled half; the
    // prediction must come from some row of minimum labelled loss.
    auto loss = [&](std::size_t r) {
      Rational l = 0;
      for (std::size_t i = 0; i < 3; ++i) l += Abs(f.value(r, z[i].point) - z[i].label);
      return l;
    };
    bool found = false;
    for (std::size_t r = 0; r < f.num_functions(); ++r) {
      found = found || (loss(r) == loss(erm) && f.value(r, z.back().point) == q);
    }
    EXPECT_TRUE(found) << "seed " << s;
  }
}

TEST(AgnosticTest, InsufficientSampleReported) {
  const FunctionClass f = GenBinaryCube(2);
  const CoverLearnerPlan plan = PlanCoverLearner(Q("1/2"), Q("1/2"), Q("2/5"), 2);
  const LabeledSample z = {{0, 1}, {1, 0}};
  try {
    AgnosticLearn(f, z, plan);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInsufficientSample);
    EXPECT_NE(std::string(e.what()).find(std::to_string(plan.total)), std::string::npos);
  }
}

TEST(AgnosticTest, RealizableTinyClassIsExact) {
  const FunctionClass f = Cls(2, {{0, 2}, {2, 0}, {1, 1}});
  CoverLearnerPlan plan;
  plan.k = 3;
  plan.n1 = 2;
  plan.n2 = 4;
  plan.total = plan.n1 * (2 * plan.k - 1) + plan.n2;
  plan.cover_radius = Q("1/10");
  const JointSample p = Joint({{0, 1}, {1, 0}}, {Q("1/2"), Q("1/2")});
  Rng rng(12);
  LabeledSample z;
  for (std::int64_t i = 0; i < plan.total; ++i) z.push_back(p.Sample(rng));
  const AgnosticOutput out = AgnosticLearn(f, z, plan);
  EXPECT_EQ(out.candidates.size(), 2u);
  EXPECT_EQ(EvalError(out.hypothesis, p), BigRational(0));
  const AgnosticOutput sampled = AgnosticLearnSampled(f, p, plan, rng);
  EXPECT_EQ(EvalError(sampled.hypothesis, p), BigRational(0));
}

TEST(AgnosticTest, SingleBlockPassesThrough) {
  const FunctionClass f = Cls(2, {{0, 2}, {2, 0}});
  CoverLearnerPlan plan;
  plan.k = 1;
  plan.n1 = 1;
  plan.n2 = 1;
  plan.total = 2;
  plan.cover_radius = Rational(0);
  const LabeledSample z = {{0, 1}, {1, 0}};
  const AgnosticOutput out = AgnosticLearn(f, z, plan);
  EXPECT_EQ(out.chosen, 0u);
  EXPECT_EQ(out.hypothesis, out.candidates[0]);
}

}  // namespace
}  // namespace scaledim
