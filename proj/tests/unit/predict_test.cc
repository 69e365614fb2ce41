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

#include <algorithm>
#include <numeric>

#include "scaledim/dims.h"
#include "scaledim/error.h"
#include "scaledim/generators.h"
#include "scaledim/one_inclusion.h"
#include "scaledim/oracles.h"
#include "scaledim/predict.h"
#include "scaledim/rng.h"
#include "scaledim/simulate.h"
#include "test_util.h"

namespace scaledim {
namespace {

using testing::Cls;
using testing::Q;
using testing::Tern;

TEST(OneInclusionTest, GraphShapes) {
  const Pattern far[] = {0b00, 0b11};
  const auto g1 = OneInclusionModel::Build(far, 2);
  EXPECT_EQ(g1.vertices().size(), 2u);
  EXPECT_TRUE(g1.edges().empty());
  EXPECT_EQ(g1.max_out_degree(), 0u);

  std::vector<Pattern> cube(8);
  std::iota(cube.begin(), cube.end(), 0);
  const auto g2 = OneInclusionModel::Build(cube, 3);
  EXPECT_EQ(g2.vertices().size(), 8u);
  EXPECT_EQ(g2.edges().size(), 12u);
  EXPECT_EQ(g2.max_out_degree(), 2u);

  const Pattern singles[] = {0b001, 0b010, 0b100};
  EXPECT_TRUE(OneInclusionModel::Build(singles, 3).edges().empty());
}

TEST(OneInclusionTest, EdgesJoinHammingNeighbours) {
  std::vector<Pattern> p = {0, 1, 3, 7, 6};
  const auto g = OneInclusionModel::Build(p, 3);
  for (const auto& e : g.edges()) {
    const Pattern diff = g.vertices()[e.lower] ^ g.vertices()[e.upper];
    EXPECT_EQ(diff, Pattern{1} << e.coordinate);
    EXPECT_TRUE(e.head == e.lower || e.head == e.upper);
  }
}

TEST(OneInclusionTest, OrientationIsOptimalAndWithinVcDimension) {
  for (std::uint64_t s = 0; s < 150; ++s) {
    Rng rng(s);
    const std::size_t w = 1 + rng.Below(4);
    std::vector<Pattern> p(1 + rng.Below(12));
    for (auto& x : p) x = rng.Below(std::uint64_t{1} << w);
    const auto g = OneInclusionModel::Build(p, w);
    EXPECT_LE(g.max_out_degree(), VcDimension(p, w));
    if (g.edges().size() <= 18) {
      EXPECT_EQ(g.max_out_degree(), oracle::OptimalMaxOutDegree(p, w))
          << "seed " << s;
    }
    std::vector<std::uint32_t> deg(g.vertices().size(), 0);
    for (const auto& e : g.edges()) {
      ++deg[e.head == e.lower ? e.upper : e.lower];
    }
    EXPECT_EQ(deg, g.out_degrees());
  }
}

TEST(OigPredictTest, UniqueConsistentVertex) {
  const Pattern p[] = {0b00, 0b11};
  const auto g = OneInclusionModel::Build(p, 2);
  const std::pair<std::size_t, int> prefix[] = {{0, 0}};
  EXPECT_EQ(OigPredict(g, prefix, 1), 0);
  const std::pair<std::size_t, int> prefix1[] = {{0, 1}};
  EXPECT_EQ(OigPredict(g, prefix1, 1), 1);
}

TEST(OigPredictTest, EdgeResolvedByHead) {
  const Pattern p[] = {0b0, 0b1};
  const auto g = OneInclusionModel::Build(p, 1);
  ASSERT_EQ(g.edges().size(), 1u);
  const auto& e = g.edges()[0];
  EXPECT_EQ(OigPredict(g, {}, 0), static_cast<int>(g.vertices()[e.head] & 1));
}

TEST(OigPredictTest, InconsistentPrefixIsDistinctError) {
  const Pattern p[] = {0b00};
  const auto g = OneInclusionModel::Build(p, 2);
  const std::pair<std::size_t, int> prefix[] = {{0, 1}};
  try {
    OigPredict(g, prefix, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInconsistentPrefix);
  }
}

// Fraction of orderings of x whose last element the binary predictor gets
// wrong, computed here from the model directly.
Rational OigPermutationMistakes(const std::vector<Pattern>& patterns,
                                std::size_t width, Pattern target,
                                std::vector<std::size_t> x) {
  const auto g = OneInclusionModel::Build(patterns, width);
  std::sort(x.begin(), x.end());
  std::int64_t mistakes = 0, total = 0;
  do {
    std::vector<std::pair<std::size_t, int>> prefix;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
      prefix.push_back({x[i], static_cast<int>((target >> x[i]) & 1)});
    }
    const std::size_t q = x.back();
    bool known = false;
    for (const auto& pr : prefix) known = known || pr.first == q;
    int pred;
    if (known) {
      pred = static_cast<int>((target >> q) & 1);
    } else {
      pred = OigPredict(g, prefix, q);
    }
    mistakes += pred != static_cast<int>((target >> q) & 1);
    ++total;
  } while (std::next_permutation(x.begin(), x.end()));
  return Rational(mistakes, total);
}

TEST(OigPredictTest, SingletonClassMistakeBound) {
  const std::vector<Pattern> p = {0b001, 0b010, 0b100};
  for (Pattern t : p) {
    EXPECT_LE(OigPermutationMistakes(p, 3, t, {0, 1, 2}), Q("1/3"));
  }
}

TEST(OigPredictTest, PermutationMistakeBoundOnRandomClasses) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    Rng rng(s);
    const std::size_t w = 2 + rng.Below(3);
    std::vector<Pattern> p(1 + rng.Below(10));
    for (auto& x : p) x = rng.Below(std::uint64_t{1} << w);
    const std::size_t vc = VcDimension(p, w);
    std::vector<std::size_t> x(w);
    std::iota(x.begin(), x.end(), 0);
    for (Pattern t : p) {
      EXPECT_LE(OigPermutationMistakes(p, w, t, x),
                Rational(static_cast<std::int64_t>(vc), static_cast<std::int64_t>(w)));
    }
  }
}

TEST(CwdcPredictTest, EmptyConsistentSetPredictsZero) {
  const TernaryClass g = Tern({"1*", "0*"});
  const TernaryLabel prefix[] = {{0, Ternary::kOne}};
  EXPECT_EQ(CwdcPredict(g, prefix, 1), 0);
}

TEST(CwdcPredictTest, AgreeingRowsDecide) {
  const TernaryClass g = Tern({"*1", "*1", "0*"});
  const TernaryLabel prefix[] = {{0, Ternary::kStar}};
  EXPECT_EQ(CwdcPredict(g, prefix, 1), 1);
}

TEST(CwdcPredictTest, ConflictingPrefixPredictsZero) {
  const TernaryClass g = Tern({"11", "01"});
  const TernaryLabel prefix[] = {{0, Ternary::kOne}, {0, Ternary::kZero}};
  EXPECT_EQ(CwdcPredict(g, prefix, 1), 0);
}

TEST(CwdcPredictTest, AllStarTargetNeverCharged) {
  const TernaryClass g = Tern({"***", "010", "101"});
  const PointIndex x[] = {0, 1, 2};
  EXPECT_EQ(CwdcPermutationExhaustive(g, x, 0), Rational(0));
}

TEST(CwdcPredictTest, SingleRowClassNeverErrs) {
  const TernaryClass g = Tern({"0*1"});
  const PointIndex x[] = {0, 1, 2, 2};
  EXPECT_EQ(CwdcPermutationExhaustive(g, x, 0), Rational(0));
}

TEST(AggregatorTest, ConfigValidation) {
  EXPECT_THROW((AggregatorConfig{Q("0"), Q("1/10")}.Validate()), Error);
  EXPECT_THROW((AggregatorConfig{Q("1/10"), Q("0")}.Validate()), Error);
  EXPECT_THROW((AggregatorConfig{Q("1/10"), Q("3/2")}.Validate()), Error);
  const auto r = AggregatorConfig{Q("1/10"), Q("3/10")}.Thresholds();
  EXPECT_EQ(r, (std::vector<Rational>{Q("3/10"), Q("3/5"), Q("9/10")}));
}

TEST(AggregatorTest, InequalityExamples) {
  const AggregatorConfig cfg{Q("0.05"), Q("0.1")};
  const std::vector<int> zeros(10, 0);
  const InequalityCheck c = CheckAggregationInequality(Q("0.63"), cfg, zeros);
  EXPECT_EQ(c.lhs, Q("0.63"));
  EXPECT_EQ(c.rhs, Q("0.75"));
  EXPECT_TRUE(c.holds);
  std::vector<int> exact(10);
  for (int i = 0; i < 10; ++i) exact[i] = Q("0.6") >= Rational(i + 1, 10);
  const InequalityCheck e = CheckAggregationInequality(Q("0.6"), cfg, exact);
  EXPECT_LE(e.lhs, cfg.tau);
  EXPECT_TRUE(e.holds);
}

TEST(AggregatorTest, InequalityMatchesLiteralSides) {
  for (std::uint64_t s = 0; s < 3000; ++s) {
    Rng rng(s);
    const AggregatorConfig cfg{Rational(1 + static_cast<std::int64_t>(rng.Below(50)), 100),
                               Rational(1, 1 + static_cast<std::int64_t>(rng.Below(20)))};
    const Rational y(static_cast<std::int64_t>(rng.Below(101)), 100);
    std::vector<int> b(cfg.Thresholds().size());
    for (auto& x : b) x = static_cast<int>(rng.Below(2));
    const InequalityCheck c = CheckAggregationInequality(y, cfg, b);
    const auto lit = oracle::AggregationInequality(y, cfg.tau, cfg.gamma, b);
    EXPECT_EQ(c.lhs.to_big(), lit.lhs);
    EXPECT_EQ(c.rhs.to_big(), lit.rhs);
    EXPECT_TRUE(c.holds);
  }
}

TEST(AggregatorTest, ConstantClassPredictsWithinTau) {
  const FunctionClass f = Cls(10, {{7, 7}});
  const AggregatorConfig cfg{Q("1/10"), Q("1/20")};
  const LabeledPoint prefix[] = {{0, Q("7/10")}};
  const AggregateOutcome o = AggregatePredict(f, cfg, prefix, 1);
  // Thresholds inside the * band see no candidate row and vote 0.
  EXPECT_EQ(o.prediction, Q("3/5"));
  EXPECT_LT(Abs(o.prediction - Q("7/10")), cfg.gamma + cfg.tau + cfg.tau);
  EXPECT_EQ(o.bits.size(), 20u);
}

TEST(AggregatorTest, AllZeroVotesGiveZero) {
  const FunctionClass f = Cls(1, {{0, 0}});
  const AggregatorConfig cfg{Q("1/10"), Q("1/5")};
  EXPECT_EQ(AggregatePredict(f, cfg, {}, 0).prediction, Rational(0));
}

TEST(AggregatorTest, FullPrefixSatisfiesInequalityPerInstance) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    Rng rng(s);
    const FunctionClass f = GenRandom(3, 6, 5, s);
    const std::size_t target = rng.Below(f.num_functions());
    const AggregatorConfig cfg{Q("1/10"), Q("1/10")};
    LabeledSample prefix;
    for (PointIndex x = 0; x < 3; ++x) prefix.push_back({x, f.value(target, x)});
    const PointIndex q = rng.Below(3);
    const AggregateOutcome o = AggregatePredict(f, cfg, prefix, q);
    const InequalityCheck c = CheckAggregationInequality(f.value(target, q), cfg, o.bits);
    EXPECT_TRUE(c.holds);
    EXPECT_EQ(Abs(o.prediction - f.value(target, q)), c.lhs);
  }
}

TEST(AggregatorTest, ProductClassMatchesMaterializedClass) {
  const AggregatorConfig cfg{Q("1/10"), Q("1/10")};
  for (std::uint64_t s = 0; s < 40; ++s) {
    Rng rng(s);
    std::vector<std::vector<Rational>> vals(4);
    for (auto& v : vals) {
      const std::size_t k = 1 + rng.Below(3);
      for (std::size_t i = 0; i < k; ++i) {
        v.push_back(Rational(static_cast<std::int64_t>(rng.Below(5)), 4));
      }
    }
    const ProductClass p(vals);
    const FunctionClass m = p.Materialize();
    LabeledSample prefix;
    for (int i = 0; i < 2; ++i) {
      const PointIndex x = rng.Below(4);
      prefix.push_back({x, p.values(x)[rng.Below(p.values(x).size())]});
    }
    const PointIndex q = rng.Below(4);
    EXPECT_EQ(AggregatePredict(p, cfg, prefix, q).prediction,
              AggregatePredict(m, cfg, prefix, q).prediction)
        << "seed " << s;
  }
}

TEST(TranscriptTest, RowsRecomputable) {
  const FunctionClass f = GenBinaryCube(3);
  const AggregatorConfig cfg{Q("1/10"), Q("1/4")};
  const LabeledSample z = {{0, 1}, {1, 0}, {2, 1}, {0, 1}};
  const PredictorTranscript t = RunTranscript(f, cfg, z);
  ASSERT_EQ(t.size(), 4u);
  for (std::size_t i = 0; i < t.size(); ++i) {
    EXPECT_EQ(t[i].round, i + 1);
    EXPECT_EQ(t[i].abs_error, Abs(t[i].prediction - t[i].truth));
    EXPECT_EQ(t[i].mistakes.size(), 4u);
  }
  // The top threshold is * for every binary value.
  EXPECT_EQ(t[3].prediction, Q("3/4"));
}

TEST(BinarySearchTest, StaysInRange) {
  const FunctionClass f = GenRandom(3, 6, 8, 1);
  const LabeledPoint prefix[] = {{0, f.value(2, 0)}};
  for (std::size_t depth : {1u, 4u, 10u}) {
    const Rational p = BinarySearchPredict(f, Q("1/10"), depth, prefix, 1);
    EXPECT_GE(p, Rational(0));
    EXPECT_LE(p, Rational(1));
  }
  EXPECT_THROW(BinarySearchPredict(f, Q("1/10"), 0, prefix, 1), Error);
}

}  // namespace
}  // namespace scaledim
