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

#include "scaledim/dims.h"
#include "scaledim/error.h"
#include "scaledim/generators.h"
#include "scaledim/oracles.h"
#include "scaledim/rng.h"
#include "test_util.h"

namespace scaledim {
namespace {

using testing::Cls;
using testing::Q;
using testing::Tern;

TEST(VcdimStarTest, StarNeverMatchesABit) {
  const DimensionResult r = VcdimStar(Tern({"0*", "1*", "**"}));
  EXPECT_EQ(r.size, 1u);
  EXPECT_EQ(r.witness.points, std::vector<PointIndex>{0});
  EXPECT_EQ(VcdimStar(Tern({"00", "01", "10", "11"})).size, 2u);
  EXPECT_EQ(VcdimStar(Tern({"**", "**"})).size, 0u);
  EXPECT_TRUE(VcdimStar(Tern({"**"})).witness.points.empty());
}

TEST(VcdimStarTest, WitnessIsLexicographicallySmallest) {
  const DimensionResult r = VcdimStar(Tern({"000", "011", "101", "110"}));
  EXPECT_EQ(r.size, 2u);
  EXPECT_EQ(r.witness.points, (std::vector<PointIndex>{0, 1}));
}

TEST(VcdimStarTest, MatchesLiteralEnumeration) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    Rng rng(s);
    const std::size_t n = 1 + rng.Below(5);
    const std::size_t rows = 1 + rng.Below(12);
    std::vector<Ternary> data(n * rows);
    for (auto& t : data) t = static_cast<Ternary>(rng.Below(3));
    const TernaryClass g(DefaultDomainLabels(n), rows, data);
    const DimensionResult r = VcdimStar(g);
    EXPECT_EQ(r.size, oracle::VcdimStar(g)) << "seed " << s;
    EXPECT_TRUE(VerifyWitness(g, r.witness));
  }
}

TEST(FatVTest, Examples) {
  const DimensionResult cube = FatV(GenBinaryCube(3), Q("2/5"));
  EXPECT_EQ(cube.size, 3u);
  ASSERT_EQ(cube.witness.thresholds.size(), 1u);
  EXPECT_TRUE(VerifyWitness(GenBinaryCube(3), Q("2/5"), cube.witness));
  EXPECT_EQ(FatV(Cls(2, {{1, 1, 1}}), Q("1/10")).size, 0u);
  EXPECT_EQ(FatV(GenBinaryCube(2), Q("1/2")).size, 2u);
  EXPECT_EQ(FatV(GenBinaryCube(2), Q("3/5")).size, 0u);
  EXPECT_THROW(FatV(GenBinaryCube(2), Q("0")), Error);
}

TEST(FatTest, Examples) {
  EXPECT_EQ(Fat(GenBinaryCube(3), Q("1/2")).size, 3u);
  EXPECT_EQ(Fat(Cls(2, {{1}}), Q("1/10")).size, 0u);
}

TEST(FatTest, PerPointThresholdsBeatSharedThreshold) {
  // Point 0 splits around 1/4, point 1 around 3/4: no single r serves both.
  const FunctionClass f = Cls(4, {{0, 2}, {0, 4}, {2, 2}, {2, 4}});
  EXPECT_EQ(Fat(f, Q("1/4")).size, 2u);
  EXPECT_EQ(FatV(f, Q("1/4")).size, 1u);
}

TEST(SfatTest, Examples) {
  const FunctionClass f = Cls(1, {{0}, {1}});
  const DimensionResult r = Sfat(f, Q("1/2"));
  EXPECT_EQ(r.size, 1u);
  ASSERT_EQ(r.witness.levels.size(), 1u);
  EXPECT_EQ(r.witness.levels[0].first, Rational(0));
  EXPECT_EQ(r.witness.levels[0].second, Rational(1));
  EXPECT_EQ(Sfat(f, Q("3/5")).size, 0u);
}

TEST(SfatTest, NeedsExactLevels) {
  // Fat-shattered but the upper values at point 1 differ.
  const FunctionClass f = Cls(4, {{0, 0}, {0, 3}, {4, 0}, {4, 4}});
  EXPECT_EQ(Fat(f, Q("1/4")).size, 2u);
  EXPECT_EQ(Sfat(f, Q("1/4")).size, 1u);
}

class DimensionOracleTest : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(DimensionOracleTest, SearchMatchesDenseEnumeration) {
  const Rational gammas[] = {Q("1/20"), Q("1/10"), Q("1/8"), Q("1/5"),
                             Q("1/4"), Q("2/5"), Q("1/2")};
  for (std::uint64_t k = 0; k < 25; ++k) {
    const std::uint64_t s = GetParam() * 1000 + k;
    Rng rng(s);
    const std::size_t n = 1 + rng.Below(5);
    const std::size_t rows = 1 + rng.Below(12);
    const FunctionClass f = GenRandom(n, rows, 4, s);
    std::size_t prev[3] = {99, 99, 99};
    for (const Rational& g : gammas) {
      const DimensionResult v = FatV(f, g), a = Fat(f, g), t = Sfat(f, g);
      EXPECT_EQ(v.size, oracle::FatV(f, g)) << "seed " << s << " gamma " << g;
      EXPECT_EQ(a.size, oracle::Fat(f, g)) << "seed " << s << " gamma " << g;
      EXPECT_EQ(t.size, oracle::Sfat(f, g)) << "seed " << s << " gamma " << g;
      EXPECT_TRUE(VerifyWitness(f, g, v.witness));
      EXPECT_TRUE(VerifyWitness(f, g, a.witness));
      EXPECT_TRUE(VerifyWitness(f, g, t.witness));
      EXPECT_LE(t.size, a.size);
      EXPECT_LE(v.size, a.size);
      EXPECT_LE(v.size, prev[0]);
      EXPECT_LE(a.size, prev[1]);
      EXPECT_LE(t.size, prev[2]);
      prev[0] = v.size;
      prev[1] = a.size;
      prev[2] = t.size;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, DimensionOracleTest, ::testing::Range<std::uint64_t>(0, 4));

TEST(DimensionPropertyTest, ThresholdImageBoundedByFatV) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const FunctionClass f = GenRandom(4, 10, 6, s);
    const Rational g(1, 6);
    const std::size_t fv = FatV(f, g).size;
    for (std::int64_t r = 0; r <= 12; ++r) {
      EXPECT_LE(VcdimStar(PsiClass(f, Rational(r, 12), g)).size, fv);
    }
  }
}

TEST(DimensionPropertyTest, QuantizationShrinksFat) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const FunctionClass f = GenRandom(4, 10, 12, s);
    const Rational gamma(1, 4);
    for (const Rational& beta : {Q("1/12"), Q("1/6"), Q("1/5")}) {
      EXPECT_LE(Fat(Quantize(f, beta), gamma).size, Fat(f, gamma - beta).size);
    }
  }
}

TEST(DimensionPropertyTest, InvariantUnderDuplicatesAndColumnPermutation) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const FunctionClass f = GenRandom(4, 8, 4, s);
    std::vector<std::vector<std::int64_t>> dup, perm;
    for (std::size_t i = 0; i < f.num_functions(); ++i) {
      const auto row = f.values().row(i);
      dup.emplace_back(row.begin(), row.end());
      dup.emplace_back(row.begin(), row.end());
      perm.push_back({row[3], row[1], row[0], row[2]});
    }
    const FunctionClass fd = Cls(4, dup), fp = Cls(4, perm);
    for (const Rational& g : {Q("1/8"), Q("1/4")}) {
      for (DimensionKind k : {DimensionKind::kFatV, DimensionKind::kFat,
                              DimensionKind::kSfat, DimensionKind::kVcdimStar}) {
        const std::size_t base = ComputeDimension(k, f, g).size;
        EXPECT_EQ(ComputeDimension(k, fd, g).size, base);
        EXPECT_EQ(ComputeDimension(k, fp, g).size, base);
      }
    }
  }
}

TEST(DimensionKindTest, NamesRoundTrip) {
  for (DimensionKind k : {DimensionKind::kVcdimStar, DimensionKind::kFatV,
                          DimensionKind::kFat, DimensionKind::kSfat}) {
    EXPECT_EQ(ParseDimensionKind(DimensionKindName(k)), k);
  }
  EXPECT_THROW(ParseDimensionKind("bogus"), Error);
}

TEST(VcDimensionTest, MatchesLiteral) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    Rng rng(s);
    const std::size_t w = 1 + rng.Below(6);
    std::vector<std::uint64_t> p(1 + rng.Below(40));
    for (auto& x : p) x = rng.Below(std::uint64_t{1} << w);
    EXPECT_EQ(VcDimension(p, w), oracle::VcDimension(p, w));
  }
}

TEST(WitnessTest, TamperedWitnessFails) {
  const FunctionClass cube = GenBinaryCube(2);
  DimensionWitness w = FatV(cube, Q("2/5")).witness;
  w.thresholds[0] = Q("0");
  EXPECT_FALSE(VerifyWitness(cube, Q("2/5"), w));
}

TEST(GuardTest, LargeDomainsAreRefused) {
  const FunctionClass f = GenRandom(17, 2, 1, 0);
  try {
    FatV(f, Q("1/4"));
    FAIL() << "expected guard refusal";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGuardLimit);
  }
}

}  // namespace
}  // namespace scaledim
