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

#include "scaledim/error.h"
#include "scaledim/function_class.h"
#include "scaledim/generators.h"
#include "scaledim/oracles.h"
#include "scaledim/packing.h"
#include "scaledim/rng.h"
#include "test_util.h"

namespace scaledim {
namespace {

using testing::Q;

ValueMatrix Corners() { return ValueMatrix::FromRows(1, {{0, 0}, {1, 1}, {0, 1}}); }

ValueMatrix RandomMatrix(std::uint64_t seed, std::size_t max_rows) {
  Rng rng(seed);
  const std::size_t cols = 1 + rng.Below(5);
  const std::size_t rows = 1 + rng.Below(max_rows);
  const std::int64_t b = 2 + static_cast<std::int64_t>(rng.Below(4));
  std::vector<std::int64_t> v(rows * cols);
  for (auto& x : v) x = static_cast<std::int64_t>(rng.Below(b + 1));
  return ValueMatrix(b, cols, v);
}

TEST(PackingTest, SmallExamples) {
  const ValueMatrix s = Corners();
  EXPECT_EQ(PackingExact(s, Q("0.6")).size, 2u);
  EXPECT_EQ(PackingExact(s, Q("0.4")).size, 3u);
  EXPECT_EQ(CoverProperExact(s, Q("0.5")).size, 1u);
  const SandwichReport r = SandwichCheck(s, Q("0.5"));
  EXPECT_EQ(r.packing_double, 1u);
  EXPECT_EQ(r.cover, 1u);
  EXPECT_EQ(r.packing, 2u);
  EXPECT_TRUE(r.holds);
  const SandwichReport r2 = SandwichCheck(s, Q("0.3"));
  EXPECT_EQ(r2.packing_double, 2u);
  EXPECT_EQ(r2.cover, 3u);
  EXPECT_EQ(r2.packing, 3u);
}

TEST(PackingTest, StrictAndNonStrictBoundaries) {
  const ValueMatrix s = ValueMatrix::FromRows(2, {{0, 0}, {1, 1}});
  // Distance is exactly 1/2.
  EXPECT_EQ(PackingExact(s, Q("1/2")).size, 1u);
  EXPECT_EQ(CoverProperExact(s, Q("1/2")).size, 1u);
  EXPECT_EQ(PackingExact(s, Q("49/100")).size, 2u);
  EXPECT_EQ(CoverProperExact(s, Q("49/100")).size, 2u);
}

TEST(PackingTest, WeightsRepeatColumns) {
  const ValueMatrix s = ValueMatrix::FromRows(1, {{0, 0}, {1, 0}, {0, 1}});
  const std::int64_t w[] = {3, 1};
  const ValueMatrix rep = ValueMatrix::FromRows(
      1, {{0, 0, 0, 0}, {1, 1, 1, 0}, {0, 0, 0, 1}});
  for (const char* e : {"1/5", "1/4", "1/2", "3/4", "4/5"}) {
    EXPECT_EQ(PackingExact(s, Q(e), w).size, PackingExact(rep, Q(e)).size) << e;
    EXPECT_EQ(CoverProperExact(s, Q(e), w).size,
              CoverProperExact(rep, Q(e)).size) << e;
  }
}

TEST(PackingTest, WitnessesVerify) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const ValueMatrix m = RandomMatrix(s, 16);
    const Rational eps(1 + static_cast<std::int64_t>(s % 4), 5);
    const PackingResult p = PackingExact(m, eps);
    const PackingResult g = PackingGreedy(m, eps);
    const PackingResult c = CoverProperExact(m, eps);
    EXPECT_TRUE(VerifyPacking(m, eps, p.witness));
    EXPECT_TRUE(VerifyPacking(m, eps, g.witness));
    EXPECT_TRUE(VerifyCover(m, eps, g.witness));
    EXPECT_TRUE(VerifyCover(m, eps, c.witness));
    EXPECT_TRUE(std::is_sorted(p.witness.begin(), p.witness.end()));
    EXPECT_LE(g.size, p.size);
    EXPECT_LE(c.size, g.size);
    EXPECT_LE(c.size, p.size);
  }
}

TEST(PackingTest, MatchesOracles) {
  for (std::uint64_t s = 0; s < 150; ++s) {
    const ValueMatrix m = RandomMatrix(1000 + s, 10);
    for (const char* e : {"1/10", "1/4", "2/5"}) {
      EXPECT_EQ(PackingExact(m, Q(e)).size, oracle::PackingNumber(m, Q(e)))
          << "seed " << s << " eps " << e;
      EXPECT_EQ(CoverProperExact(m, Q(e)).size,
                oracle::ProperCoverNumber(m, Q(e)))
          << "seed " << s << " eps " << e;
    }
  }
}

TEST(PackingTest, MonotoneInRadius) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const ValueMatrix m = RandomMatrix(2000 + s, 14);
    std::size_t prev_pack = m.rows() + 1, prev_cover = m.rows() + 1;
    for (std::int64_t k = 0; k <= 10; ++k) {
      const Rational eps(k, 10);
      const std::size_t p = PackingExact(m, eps).size;
      const std::size_t c = CoverProperExact(m, eps).size;
      EXPECT_LE(p, prev_pack);
      EXPECT_LE(c, prev_cover);
      prev_pack = p;
      prev_cover = c;
    }
  }
}

TEST(PackingTest, DuplicateRowsDoNotPack) {
  const ValueMatrix m = ValueMatrix::FromRows(4, {{1, 2}, {1, 2}, {1, 2}});
  EXPECT_EQ(PackingExact(m, Rational(0)).size, 1u);
  EXPECT_EQ(CoverProperExact(m, Rational(0)).size, 1u);
}

TEST(PackingTest, GreedyFollowsOrder) {
  const ValueMatrix s = Corners();
  const std::size_t order[] = {2, 0, 1};
  const PackingResult g = PackingGreedy(s, Q("0.6"), order);
  ASSERT_FALSE(g.witness.empty());
  EXPECT_EQ(g.witness.front(), 2u);
  EXPECT_EQ(g.size, 1u);
}

TEST(PackingTest, QuantizationAndLossCovers) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const ValueMatrix m = RandomMatrix(3000 + s, 10);
    EXPECT_TRUE(QuantizationCoverCheck(m, Q("2/5"), Q("1/10")));
    const FunctionClass f = GenRandom(3, 6, 4, s);
    Rng rng(s);
    LabeledSample z;
    for (int i = 0; i < 4; ++i) {
      z.push_back({rng.Below(3), Rational(static_cast<std::int64_t>(rng.Below(5)), 4)});
    }
    EXPECT_TRUE(LossClassCoverCheck(f, z, Q("1/4")));
  }
  EXPECT_THROW(QuantizationCoverCheck(Corners(), Q("1/5"), Q("1/5")), Error);
}

TEST(PackingTest, MetricValues) {
  const ValueMatrix s = Corners();
  const RowMetric d(s);
  EXPECT_EQ(d.Distance(0, 1), Rational(1));
  EXPECT_EQ(d.Distance(0, 2), Q("1/2"));
  EXPECT_TRUE(d.Within(0, 2, Q("1/2")));
  EXPECT_FALSE(d.Separated(0, 2, Q("1/2")));
  EXPECT_STREQ(PackingMethodName(PackingMethod::kExact), "exact");
}

}  // namespace
}  // namespace scaledim
