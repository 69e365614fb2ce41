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

#include <set>

#include "scaledim/dims.h"
#include "scaledim/error.h"
#include "scaledim/generators.h"
#include "test_util.h"

namespace scaledim {
namespace {

using testing::Q;

std::set<Rational> ValuesAt(const FunctionClass& f, PointIndex x) {
  std::set<Rational> v;
  for (std::size_t r = 0; r < f.num_functions(); ++r) v.insert(f.value(r, x));
  return v;
}

TEST(GeneratorsTest, BinaryCube) {
  const FunctionClass one = GenBinaryCube(1);
  EXPECT_EQ(one.num_functions(), 2u);
  EXPECT_EQ(ValuesAt(one, 0), (std::set<Rational>{0, 1}));
  const FunctionClass f = GenBinaryCube(4);
  EXPECT_EQ(f.num_functions(), 16u);
  EXPECT_EQ(f.domain().front(), "1");
  for (const char* g : {"1/10", "1/4", "1/2"}) {
    EXPECT_EQ(FatV(f, Q(g)).size, 4u) << g;
  }
  EXPECT_EQ(Fat(f, Q("1/2")).size, 4u);
  EXPECT_EQ(FatV(f, Q("3/5")).size, 0u);
  try {
    GenBinaryCube(17);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGuardLimit);
  }
}

TEST(GeneratorsTest, TwoValue) {
  const FunctionClass f = GenTwoValue(4, Q("1/5"), Q("1/20"));
  EXPECT_EQ(f.num_functions(), 16u);
  for (PointIndex x = 0; x < 4; ++x) {
    EXPECT_EQ(ValuesAt(f, x), (std::set<Rational>{0, Q("3/10")}));
  }
  EXPECT_EQ(FatV(f, Q("3/20")).size, 4u);
  EXPECT_EQ(FatV(f, Q("4/25")).size, 0u);
  EXPECT_THROW(GenTwoValue(3, Q("1/5"), Q("1/5")), Error);
  const ProductClass p = TwoValueProduct(50, Q("1/5"), Q("1/20"));
  EXPECT_EQ(p.size(), BigInt(1) << 50);
  EXPECT_EQ(TwoValueProduct(4, Q("1/5"), Q("1/20")).Materialize().values(), f.values());
}

TEST(GeneratorsTest, ProfileSingleStep) {
  const FunctionClass f = GenProfile(ParseProfile("2@1/5"));
  for (const char* g : {"1/20", "1/10", "1/5"}) EXPECT_EQ(FatV(f, Q(g)).size, 2u);
  for (const char* g : {"21/100", "3/10", "1/2"}) EXPECT_EQ(FatV(f, Q(g)).size, 0u);
}

TEST(GeneratorsTest, ProfileTwoSteps) {
  const FunctionClass f = GenProfile(ParseProfile("3@1/5,1@2/5"));
  const std::pair<const char*, std::size_t> expect[] = {
      {"1/10", 3}, {"1/5", 3}, {"1/4", 1}, {"2/5", 1}, {"9/20", 0}};
  for (const auto& [g, d] : expect) EXPECT_EQ(FatV(f, Q(g)).size, d) << g;
}

TEST(GeneratorsTest, ProfileOpenSupremum) {
  const FunctionClass f = GenProfile(ParseProfile("2@1/4)"), 4);
  EXPECT_EQ(FatV(f, Q("1/8")).size, 2u);
  EXPECT_EQ(FatV(f, Q("3/16")).size, 2u);
  EXPECT_EQ(FatV(f, Q("1/4")).size, 0u);
}

TEST(GeneratorsTest, ProfileEdgeCases) {
  const FunctionClass zero = GenProfile({});
  EXPECT_EQ(zero.num_functions(), 1u);
  EXPECT_THROW(GenProfile(ParseProfile("1@1/5,3@2/5")), Error);
  EXPECT_THROW(ParseProfile("2@"), Error);
}

TEST(GeneratorsTest, GcCounterexampleValues) {
  const Rational eps = Q("1/5");
  const FunctionClass f = GenGcCounterexample(eps, 6);
  for (PointIndex x = 0; x < 6; ++x) {
    const Rational off = eps / 2 + Rational(1, static_cast<std::int64_t>(x) + 4);
    EXPECT_EQ(ValuesAt(f, x), (std::set<Rational>{Q("1/2") - off, Q("1/2") + off}));
  }
  // Points with 1/(i+3) >= 1/6 are i <= 3.
  EXPECT_LE(Fat(f, eps / 2 + Q("1/6")).size, 3u);
  const std::vector<PointIndex> sample = {1, 3};
  const auto adv = GcAdversarialFunction(eps, 6, sample);
  ASSERT_EQ(adv.size(), 6u);
  for (PointIndex x = 0; x < 6; ++x) {
    const Rational off = eps / 2 + Rational(1, static_cast<std::int64_t>(x) + 4);
    const bool in = x == 1 || x == 3;
    EXPECT_EQ(adv[x], in ? Q("1/2") - off : Q("1/2") + off);
  }
  EXPECT_EQ(GcCounterexampleProduct(eps, 6).Materialize().values(), f.values());
}

TEST(GeneratorsTest, BandClasses) {
  const FunctionClass two = GenBandClass(Q("1/5"), 4, BandLevels::kTwo);
  EXPECT_EQ(two.num_functions(), 16u);
  EXPECT_EQ(FatV(two, Q("1/10")).size, 4u);
  const FunctionClass three = GenBandClass(Q("1/5"), 3, BandLevels::kThree);
  EXPECT_EQ(three.num_functions(), 27u);
  for (std::size_t r = 0; r < three.num_functions(); ++r) {
    for (PointIndex x = 0; x < 3; ++x) {
      EXPECT_LE(Abs(three.value(r, x) - Q("1/2")), Q("1/5"));
    }
  }
  EXPECT_EQ(BandProduct(Q("1/5"), 3, BandLevels::kThree).Materialize().values(),
            three.values());
}

TEST(GeneratorsTest, RandomIsReproducibleAndOnGrid) {
  const FunctionClass a = GenRandom(4, 9, 6, 42);
  EXPECT_EQ(a, GenRandom(4, 9, 6, 42));
  EXPECT_NE(a, GenRandom(4, 9, 6, 43));
  EXPECT_EQ(a.num_points(), 4u);
  EXPECT_EQ(a.num_functions(), 9u);
  EXPECT_EQ(6 % a.denominator(), 0);
}

TEST(GeneratorsTest, DispatchMatchesDirectCalls) {
  EXPECT_EQ(Generate({"binary_cube", ParseParams("d=3"), 0}), GenBinaryCube(3));
  EXPECT_EQ(Generate({"two_value", ParseParams("n=3,gamma=1/5,kappa=1/20"), 0}),
            GenTwoValue(3, Q("1/5"), Q("1/20")));
  EXPECT_EQ(Generate({"random", ParseParams("points=3,funcs=5,b=4"), 9}),
            GenRandom(3, 5, 4, 9));
  EXPECT_EQ(Generate({"band", ParseParams("eps=1/5,n=3,levels=three"), 0}),
            GenBandClass(Q("1/5"), 3, BandLevels::kThree));
  EXPECT_THROW(Generate({"nope", {}, 0}), Error);
  EXPECT_THROW(Generate({"binary_cube", {}, 0}), Error);
  const auto p = ParseParams("a=1, b=x/y");
  EXPECT_EQ(p.at("a"), "1");
  EXPECT_EQ(p.at("b"), "x/y");
}

}  // namespace
}  // namespace scaledim
