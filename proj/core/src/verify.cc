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

#include "scaledim/verify.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "json.hpp"
#include "scaledim/bounds.h"
#include "scaledim/dims.h"
#include "scaledim/error.h"
#include "scaledim/function_class.h"
#include "scaledim/generators.h"
#include "scaledim/one_inclusion.h"
#include "scaledim/oracles.h"
#include "scaledim/packing.h"
#include "scaledim/parallel.h"
#include "scaledim/predict.h"
#include "scaledim/rng.h"
#include "scaledim/simulate.h"

namespace scaledim {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string Num(double x, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, x);
  return buf;
}

std::string Q(const Rational& r) { return r.str(); }

Rng InstanceRng(std::uint64_t seed, int id, std::uint64_t instance) {
  return Rng::ForTrial(seed, static_cast<std::uint64_t>(id), instance);
}

std::size_t Between(Rng& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng.Below(hi - lo + 1));
}

// The aggregator reads the prefix only through its set of distinct
// (point, label) pairs, so games can share predictions across orderings.
Predictor Memoize(Predictor inner) {
  using Key = std::pair<std::vector<std::pair<PointIndex, Rational>>, PointIndex>;
  auto cache = std::make_shared<std::map<Key, Rational>>();
  auto mu = std::make_shared<std::mutex>();
  return [inner = std::move(inner), cache, mu](
             std::span<const LabeledPoint> prefix, PointIndex query) {
    Key key;
    for (const LabeledPoint& z : prefix) key.first.push_back({z.point, z.label});
    std::sort(key.first.begin(), key.first.end());
    key.first.erase(std::unique(key.first.begin(), key.first.end()),
                    key.first.end());
    key.second = query;
    {
      std::lock_guard<std::mutex> lock(*mu);
      auto it = cache->find(key);
      if (it != cache->end()) return it->second;
    }
    const Rational value = inner(prefix, query);
    std::lock_guard<std::mutex> lock(*mu);
    cache->emplace(std::move(key), value);
    return value;
  };
}

// 1. Aggregation inequality sweep.
Outcome AggregationSweep(std::uint64_t seed) {
  constexpr std::uint64_t kInstances = 100000;
  const Rational taus[] = {Rational(1, 5), Rational(1, 10), Rational(1, 20),
                           Rational(1, 50)};
  std::uint64_t violations = 0;
  std::uint64_t mismatches = 0;
  for (std::uint64_t i = 0; i < kInstances; ++i) {
    Rng rng = InstanceRng(seed, 1, i);
    AggregatorConfig cfg;
    cfg.tau = taus[rng.Below(4)];
    cfg.gamma = Rational(static_cast<std::int64_t>(rng.Below(200)) + 1, 400);
    const Rational y(static_cast<std::int64_t>(rng.Below(1001)), 1000);
    const std::vector<Rational> thresholds = cfg.Thresholds();
    std::vector<int> b(thresholds.size());
    const std::uint64_t style = rng.Below(4);
    for (std::size_t j = 0; j < b.size(); ++j) {
      switch (style) {
        case 0: b[j] = y >= thresholds[j] ? 1 : 0; break;
        case 1: b[j] = 0; break;
        case 2: b[j] = 1; break;
        default: b[j] = static_cast<int>(rng.Below(2));
      }
    }
    const InequalityCheck c = CheckAggregationInequality(y, cfg, b);
    const auto lit = oracle::AggregationInequality(y, cfg.tau, cfg.gamma, b);
    if (!c.holds || !(lit.lhs < lit.rhs)) ++violations;
    if (c.lhs.to_big() != lit.lhs || c.rhs.to_big() != lit.rhs) ++mismatches;
  }
  return {violations == 0 && mismatches == 0,
          "instances=" + std::to_string(kInstances) +
              " violations=" + std::to_string(violations) +
              " oracle_mismatches=" + std::to_string(mismatches)};
}

// 2. Exact mistake bound for the don't-care predictor.
Outcome CwdcMistakeBound(std::uint64_t seed) {
  constexpr std::uint64_t kClasses = 200;
  constexpr std::size_t kM = 4;
  std::uint64_t cases = 0;
  std::uint64_t violations = 0;
  std::uint64_t dim_mismatches = 0;
  Rational worst_slack(1);
  for (std::uint64_t c = 0; c < kClasses; ++c) {
    Rng rng = InstanceRng(seed, 2, c);
    const std::size_t n = Between(rng, 1, 4);
    const std::size_t rows = Between(rng, 1, 8);
    std::vector<Ternary> data(n * rows);
    for (auto& t : data) t = static_cast<Ternary>(rng.Below(3));
    const TernaryClass g(DefaultDomainLabels(n), rows, std::move(data));
    const std::size_t vc = VcdimStar(g).size;
    if (vc != oracle::VcdimStar(g)) ++dim_mismatches;
    const Rational bound(static_cast<std::int64_t>(vc), kM);
    // Every multiset of kM points, as a non-decreasing sequence.
    std::vector<PointIndex> x(kM, 0);
    while (true) {
      for (std::size_t t = 0; t < rows; ++t) {
        const Rational p = CwdcPermutationExhaustive(g, x, t);
        ++cases;
        if (p > bound) ++violations;
        worst_slack = Min(worst_slack, bound - p);
      }
      std::size_t i = kM;
      while (i > 0 && x[i - 1] == n - 1) --i;
      if (i == 0) break;
      ++x[i - 1];
      for (std::size_t j = i; j < kM; ++j) x[j] = x[i - 1];
    }
  }
  return {violations == 0 && dim_mismatches == 0,
          "classes=" + std::to_string(kClasses) +
              " cases=" + std::to_string(cases) +
              " violations=" + std::to_string(violations) +
              " dim_oracle_mismatches=" + std::to_string(dim_mismatches) +
              " min_slack=" + Q(worst_slack)};
}

// 3. Expected-error bound, exhaustive.
Outcome ExpectedErrorExhaustive(std::uint64_t /*seed*/) {
  const FunctionClass f = GenBinaryCube(2);
  const AggregatorConfig cfg{Rational(1, 10), Rational(1, 20)};
  constexpr std::size_t kM = 3;
  const std::size_t d = FatV(f, cfg.gamma).size;
  const GameResult r = GameExhaustive(f, DiscreteDistribution::Uniform(2), kM,
                                      AggregatorPredictor(f, cfg));
  const BigRational bound = BigRational(static_cast<long long>(d), kM) +
                            cfg.gamma.to_big() + 2 * cfg.tau.to_big();
  const BigRational& worst = r.worst_target().exact_error;
  std::ostringstream ss;
  ss << "fatv=" << d << " worst_error=" << worst << " bound=" << bound;
  return {d == 2 && worst <= bound, ss.str()};
}

// 4. Expected-error bound, Monte Carlo.
Outcome ExpectedErrorMc(std::uint64_t seed) {
  const FunctionClass f = GenBinaryCube(3);
  const AggregatorConfig cfg{Rational(1, 10), Rational(1, 20)};
  constexpr std::uint64_t kTrials = 20000;
  const std::size_t d = FatV(f, cfg.gamma).size;
  bool pass = d == 3;
  std::string detail = "fatv=" + std::to_string(d);
  for (std::int64_t m : {5, 10, 20}) {
    const DiscreteDistribution dist(
        {Rational(1) - Rational(2, m), Rational(1, m), Rational(1, m)});
    const GameResult r =
        GameMc(f, dist, static_cast<std::size_t>(m),
               Memoize(AggregatorPredictor(f, cfg)), kTrials,
               seed ^ static_cast<std::uint64_t>(m));
    const TargetError& w = r.worst_target();
    const double bound = 3.0 / static_cast<double>(m) + cfg.gamma.to_double() +
                         2 * cfg.tau.to_double() + 3 * w.std_error;
    pass = pass && w.estimate <= bound;
    detail += " m=" + std::to_string(m) + ":worst=" + Num(w.estimate) +
              ",se=" + Num(w.std_error) + ",bound=" + Num(bound);
  }
  return {pass, detail};
}

// 5. Two-value lower bound.
Outcome TwoValueLowerBound(std::uint64_t seed) {
  constexpr std::size_t kN = 50;
  constexpr std::size_t kM = 10;
  constexpr std::uint64_t kTrials = 20000;
  const Rational gamma(1, 5);
  const Rational kappa(1, 50);
  const ProductClass f = TwoValueProduct(kN, gamma, kappa);
  const AggregatorConfig cfg{gamma, Rational(1, 20)};
  const Estimate e =
      GameMcRandomTarget(f, DiscreteDistribution::Uniform(kN), kM,
                         AggregatorPredictor(f, cfg), kTrials, seed);
  const double lower = (gamma - kappa).to_double() *
                       (1.0 - static_cast<double>(kM - 1) / kN);
  return {e.mean >= lower - 3 * e.std_error,
          "estimate=" + Num(e.mean) + " se=" + Num(e.std_error) +
              " lower_bound=" + Num(lower)};
}

// 6. Orientation out-degree against VC dimension.
Outcome OrientationBound(std::uint64_t seed) {
  constexpr std::uint64_t kSets = 100;
  std::uint64_t violations = 0;
  std::uint64_t mismatches = 0;
  std::uint32_t max_deg = 0;
  for (std::uint64_t s = 0; s < kSets; ++s) {
    Rng rng = InstanceRng(seed, 6, s);
    const std::size_t width = Between(rng, 1, 6);
    const std::size_t count = Between(rng, 1, 40);
    std::vector<Pattern> patterns(count);
    for (auto& p : patterns) p = rng.Below(std::uint64_t{1} << width);
    const OneInclusionModel g = OneInclusionModel::Build(patterns, width);
    const std::size_t vc = VcDimension(patterns, width);
    if (vc != oracle::VcDimension(patterns, width)) ++mismatches;
    if (g.max_out_degree() > vc) ++violations;
    max_deg = std::max(max_deg, g.max_out_degree());
  }
  return {violations == 0 && mismatches == 0,
          "sets=" + std::to_string(kSets) +
              " violations=" + std::to_string(violations) +
              " vc_oracle_mismatches=" + std::to_string(mismatches) +
              " max_out_degree=" + std::to_string(max_deg)};
}

// 7. Dimension search against the literal oracles.
Outcome DimensionCrossCheck(std::uint64_t seed) {
  constexpr std::uint64_t kClasses = 100;
  const Rational gammas[] = {Rational(1, 10), Rational(1, 5), Rational(2, 5)};
  std::uint64_t mismatches = 0;
  std::uint64_t order_failures = 0;
  std::uint64_t witness_failures = 0;
  for (std::uint64_t c = 0; c < kClasses; ++c) {
    Rng rng = InstanceRng(seed, 7, c);
    const std::size_t n = Between(rng, 1, 5);
    const std::size_t rows = Between(rng, 1, 12);
    const FunctionClass f = GenRandom(n, rows, 4, rng.Next());
    std::size_t prev[3] = {n + 1, n + 1, n + 1};
    for (const Rational& g : gammas) {
      const DimensionResult dv = FatV(f, g);
      const DimensionResult df = Fat(f, g);
      const DimensionResult ds = Sfat(f, g);
      if (dv.size != oracle::FatV(f, g)) ++mismatches;
      if (df.size != oracle::Fat(f, g)) ++mismatches;
      if (ds.size != oracle::Sfat(f, g)) ++mismatches;
      for (const DimensionResult* r : {&dv, &df, &ds}) {
        if (!VerifyWitness(f, g, r->witness) || r->witness.size() != r->size) {
          ++witness_failures;
        }
      }
      if (ds.size > df.size || dv.size > df.size) ++order_failures;
      const std::size_t now[3] = {dv.size, df.size, ds.size};
      for (int k = 0; k < 3; ++k) {
        if (now[k] > prev[k]) ++order_failures;
        prev[k] = now[k];
      }
    }
  }
  return {mismatches == 0 && order_failures == 0 && witness_failures == 0,
          "classes=" + std::to_string(kClasses) +
              " oracle_mismatches=" + std::to_string(mismatches) +
              " order_failures=" + std::to_string(order_failures) +
              " witness_failures=" + std::to_string(witness_failures)};
}

// 8. Packing and proper covering sandwich.
Outcome PackingSandwich(std::uint64_t seed) {
  constexpr std::uint64_t kMatrices = 100;
  const Rational epsilons[] = {Rational(1, 5), Rational(2, 5)};
  std::uint64_t failures = 0;
  std::uint64_t oracle_mismatches = 0;
  std::uint64_t oracle_checked = 0;
  for (std::uint64_t i = 0; i < kMatrices; ++i) {
    Rng rng = InstanceRng(seed, 8, i);
    const std::size_t cols = Between(rng, 1, 6);
    const std::size_t rows = Between(rng, 1, 20);
    const std::int64_t b = static_cast<std::int64_t>(Between(rng, 2, 5));
    const ValueMatrix s = GenRandom(cols, rows, b, rng.Next()).values();
    for (const Rational& eps : epsilons) {
      const SandwichReport r = SandwichCheck(s, eps);
      if (!r.holds) ++failures;
      if (rows <= 12) {
        ++oracle_checked;
        if (r.packing != oracle::PackingNumber(s, eps) ||
            r.packing_double !=
                oracle::PackingNumber(s, Rational(2) * eps) ||
            r.cover != oracle::ProperCoverNumber(s, eps)) {
          ++oracle_mismatches;
        }
      }
    }
  }
  return {failures == 0 && oracle_mismatches == 0,
          "matrices=" + std::to_string(kMatrices) +
              " failures=" + std::to_string(failures) +
              " oracle_checked=" + std::to_string(oracle_checked) +
              " oracle_mismatches=" + std::to_string(oracle_mismatches)};
}

// 9. Packing number certificates.
Outcome PackingBounds(std::uint64_t seed) {
  constexpr std::uint64_t kClasses = 50;
  const Rational eps(1, 2);
  const Rational alpha(1, 10);
  // A class on grid 1/b also lies on grid 1/12 for b in {3, 4}; 12 > 4/eps
  // makes the integral bound applicable.
  constexpr std::int64_t kFineGrid = 12;
  const Rational fat_scale =
      eps / Rational(2) - Rational(2, kFineGrid);
  std::uint64_t violations = 0;
  double min_gap = 1e300;
  for (std::uint64_t c = 0; c < kClasses; ++c) {
    const std::int64_t b = (c % 2 == 0) ? 3 : 4;
    FunctionClass f;
    std::size_t d_v = 0;
    std::size_t d_f = 0;
    for (std::uint64_t attempt = 0;; ++attempt) {
      Rng rng = InstanceRng(seed, 9, c * 1000 + attempt);
      const std::size_t n = Between(rng, 1, 5);
      f = GenRandom(n, Between(rng, 2, 12), b, rng.Next());
      d_v = FatV(f, eps / Rational(2) - alpha).size;
      d_f = Fat(f, fat_scale).size;
      if (d_v >= 1 && d_f >= 1) break;
    }
    const std::size_t m = PackingExact(f.values(), eps).size;
    const double lnm = std::log(static_cast<double>(m));
    const LogNumber fatv_bound =
        PackBoundFatV(eps, alpha, b, static_cast<std::int64_t>(d_v));
    const PackBoundFatResult fat_bound =
        PackBoundFat(eps, kFineGrid, static_cast<std::int64_t>(f.num_points()),
                     static_cast<std::int64_t>(d_f));
    if (!(lnm <= fatv_bound.log())) ++violations;
    if (!(BigInt(m) <= fat_bound.exact)) ++violations;
    min_gap = std::min(min_gap, fatv_bound.log() - lnm);
  }
  return {violations == 0, "classes=" + std::to_string(kClasses) +
                               " violations=" + std::to_string(violations) +
                               " min_log_gap=" + Num(min_gap)};
}

// 10. Quantization and loss-class cover constructions.
Outcome CoverConstructions(std::uint64_t seed) {
  constexpr std::uint64_t kInstances = 100;
  const Rational epsilons[] = {Rational(1, 5), Rational(1, 4), Rational(2, 5),
                               Rational(1, 2)};
  std::uint64_t quant_fail = 0;
  std::uint64_t loss_fail = 0;
  for (std::uint64_t i = 0; i < kInstances; ++i) {
    Rng rng = InstanceRng(seed, 10, i);
    const Rational eps = epsilons[rng.Below(4)];
    const Rational alpha =
        eps / Rational(static_cast<std::int64_t>(Between(rng, 3, 6)));
    const ValueMatrix s =
        GenRandom(Between(rng, 1, 5), Between(rng, 1, 12),
                  static_cast<std::int64_t>(Between(rng, 1, 6)), rng.Next())
            .values();
    if (!QuantizationCoverCheck(s, eps, alpha)) ++quant_fail;
  }
  for (std::uint64_t i = 0; i < kInstances; ++i) {
    Rng rng = InstanceRng(seed, 10, kInstances + i);
    const Rational eps = epsilons[rng.Below(4)];
    const FunctionClass f =
        GenRandom(Between(rng, 1, 5), Between(rng, 1, 10),
                  static_cast<std::int64_t>(Between(rng, 2, 5)), rng.Next());
    LabeledSample z(Between(rng, 1, 6));
    for (auto& p : z) {
      p.point = rng.Below(f.num_points());
      p.label = Rational(static_cast<std::int64_t>(rng.Below(5)), 4);
    }
    if (!LossClassCoverCheck(f, z, eps)) ++loss_fail;
  }
  return {quant_fail == 0 && loss_fail == 0,
          "instances=" + std::to_string(kInstances) + "+" +
              std::to_string(kInstances) +
              " quantization_failures=" + std::to_string(quant_fail) +
              " loss_class_failures=" + std::to_string(loss_fail)};
}

// 11. Inverse sample size guarantee.
Outcome InverseSampleSizeGuarantee(std::uint64_t seed) {
  constexpr std::uint64_t kTuples = 1000;
  std::uint64_t violations = 0;
  for (std::uint64_t i = 0; i < kTuples; ++i) {
    Rng rng = InstanceRng(seed, 11, i);
    const double y1 = 1.0 + 99.0 * rng.Uniform01();
    const double y2 = 0.01 + 9.99 * rng.Uniform01();
    const double y3 = 1.0 + 99.0 * rng.Uniform01();
    const double y4 = 0.01 + 0.99 * rng.Uniform01();
    const double delta = 0.001 + 0.998 * rng.Uniform01();
    const std::int64_t m = InverseSampleSize(y1, y2, y3, y4, delta);
    if (!(InverseSampleSizeLhs(y1, y2, y3, y4, m) <= delta)) ++violations;
  }
  return {violations == 0, "tuples=" + std::to_string(kTuples) +
                               " violations=" + std::to_string(violations)};
}

// 12. Uniform convergence failure on the truncated counterexample.
Outcome GcCounterexample(std::uint64_t seed) {
  constexpr std::size_t kM = 5;
  constexpr std::uint64_t kSamples = 1000;
  const Rational eps(1, 5);
  const std::size_t n =
      (kM + 3) * (kM + 3) *
      static_cast<std::size_t>(std::ceil(std::exp(eps.to_double() * kM)));
  const ProductClass f = GcCounterexampleProduct(eps, n);
  const DiscreteDistribution d = DiscreteDistribution::Uniform(n);
  std::uint64_t failures = 0;
  BigRational min_dev = 1;
  auto check = [&](const std::vector<PointIndex>& sample) {
    const std::vector<Rational> adv = GcAdversarialFunction(eps, n, sample);
    for (std::size_t p = 0; p < n; ++p) {
      const auto& vals = f.values(p);
      if (std::find(vals.begin(), vals.end(), adv[p]) == vals.end()) {
        ++failures;
        return;
      }
    }
    const BigRational dev = Deviation(adv, d, sample);
    min_dev = std::min(min_dev, dev);
    if (!(dev > eps.to_big())) ++failures;
  };
  std::vector<PointIndex> first(kM);
  for (std::size_t i = 0; i < kM; ++i) first[i] = i;
  check(first);
  for (std::uint64_t s = 0; s < kSamples; ++s) {
    Rng rng = InstanceRng(seed, 12, s);
    std::vector<PointIndex> sample(kM);
    for (auto& x : sample) x = d.Sample(rng);
    check(sample);
  }
  return {failures == 0,
          "points=" + std::to_string(n) +
              " samples=" + std::to_string(kSamples + 1) +
              " failures=" + std::to_string(failures) +
              " min_deviation=" + ToDecimal(min_dev, 6)};
}

// 13. Band classes.
Outcome BandClasses(std::uint64_t seed) {
  constexpr std::size_t kN = 10;
  const Rational eps(1, 5);
  const FunctionClass two = GenBandClass(eps, kN, BandLevels::kTwo);
  bool pass = true;
  std::string detail;
  for (std::size_t m = 1; m <= 3; ++m) {
    Rng rng = InstanceRng(seed, 13, m);
    std::vector<Rational> w(kN);
    std::int64_t total = 0;
    std::vector<std::int64_t> raw(kN);
    for (auto& x : raw) total += (x = static_cast<std::int64_t>(rng.Below(5)) + 1);
    for (std::size_t i = 0; i < kN; ++i) w[i] = Rational(raw[i], total);
    const Rational eps_list[] = {eps};
    const GcDeviationResult r =
        GcDeviationExhaustive(two, DiscreteDistribution(w), m, eps_list);
    pass = pass && r.max_deviation <= eps.to_big() && r.exceed_exact[0] == 0;
    detail += "m=" + std::to_string(m) +
              ":max_dev=" + ToDecimal(r.max_deviation, 6) + " ";
  }
  constexpr std::size_t kThreeN = 5;
  constexpr std::uint64_t kDists = 100;
  const FunctionClass three = GenBandClass(eps, kThreeN, BandLevels::kThree);
  std::vector<Rational> half(kThreeN, Rational(1, 2));
  std::uint64_t failures = 0;
  BigRational worst = 0;
  for (std::uint64_t i = 0; i < kDists; ++i) {
    Rng rng = InstanceRng(seed, 13, 100 + i);
    std::vector<LabeledPoint> support;
    std::vector<std::int64_t> raw;
    std::int64_t total = 0;
    const std::size_t size = Between(rng, 1, 8);
    for (std::size_t j = 0; j < size; ++j) {
      const PointIndex x = rng.Below(kThreeN);
      const std::size_t row = rng.Below(three.num_functions());
      support.push_back({x, three.value(row, x)});
      raw.push_back(static_cast<std::int64_t>(rng.Below(9)) + 1);
      total += raw.back();
    }
    std::vector<Rational> w;
    for (std::int64_t r : raw) w.push_back(Rational(r, total));
    const BigRational e = EvalError(half, JointSample(support, w));
    worst = std::max(worst, e);
    if (e > eps.to_big()) ++failures;
  }
  pass = pass && failures == 0;
  detail += "three_level_dists=" + std::to_string(kDists) +
            " failures=" + std::to_string(failures) +
            " worst_er=" + ToDecimal(worst, 6);
  return {pass, detail};
}

// Tiny class, f* drawn from it, and label noise of the given mass.
JointSample NoisyTarget(const FunctionClass& f, Rng& rng,
                        const Rational& noise) {
  const std::size_t target = rng.Below(f.num_functions());
  std::vector<std::int64_t> raw(f.num_points());
  std::int64_t total = 0;
  for (auto& x : raw) total += (x = static_cast<std::int64_t>(rng.Below(4)) + 1);
  std::vector<LabeledPoint> support;
  std::vector<Rational> w;
  for (PointIndex x = 0; x < f.num_points(); ++x) {
    const Rational y = f.value(target, x);
    const Rational px(raw[x], total);
    support.push_back({x, y});
    w.push_back(px * (Rational(1) - noise));
    support.push_back({x, y >= Rational(1, 2) ? Rational(0) : Rational(1)});
    w.push_back(px * noise);
  }
  return JointSample(support, w);
}

// 14. Cover-based agnostic learner.
Outcome CoverLearner(std::uint64_t seed) {
  constexpr std::uint64_t kRuns = 200;
  const Rational eps(1, 2);
  const Rational delta(1, 2);
  const Rational kappa(2, 5);
  std::vector<char> ok(kRuns, 0);
  std::vector<std::int64_t> totals(kRuns, 0);
  ParallelFor(kRuns, [&](std::size_t run) {
    Rng rng = InstanceRng(seed, 14, run);
    FunctionClass f = GenRandom(3, 4, 2, rng.Next());
    const JointSample p = NoisyTarget(f, rng, eps / Rational(4));
    const Rational scale_gamma =
        (Rational(1) / Rational((Rational(1) / (eps * kappa)).ceil())) /
        Rational(13);
    const std::size_t d = Fat(f, eps - Rational(13) * scale_gamma).size;
    const CoverLearnerPlan plan =
        PlanCoverLearner(eps, delta, kappa, static_cast<std::int64_t>(d));
    totals[run] = plan.total;
    const AgnosticOutput out = AgnosticLearnSampled(f, p, plan, rng);
    ok[run] = EvalError(out.hypothesis, p) <=
              InfError(f, p).value + eps.to_big();
  });
  std::int64_t good = 0;
  for (char c : ok) good += c;
  const double need =
      (1 - delta.to_double()) * kRuns -
      3 * std::sqrt(kRuns * delta.to_double() * (1 - delta.to_double()));
  const auto [lo, hi] = std::minmax_element(totals.begin(), totals.end());
  return {static_cast<double>(good) >= need,
          "runs=" + std::to_string(kRuns) + " successes=" + std::to_string(good) +
              " required=" + Num(need, 3) +
              " sample_size=" + std::to_string(*lo) + ".." +
              std::to_string(*hi)};
}

// 15. Empirical risk minimization at the uniform convergence sizes.
Outcome ErmLearnerCheck(std::uint64_t seed) {
  constexpr std::uint64_t kRuns = 100;
  const Rational eps(1, 2);
  const Rational delta(1, 2);
  const Rational kappa(1, 10);
  const Rational scale = (Rational(1, 4) - kappa) * eps;
  // Tiny class with fat and fatV both equal to 1 at the working scale.
  FunctionClass f;
  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng rng = InstanceRng(seed, 15, 1000000 + attempt);
    f = GenRandom(3, 3, 2, rng.Next());
    if (Fat(f, scale).size == 1 && FatV(f, scale).size == 1) break;
  }
  const std::int64_t d = 1;
  const std::int64_t sizes[] = {GcSampleFat(eps, delta, d, kappa).m,
                                GcSampleFatV(eps, delta, d, kappa).m};
  bool pass = true;
  std::string detail;
  for (int which = 0; which < 2; ++which) {
    const std::int64_t m = sizes[which];
    std::vector<char> ok(kRuns, 0);
    ParallelFor(kRuns, [&](std::size_t run) {
      Rng rng = InstanceRng(seed, 15, static_cast<std::uint64_t>(which) * kRuns + run);
      // Arbitrary joint distribution: two random labels per point.
      std::vector<LabeledPoint> support;
      std::vector<std::int64_t> raw;
      std::int64_t total = 0;
      for (PointIndex x = 0; x < f.num_points(); ++x) {
        for (int k = 0; k < 2; ++k) {
          support.push_back({x, Rational(static_cast<std::int64_t>(rng.Below(5)), 4)});
          raw.push_back(static_cast<std::int64_t>(rng.Below(9)) + 1);
          total += raw.back();
        }
      }
      std::vector<Rational> w;
      for (std::int64_t r : raw) w.push_back(Rational(r, total));
      const JointSample p(support, w);
      const auto counts = p.SampleCounts(m, rng);
      const std::size_t row = ErmLearnerCounts(f, p, counts);
      ok[run] = EvalError(f.values().row_values(row), p) <=
                InfError(f, p).value + eps.to_big();
    });
    std::int64_t good = 0;
    for (char c : ok) good += c;
    const double need = (1 - delta.to_double()) * kRuns;
    pass = pass && static_cast<double>(good) >= need;
    detail += std::string(which == 0 ? "fat" : "fatv") +
              ":m=" + std::to_string(m) + ",successes=" + std::to_string(good) +
              "/" + std::to_string(kRuns) + " ";
  }
  detail.pop_back();
  return {pass, detail};
}

using CriterionFn = Outcome (*)(std::uint64_t);

struct CriterionDef {
  const char* name;
  CriterionFn fn;
  double time_limit;
};

Outcome Reproducibility(std::uint64_t seed);

const CriterionDef kCriteria[kNumCriteria] = {
    {"aggregation_inequality_sweep", AggregationSweep, 10},
    {"cwdc_mistake_bound_exact", CwdcMistakeBound, 30},
    {"expected_error_bound_exhaustive", ExpectedErrorExhaustive, 10},
    {"expected_error_bound_monte_carlo", ExpectedErrorMc, 120},
    {"two_value_lower_bound", TwoValueLowerBound, 60},
    {"orientation_out_degree", OrientationBound, 30},
    {"dimension_cross_check", DimensionCrossCheck, 120},
    {"packing_cover_sandwich", PackingSandwich, 60},
    {"packing_number_bounds", PackingBounds, 60},
    {"cover_constructions", CoverConstructions, 60},
    {"inverse_sample_size", InverseSampleSizeGuarantee, 5},
    {"gc_counterexample", GcCounterexample, 60},
    {"band_classes", BandClasses, 30},
    {"cover_agnostic_learner", CoverLearner, 300},
    {"erm_learner", ErmLearnerCheck, 300},
    {"reproducibility", Reproducibility, 120},
};

// 16. Seeded checks replay identically, including under a different
// worker count.
Outcome Reproducibility(std::uint64_t seed) {
  const int replay[] = {1, 6, 11, 12, 13};
  std::uint64_t differences = 0;
  const std::size_t jobs = MaxJobs();
  for (int id : replay) {
    const Outcome a = kCriteria[id - 1].fn(seed);
    const Outcome b = kCriteria[id - 1].fn(seed);
    if (a.pass != b.pass || a.detail != b.detail) ++differences;
  }
  const FunctionClass f = GenBinaryCube(2);
  const AggregatorConfig cfg{Rational(1, 10), Rational(1, 20)};
  auto run = [&](std::size_t workers) {
    SetMaxJobs(workers);
    const GameResult r =
        GameMc(f, DiscreteDistribution::Uniform(2), 3,
               AggregatorPredictor(f, cfg), 2000, seed);
    std::string out;
    for (const TargetError& e : r.per_target) {
      out += Num(e.estimate, 12) + "," + Num(e.std_error, 12) + ";";
    }
    return out;
  };
  const std::string one = run(1);
  const std::string two = run(2);
  SetMaxJobs(jobs);
  if (one != two) ++differences;
  return {differences == 0,
          "replayed_checks=5 game_worker_counts=1,2 differences=" +
              std::to_string(differences)};
}

}  // namespace

CriterionResult RunCriterion(int id, std::uint64_t seed) {
  Require(id >= 1 && id <= kNumCriteria, "criterion id must be in 1..16");
  const CriterionDef& def = kCriteria[id - 1];
  CriterionResult r;
  r.id = id;
  r.name = def.name;
  r.time_limit = def.time_limit;
  const auto start = std::chrono::steady_clock::now();
  try {
    const Outcome o = def.fn(seed);
    r.pass = o.pass;
    r.detail = o.detail;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
  if (r.seconds > r.time_limit) {
    r.pass = false;
    r.detail += " time_limit_exceeded";
  }
  return r;
}

std::vector<CriterionResult> RunAcceptance(std::uint64_t seed,
                                           const std::vector<int>& ids) {
  std::vector<int> todo = ids;
  if (todo.empty()) {
    for (int i = 1; i <= kNumCriteria; ++i) todo.push_back(i);
  }
  std::vector<CriterionResult> out;
  for (int id : todo) out.push_back(RunCriterion(id, seed));
  return out;
}

std::string ResultsCsv(const std::vector<CriterionResult>& results) {
  std::string out = "id,name,pass,detail\n";
  for (const CriterionResult& r : results) {
    out += std::to_string(r.id) + "," + r.name + "," +
           (r.pass ? "true" : "false") + ",\"" + r.detail + "\"\n";
  }
  return out;
}

std::string ResultsJson(const std::vector<CriterionResult>& results,
                        std::uint64_t seed) {
  nlohmann::ordered_json j;
  j["seed"] = seed;
  std::size_t passed = 0;
  j["criteria"] = nlohmann::ordered_json::array();
  for (const CriterionResult& r : results) {
    nlohmann::ordered_json c;
    c["id"] = r.id;
    c["name"] = r.name;
    c["pass"] = r.pass;
    c["detail"] = r.detail;
    j["criteria"].push_back(c);
    passed += r.pass ? 1 : 0;
  }
  j["passed"] = passed;
  j["total"] = results.size();
  return j.dump(2) + "\n";
}

std::string ResultsTable(const std::vector<CriterionResult>& results) {
  std::ostringstream ss;
  std::size_t passed = 0;
  for (const CriterionResult& r : results) {
    char line[160];
    std::snprintf(line, sizeof(line), "[%s] %2d %-34s %8.2fs (limit %.0fs)  ",
                  r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                  r.time_limit);
    ss << line << r.detail << "\n";
    passed += r.pass ? 1 : 0;
  }
  ss << passed << "/" << results.size() << " criteria passed\n";
  return ss.str();
}

}  // namespace scaledim
