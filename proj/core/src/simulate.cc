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

#include "scaledim/simulate.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "scaledim/error.h"
#include "scaledim/guard.h"
#include "scaledim/packing.h"
#include "scaledim/parallel.h"
#include "scaledim/rng.h"

namespace scaledim {
namespace {

// Welford running mean and variance.
class Moments {
 public:
  void Add(double x) {
    ++n_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(n_);
    m2_ += delta * (x - mean_);
  }
  double mean() const { return mean_; }
  double std_error() const {
    if (n_ < 2) return 0.0;
    return std::sqrt(m2_ / static_cast<double>(n_ - 1) /
                     static_cast<double>(n_));
  }
  std::uint64_t count() const { return n_; }

 private:
  std::uint64_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

BigRational AbsBig(const BigRational& x) { return x < 0 ? BigRational(-x) : x; }

double ToDouble(const BigRational& x) {
  return static_cast<double>(x);
}

LabeledSample LabelBy(const FunctionClass& f, std::size_t row,
                      std::span<const PointIndex> xs) {
  LabeledSample s;
  s.reserve(xs.size());
  for (PointIndex x : xs) s.push_back({x, f.value(row, x)});
  return s;
}

std::size_t WorstIndex(const std::vector<TargetError>& errs) {
  std::size_t worst = 0;
  for (std::size_t i = 1; i < errs.size(); ++i) {
    const bool bigger = errs[i].exact
                            ? errs[i].exact_error > errs[worst].exact_error
                            : errs[i].estimate > errs[worst].estimate;
    if (bigger) worst = i;
  }
  return worst;
}

// Sup deviation from per-point sample counts, exactly. With L the common
// denominator of D, the deviation of row f is
// |sum_p f_p (c_p L - m D_p L)| / (den m L).
BigRational SupDeviationCounts(const FunctionClass& f,
                               const DiscreteDistribution& d,
                               std::span<const std::int64_t> counts,
                               std::int64_t m) {
  std::int64_t l = 1;
  for (const Rational& w : d.weights()) l = Lcm(l, w.den());
  const std::size_t n = f.num_points();
  const double bound = static_cast<double>(n) * static_cast<double>(f.denominator()) *
                       static_cast<double>(m) * static_cast<double>(l);
  if (bound > 1e36) {
    Fail(ErrorCode::kOverflow, "deviation magnitudes exceed 128 bits");
  }
  std::vector<__int128> w(n);
  for (std::size_t p = 0; p < n; ++p) {
    const Rational& dp = d.weight(p);
    w[p] = static_cast<__int128>(counts[p]) * l -
           static_cast<__int128>(m) * (dp.num() * (l / dp.den()));
  }
  __int128 best = 0;
  for (std::size_t i = 0; i < f.num_functions(); ++i) {
    __int128 s = 0;
    for (std::size_t p = 0; p < n; ++p) s += w[p] * f.numerator(i, p);
    if (s < 0) s = -s;
    best = std::max(best, s);
  }
  auto to_big = [](__int128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v)
                              : static_cast<unsigned __int128>(v);
    BigInt r = static_cast<std::uint64_t>(u >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(u);
    return neg ? BigInt(-r) : r;
  };
  return BigRational(to_big(best),
                     BigInt(f.denominator()) * BigInt(m) * BigInt(l));
}

std::vector<std::int64_t> PointCounts(std::size_t n,
                                      std::span<const PointIndex> sample) {
  std::vector<std::int64_t> c(n, 0);
  for (PointIndex x : sample) {
    Require(x < n, "sample point out of range");
    ++c[x];
  }
  return c;
}

// Labelled examples aggregated as (point, label, count).
struct WeightedLabel {
  PointIndex point;
  Rational label;
  std::int64_t count;
};

// Minimum proper cover of f on the points with positive weight, then the
// member with least absolute error on `labelled`, evaluated at `query`.
Rational CoverSelect(const FunctionClass& f,
                     std::span<const std::int64_t> point_weights,
                     std::span<const WeightedLabel> labelled,
                     const Rational& radius, PointIndex query) {
  Require(f.num_functions() > 0, "class must be nonempty");
  Require(radius >= Rational(0), "cover radius must be non-negative");
  std::vector<PointIndex> pts;
  std::vector<std::int64_t> weights;
  for (PointIndex x = 0; x < point_weights.size(); ++x) {
    if (point_weights[x] > 0) {
      pts.push_back(x);
      weights.push_back(point_weights[x]);
    }
  }
  Require(point_weights[query] > 0, "query point must carry weight");
  // Canonical order of the restricted rows makes the cover, and hence the
  // prediction, invariant under permutations of the sample.
  std::set<std::vector<std::int64_t>> distinct;
  for (std::size_t i = 0; i < f.num_functions(); ++i) {
    std::vector<std::int64_t> row;
    for (PointIndex x : pts) row.push_back(f.numerator(i, x));
    distinct.insert(std::move(row));
  }
  const std::vector<std::vector<std::int64_t>> rows(distinct.begin(),
                                                     distinct.end());
  const ValueMatrix m = ValueMatrix::FromRows(f.denominator(), rows);
  const PackingResult cover = CoverProperExact(m, radius, weights);
  auto col = [&](PointIndex x) {
    return static_cast<std::size_t>(
        std::lower_bound(pts.begin(), pts.end(), x) - pts.begin());
  };
  std::size_t best = cover.witness.front();
  BigRational best_loss;
  bool have = false;
  for (std::size_t c : cover.witness) {
    BigRational loss = 0;
    for (const WeightedLabel& z : labelled) {
      loss += BigRational(z.count) *
              Abs(m.value(c, col(z.point)) - z.label).to_big();
    }
    if (!have || loss < best_loss) {
      have = true;
      best = c;
      best_loss = loss;
    }
  }
  return m.value(best, col(query));
}

std::vector<Rational> HypothesisFromCounts(
    const FunctionClass& f, std::vector<std::int64_t> base_weights,
    std::span<const WeightedLabel> labelled, const Rational& radius) {
  std::vector<Rational> h;
  h.reserve(f.num_points());
  for (PointIndex beta = 0; beta < f.num_points(); ++beta) {
    ++base_weights[beta];
    h.push_back(CoverSelect(f, base_weights, labelled, radius, beta));
    --base_weights[beta];
  }
  return h;
}

std::size_t SelectByValidation(
    const std::vector<std::vector<Rational>>& candidates,
    std::span<const WeightedLabel> validation) {
  std::size_t best = 0;
  BigRational best_err;
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    BigRational err = 0;
    for (const WeightedLabel& z : validation) {
      err += BigRational(z.count) *
             Abs(candidates[j][z.point] - z.label).to_big();
    }
    if (j == 0 || err < best_err) {
      best = j;
      best_err = err;
    }
  }
  return best;
}

std::vector<WeightedLabel> Aggregate(std::span<const LabeledPoint> sample) {
  std::map<std::pair<PointIndex, Rational>, std::int64_t> counts;
  for (const LabeledPoint& z : sample) ++counts[{z.point, z.label}];
  std::vector<WeightedLabel> out;
  for (const auto& [key, c] : counts) out.push_back({key.first, key.second, c});
  return out;
}

std::vector<WeightedLabel> FromCounts(const JointSample& p,
                                      std::span<const std::int64_t> counts) {
  std::vector<WeightedLabel> out;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] > 0) {
      out.push_back({p.support()[i].point, p.support()[i].label, counts[i]});
    }
  }
  return out;
}

}  // namespace

Predictor AggregatorPredictor(const FunctionClass& f,
                              const AggregatorConfig& cfg) {
  cfg.Validate();
  return [f, cfg](std::span<const LabeledPoint> prefix, PointIndex query) {
    return AggregatePredict(f, cfg, prefix, query).prediction;
  };
}

Predictor AggregatorPredictor(const ProductClass& f,
                              const AggregatorConfig& cfg) {
  cfg.Validate();
  return [f, cfg](std::span<const LabeledPoint> prefix, PointIndex query) {
    return AggregatePredict(f, cfg, prefix, query).prediction;
  };
}

Predictor BinarySearchPredictor(const FunctionClass& f, const Rational& gamma,
                                std::size_t depth) {
  return [f, gamma, depth](std::span<const LabeledPoint> prefix,
                           PointIndex query) {
    return BinarySearchPredict(f, gamma, depth, prefix, query);
  };
}

GameResult GameExhaustive(const FunctionClass& f, const DiscreteDistribution& d,
                          std::size_t m, const Predictor& predictor) {
  Require(m >= 1, "m must be at least 1");
  Require(d.size() == f.num_points(),
          "distribution must cover the class domain");
  const std::size_t n = f.num_points();
  guard::Check(guard::SaturatingPow(n, m), guard::kExhaustiveMaxSequences,
               "exhaustive game sequences");
  // Sequences with positive probability, in lexicographic order.
  std::vector<std::vector<PointIndex>> seqs;
  std::vector<BigRational> probs;
  std::vector<PointIndex> x(m, 0);
  while (true) {
    BigRational pr = 1;
    for (PointIndex p : x) pr *= d.weight(p).to_big();
    if (pr != 0) {
      seqs.push_back(x);
      probs.push_back(pr);
    }
    std::size_t i = m;
    while (i > 0 && ++x[i - 1] == n) x[--i] = 0;
    if (i == 0) break;
  }
  GameResult r;
  r.exhaustive = true;
  r.per_target.resize(f.num_functions());
  ParallelFor(f.num_functions(), [&](std::size_t t) {
    BigRational total = 0;
    for (std::size_t s = 0; s < seqs.size(); ++s) {
      const LabeledSample z = LabelBy(f, t, seqs[s]);
      const Rational pred = predictor(std::span(z).first(m - 1), z.back().point);
      total += probs[s] * Abs(pred - z.back().label).to_big();
    }
    TargetError& e = r.per_target[t];
    e.target = t;
    e.exact = true;
    e.exact_error = total;
    e.estimate = ToDouble(total);
  });
  r.trials = seqs.size();
  r.worst = WorstIndex(r.per_target);
  return r;
}

GameResult GameMc(const FunctionClass& f, const DiscreteDistribution& d,
                  std::size_t m, const Predictor& predictor,
                  std::uint64_t trials, std::uint64_t seed) {
  Require(m >= 1, "m must be at least 1");
  Require(trials >= 1, "trials must be at least 1");
  Require(d.size() == f.num_points(),
          "distribution must cover the class domain");
  GameResult r;
  r.trials = trials;
  r.seed = seed;
  r.per_target.resize(f.num_functions());
  ParallelFor(f.num_functions(), [&](std::size_t t) {
    Moments mom;
    std::vector<PointIndex> x(m);
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
      Rng rng = Rng::ForTrial(seed, t, trial);
      for (auto& p : x) p = d.Sample(rng);
      const LabeledSample z = LabelBy(f, t, x);
      const Rational pred =
          predictor(std::span(z).first(m - 1), z.back().point);
      mom.Add(Abs(pred - z.back().label).to_double());
    }
    TargetError& e = r.per_target[t];
    e.target = t;
    e.estimate = mom.mean();
    e.std_error = mom.std_error();
  });
  r.worst = WorstIndex(r.per_target);
  return r;
}

Estimate GameMcRandomTarget(const ProductClass& f,
                            const DiscreteDistribution& d, std::size_t m,
                            const Predictor& predictor, std::uint64_t trials,
                            std::uint64_t seed) {
  Require(m >= 1, "m must be at least 1");
  Require(trials >= 1, "trials must be at least 1");
  Require(d.size() == f.num_points(),
          "distribution must cover the class domain");
  std::vector<double> errs(trials);
  ParallelFor(trials, [&](std::size_t trial) {
    Rng rng = Rng::ForTrial(seed, 0, trial);
    const std::vector<Rational> target = f.SampleFunction(rng);
    LabeledSample z(m);
    for (auto& p : z) {
      p.point = d.Sample(rng);
      p.label = target[p.point];
    }
    const Rational pred = predictor(std::span(z).first(m - 1), z.back().point);
    errs[trial] = Abs(pred - z.back().label).to_double();
  });
  Moments mom;
  for (double e : errs) mom.Add(e);
  return {mom.mean(), mom.std_error(), trials};
}

Rational CwdcPermutationExhaustive(const TernaryClass& g,
                                   std::span<const PointIndex> x,
                                   std::size_t target) {
  const std::size_t m = x.size();
  Require(m >= 1, "need at least one point");
  Require(target < g.num_functions(), "target row out of range");
  guard::Check(guard::SaturatingFactorial(m), guard::kExhaustiveMaxPermutations,
               "orderings to enumerate");
  for (PointIndex p : x) Require(p < g.num_points(), "point out of range");
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::map<std::vector<PointIndex>, int> memo;
  std::int64_t mistakes = 0;
  std::int64_t total = 0;
  do {
    std::vector<PointIndex> seq(m);
    for (std::size_t i = 0; i < m; ++i) seq[i] = x[perm[i]];
    ++total;
    auto it = memo.find(seq);
    if (it == memo.end()) {
      std::vector<TernaryLabel> prefix;
      for (std::size_t i = 0; i + 1 < m; ++i) {
        prefix.push_back({seq[i], g.at(target, seq[i])});
      }
      const Ternary truth = g.at(target, seq.back());
      int mistake = 0;
      if (truth != Ternary::kStar) {
        const int pred = CwdcPredict(g, prefix, seq.back());
        mistake = pred != (truth == Ternary::kOne ? 1 : 0) ? 1 : 0;
      }
      it = memo.emplace(seq, mistake).first;
    }
    mistakes += it->second;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Rational(mistakes, total);
}

BigRational Deviation(std::span<const Rational> f,
                      const DiscreteDistribution& d,
                      std::span<const PointIndex> sample) {
  Require(f.size() == d.size(), "function and distribution sizes differ");
  Require(!sample.empty(), "sample must be nonempty");
  BigRational mean = 0;
  for (PointIndex x : sample) {
    Require(x < f.size(), "sample point out of range");
    mean += f[x].to_big();
  }
  mean /= static_cast<long long>(sample.size());
  BigRational expect = 0;
  for (std::size_t p = 0; p < f.size(); ++p) {
    expect += f[p].to_big() * d.weight(p).to_big();
  }
  return AbsBig(mean - expect);
}

BigRational SupDeviation(const FunctionClass& f, const DiscreteDistribution& d,
                         std::span<const PointIndex> sample) {
  Require(d.size() == f.num_points(), "distribution must cover the domain");
  Require(!sample.empty(), "sample must be nonempty");
  const auto counts = PointCounts(f.num_points(), sample);
  return SupDeviationCounts(f, d, counts,
                            static_cast<std::int64_t>(sample.size()));
}

BigRational SupDeviation(const ProductClass& f, const DiscreteDistribution& d,
                         std::span<const PointIndex> sample) {
  Require(d.size() == f.num_points(), "distribution must cover the domain");
  Require(!sample.empty(), "sample must be nonempty");
  const auto counts = PointCounts(f.num_points(), sample);
  const BigRational m = static_cast<long long>(sample.size());
  // The deviation is linear in f with per-point weight c_p/m - D_p, so each
  // sign is maximized coordinate by coordinate.
  BigRational hi = 0;
  BigRational lo = 0;
  for (std::size_t p = 0; p < f.num_points(); ++p) {
    const BigRational w =
        BigRational(counts[p]) / m - d.weight(p).to_big();
    const BigRational a = f.values(p).front().to_big() * w;
    const BigRational b = f.values(p).back().to_big() * w;
    hi += std::max(a, b);
    lo += std::min(a, b);
  }
  return std::max(hi, BigRational(-lo));
}

GcDeviationResult GcDeviationExhaustive(const FunctionClass& f,
                                        const DiscreteDistribution& d,
                                        std::size_t m,
                                        std::span<const Rational> eps) {
  Require(m >= 1, "m must be at least 1");
  Require(d.size() == f.num_points(), "distribution must cover the domain");
  const std::size_t n = f.num_points();
  guard::Check(guard::SaturatingPow(n, m), guard::kExhaustiveMaxSequences,
               "exhaustive sample sequences");
  GcDeviationResult r;
  r.exhaustive = true;
  r.eps.assign(eps.begin(), eps.end());
  r.exceed_exact.assign(eps.size(), 0);
  r.max_deviation = 0;
  BigRational mean = 0;
  std::vector<BigInt> factorial(m + 1, 1);
  for (std::size_t i = 1; i <= m; ++i) factorial[i] = factorial[i - 1] * i;
  std::vector<std::int64_t> counts(n, 0);
  // Multisets of size m as count vectors, with multinomial probabilities.
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t p,
                                                          std::size_t left) {
    if (p + 1 == n) {
      counts[p] = static_cast<std::int64_t>(left);
      BigRational pr = BigRational(factorial[m]);
      for (std::size_t q = 0; q < n; ++q) {
        pr /= BigRational(factorial[static_cast<std::size_t>(counts[q])]);
        for (std::int64_t c = 0; c < counts[q]; ++c) {
          pr *= d.weight(q).to_big();
        }
      }
      ++r.samples;
      if (pr == 0) return;
      const BigRational dev =
          SupDeviationCounts(f, d, counts, static_cast<std::int64_t>(m));
      r.max_deviation = std::max(r.max_deviation, dev);
      mean += pr * dev;
      for (std::size_t e = 0; e < eps.size(); ++e) {
        if (dev > eps[e].to_big()) r.exceed_exact[e] += pr;
      }
      return;
    }
    for (std::size_t c = 0; c <= left; ++c) {
      counts[p] = static_cast<std::int64_t>(c);
      rec(p + 1, left - c);
    }
  };
  rec(0, m);
  r.mean_deviation = ToDouble(mean);
  for (const auto& e : r.exceed_exact) r.exceed_estimate.push_back(ToDouble(e));
  r.exceed_std_error.assign(eps.size(), 0.0);
  return r;
}

GcDeviationResult GcDeviationMc(const FunctionClass& f,
                                const DiscreteDistribution& d, std::size_t m,
                                std::span<const Rational> eps,
                                std::uint64_t trials, std::uint64_t seed) {
  Require(m >= 1, "m must be at least 1");
  Require(trials >= 1, "trials must be at least 1");
  Require(d.size() == f.num_points(), "distribution must cover the domain");
  std::vector<BigRational> devs(trials);
  ParallelFor(trials, [&](std::size_t t) {
    Rng rng = Rng::ForTrial(seed, 0, t);
    std::vector<std::int64_t> counts(f.num_points(), 0);
    for (std::size_t i = 0; i < m; ++i) ++counts[d.Sample(rng)];
    devs[t] = SupDeviationCounts(f, d, counts, static_cast<std::int64_t>(m));
  });
  GcDeviationResult r;
  r.eps.assign(eps.begin(), eps.end());
  r.samples = trials;
  r.max_deviation = 0;
  Moments mean;
  std::vector<Moments> exceed(eps.size());
  for (const BigRational& dev : devs) {
    r.max_deviation = std::max(r.max_deviation, dev);
    mean.Add(ToDouble(dev));
    for (std::size_t e = 0; e < eps.size(); ++e) {
      exceed[e].Add(dev > eps[e].to_big() ? 1.0 : 0.0);
    }
  }
  r.mean_deviation = mean.mean();
  for (const Moments& e : exceed) {
    r.exceed_estimate.push_back(e.mean());
    r.exceed_std_error.push_back(e.std_error());
  }
  return r;
}

JointSample::JointSample(std::vector<LabeledPoint> support,
                         std::vector<Rational> weights)
    : support_(std::move(support)), dist_(std::move(weights)) {
  Require(support_.size() == dist_.size(),
          "joint sample needs one weight per support pair");
  for (const LabeledPoint& z : support_) {
    Require(z.label >= Rational(0) && z.label <= Rational(1),
            "labels must lie in [0,1]");
  }
}

LabeledPoint JointSample::Sample(Rng& rng) const {
  return support_[dist_.Sample(rng)];
}

std::vector<std::int64_t> JointSample::SampleCounts(std::int64_t n,
                                                    Rng& rng) const {
  return MultinomialCounts(n, dist_.weights(), rng);
}

std::vector<std::int64_t> MultinomialCounts(std::int64_t n,
                                            std::span<const Rational> probs,
                                            Rng& rng) {
  Require(n >= 0, "multinomial size must be non-negative");
  std::vector<std::int64_t> counts(probs.size(), 0);
  BigRational remaining_mass = 1;
  std::int64_t left = n;
  for (std::size_t i = 0; i < probs.size() && left > 0; ++i) {
    if (i + 1 == probs.size()) {
      counts[i] = left;
      break;
    }
    const BigRational p = probs[i].to_big();
    if (p == 0) continue;
    const double q = std::min(1.0, ToDouble(p / remaining_mass));
    std::binomial_distribution<std::int64_t> bin(left, q);
    counts[i] = bin(rng.engine());
    left -= counts[i];
    remaining_mass -= p;
    if (remaining_mass <= 0) break;
  }
  return counts;
}

BigRational EvalError(std::span<const Rational> h, const JointSample& p) {
  BigRational err = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const LabeledPoint& z = p.support()[i];
    Require(z.point < h.size(), "hypothesis undefined at a support point");
    err += p.weights()[i].to_big() * Abs(h[z.point] - z.label).to_big();
  }
  return err;
}

InfErrorResult InfError(const FunctionClass& f, const JointSample& p) {
  InfErrorResult r;
  for (std::size_t i = 0; i < f.num_functions(); ++i) {
    const BigRational e = EvalError(f.values().row_values(i), p);
    if (i == 0 || e < r.value) {
      r.value = e;
      r.argmin = i;
    }
  }
  return r;
}

Rational CoverLearnerQ(const FunctionClass& f,
                       std::span<const LabeledPoint> sample,
                       const Rational& radius) {
  Require(sample.size() >= 2 && sample.size() % 2 == 0,
          "cover learner needs an even sample of at least 2 points");
  ValidateSample(sample, f.num_points());
  const std::size_t k = sample.size() / 2;
  std::vector<std::int64_t> weights(f.num_points(), 0);
  for (const LabeledPoint& z : sample) ++weights[z.point];
  const auto labelled = Aggregate(sample.first(k));
  return CoverSelect(f, weights, labelled, radius, sample.back().point);
}

Rational CoverLearnerQ(const FunctionClass& f,
                       std::span<const LabeledPoint> sample,
                       const Rational& eps, const Rational& gamma) {
  Require(gamma > Rational(0), "gamma must be positive");
  return CoverLearnerQ(f, sample, eps - Rational(9) * gamma);
}

std::vector<Rational> CoverLearnerHypothesis(const FunctionClass& f,
                                             const JointSample& p,
                                             const CountedBlock& block,
                                             const Rational& radius) {
  Require(block.labelled.size() == p.size(), "one count per support pair");
  Require(block.unlabelled.size() == f.num_points(), "one count per point");
  std::vector<std::int64_t> weights = block.unlabelled;
  const auto labelled = FromCounts(p, block.labelled);
  for (const WeightedLabel& z : labelled) weights[z.point] += z.count;
  return HypothesisFromCounts(f, std::move(weights), labelled, radius);
}

AgnosticOutput AgnosticLearn(const FunctionClass& f,
                             std::span<const LabeledPoint> sample,
                             const CoverLearnerPlan& plan) {
  ValidateSample(sample, f.num_points());
  Require(plan.k >= 1 && plan.n1 >= 1 && plan.n2 >= 1, "invalid plan");
  if (static_cast<std::int64_t>(sample.size()) < plan.total) {
    Fail(ErrorCode::kInsufficientSample,
         "agnostic learner needs " + std::to_string(plan.total) +
             " examples, got " + std::to_string(sample.size()));
  }
  const std::size_t k = static_cast<std::size_t>(plan.k);
  const std::size_t block = 2 * k - 1;
  AgnosticOutput out;
  for (std::int64_t j = 0; j < plan.n1; ++j) {
    const auto part = sample.subspan(static_cast<std::size_t>(j) * block, block);
    const auto labelled = Aggregate(part.first(k));
    std::vector<std::int64_t> weights(f.num_points(), 0);
    for (const LabeledPoint& z : part) ++weights[z.point];
    out.candidates.push_back(
        HypothesisFromCounts(f, std::move(weights), labelled, plan.cover_radius));
  }
  const auto validation = Aggregate(sample.subspan(
      static_cast<std::size_t>(plan.n1) * block, static_cast<std::size_t>(plan.n2)));
  out.chosen = SelectByValidation(out.candidates, validation);
  out.hypothesis = out.candidates[out.chosen];
  return out;
}

AgnosticOutput AgnosticLearnSampled(const FunctionClass& f,
                                    const JointSample& p,
                                    const CoverLearnerPlan& plan, Rng& rng) {
  Require(plan.k >= 1 && plan.n1 >= 1 && plan.n2 >= 1, "invalid plan");
  for (const LabeledPoint& z : p.support()) {
    Require(z.point < f.num_points(), "support point out of range");
  }
  AgnosticOutput out;
  for (std::int64_t j = 0; j < plan.n1; ++j) {
    CountedBlock b;
    b.labelled = p.SampleCounts(plan.k, rng);
    const auto rest = p.SampleCounts(plan.k - 1, rng);
    b.unlabelled.assign(f.num_points(), 0);
    for (std::size_t i = 0; i < rest.size(); ++i) {
      b.unlabelled[p.support()[i].point] += rest[i];
    }
    out.candidates.push_back(
        CoverLearnerHypothesis(f, p, b, plan.cover_radius));
  }
  const auto validation = FromCounts(p, p.SampleCounts(plan.n2, rng));
  out.chosen = SelectByValidation(out.candidates, validation);
  out.hypothesis = out.candidates[out.chosen];
  return out;
}

std::size_t ErmLearner(const FunctionClass& f,
                       std::span<const LabeledPoint> sample,
                       const Rational& beta) {
  Require(beta > Rational(0), "beta must be positive");
  Require(!sample.empty(), "sample must be nonempty");
  ValidateSample(sample, f.num_points());
  const auto agg = Aggregate(sample);
  std::vector<LabeledPoint> support;
  std::vector<std::int64_t> counts;
  for (const WeightedLabel& z : agg) {
    support.push_back({z.point, z.label});
    counts.push_back(z.count);
  }
  // Weights only matter for sampling; use a uniform placeholder.
  const std::size_t n = support.size();
  JointSample p(std::move(support),
                std::vector<Rational>(n, Rational(1, static_cast<std::int64_t>(n))));
  return ErmLearnerCounts(f, p, counts);
}

std::size_t ErmLearnerCounts(const FunctionClass& f, const JointSample& p,
                             std::span<const std::int64_t> counts) {
  Require(counts.size() == p.size(), "one count per support pair");
  // Everything on one integer grid: L = lcm(class grid, label grids).
  std::int64_t l = f.denominator();
  for (const LabeledPoint& z : p.support()) l = Lcm(l, z.label.den());
  const std::int64_t scale = l / f.denominator();
  std::size_t best = 0;
  __int128 best_loss = 0;
  for (std::size_t i = 0; i < f.num_functions(); ++i) {
    __int128 loss = 0;
    for (std::size_t s = 0; s < p.size(); ++s) {
      if (counts[s] == 0) continue;
      const LabeledPoint& z = p.support()[s];
      const __int128 v = static_cast<__int128>(f.numerator(i, z.point)) * scale;
      const __int128 y = static_cast<__int128>(z.label.num()) * (l / z.label.den());
      loss += (v > y ? v - y : y - v) * counts[s];
    }
    if (i == 0 || loss < best_loss) {
      best = i;
      best_loss = loss;
    }
  }
  return best;
}

}  // namespace scaledim
