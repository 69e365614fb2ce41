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

#include "scaledim/predict.h"

#include <algorithm>
#include <map>
#include <memory>
#include <set>

#include "scaledim/error.h"
#include "scaledim/grid.h"
#include "scaledim/guard.h"

namespace scaledim {
namespace {

constexpr std::size_t kMaxCoordinates = 63;
constexpr std::size_t kModelCacheSize = 4096;
constexpr std::uint64_t kMaxProductPatterns = std::uint64_t{1} << 20;

// Orientations are deterministic functions of the pattern set, so repeated
// builds of the same graph are memoized per thread.
std::shared_ptr<const OneInclusionModel> CachedModel(
    const std::vector<Pattern>& patterns, std::size_t width) {
  using Key = std::pair<std::size_t, std::vector<Pattern>>;
  thread_local std::map<Key, std::shared_ptr<const OneInclusionModel>> cache;
  Key key{width, patterns};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  if (cache.size() >= kModelCacheSize) cache.clear();
  auto model = std::make_shared<const OneInclusionModel>(
      OneInclusionModel::Build(patterns, width));
  cache.emplace(std::move(key), model);
  return model;
}

// Sorted distinct prefix points plus the query.
struct Coordinates {
  std::vector<PointIndex> points;
  std::size_t query = 0;

  std::size_t index(PointIndex p) const {
    return static_cast<std::size_t>(
        std::lower_bound(points.begin(), points.end(), p) - points.begin());
  }
};

Coordinates MakeCoordinates(std::span<const LabeledPoint> prefix,
                            PointIndex query) {
  std::set<PointIndex> pts;
  for (const LabeledPoint& z : prefix) pts.insert(z.point);
  pts.insert(query);
  Coordinates c;
  c.points.assign(pts.begin(), pts.end());
  guard::Check(c.points.size(), kMaxCoordinates,
               "distinct points seen by the predictor");
  c.query = c.index(query);
  return c;
}

struct KnownLabels {
  Pattern mask = 0;
  Pattern bits = 0;
  bool conflict = false;
};

KnownLabels TranslatePrefix(const Coordinates& coords,
                            std::span<const LabeledPoint> prefix,
                            const Rational& r, const Rational& gamma) {
  KnownLabels k;
  for (const LabeledPoint& z : prefix) {
    const Ternary t = Psi(z.label, r, gamma);
    if (t == Ternary::kStar) continue;
    const Pattern bit = Pattern{1} << coords.index(z.point);
    const Pattern value = t == Ternary::kOne ? bit : 0;
    if ((k.mask & bit) != 0 && (k.bits & bit) != value) k.conflict = true;
    k.mask |= bit;
    k.bits |= value;
  }
  return k;
}

}  // namespace

int OigPredict(const OneInclusionModel& model,
               std::span<const std::pair<std::size_t, int>> prefix,
               std::size_t query) {
  Pattern mask = 0;
  Pattern bits = 0;
  for (const auto& [coord, bit] : prefix) {
    Require(coord < model.width(), "prefix coordinate out of range");
    const Pattern b = Pattern{1} << coord;
    const Pattern v = bit != 0 ? b : 0;
    if ((mask & b) != 0 && (bits & b) != v) {
      Fail(ErrorCode::kInconsistentPrefix,
           "prefix labels one coordinate both 0 and 1");
    }
    mask |= b;
    bits |= v;
  }
  if ((mask >> query) & 1) {
    // The query label is already given; it must still be realizable.
    if (!std::any_of(model.vertices().begin(), model.vertices().end(),
                     [&](Pattern p) { return (p & mask) == bits; })) {
      Fail(ErrorCode::kInconsistentPrefix,
           "prefix labels are not realized by any pattern");
    }
    return static_cast<int>((bits >> query) & 1);
  }
  return model.Predict(mask, bits, query);
}

int CwdcPredictPatterns(std::vector<Pattern> patterns, std::size_t width,
                        Pattern known_mask, Pattern known_bits, bool conflict,
                        std::size_t query) {
  if (patterns.empty() || conflict) return 0;
  std::sort(patterns.begin(), patterns.end());
  patterns.erase(std::unique(patterns.begin(), patterns.end()),
                 patterns.end());
  const Pattern qbit = Pattern{1} << query;
  int agreed = -1;
  bool split = false;
  for (Pattern p : patterns) {
    if ((p & known_mask) != (known_bits & known_mask)) continue;
    const int bit = (p & qbit) != 0 ? 1 : 0;
    if (agreed < 0) {
      agreed = bit;
    } else if (agreed != bit) {
      split = true;
    }
  }
  if (agreed < 0) return 0;
  if (!split) return agreed;
  return CachedModel(patterns, width)
      ->Predict(known_mask & ~qbit, known_bits & ~qbit, query);
}

int CwdcPredict(const TernaryClass& g, std::span<const TernaryLabel> prefix,
                PointIndex query) {
  Require(query < g.num_points(), "query point out of range");
  std::set<PointIndex> pts = {query};
  for (const TernaryLabel& z : prefix) {
    Require(z.point < g.num_points(), "prefix point out of range");
    if (z.label != Ternary::kStar) pts.insert(z.point);
  }
  const std::vector<PointIndex> coords(pts.begin(), pts.end());
  guard::Check(coords.size(), kMaxCoordinates,
               "distinct points seen by the predictor");
  auto index = [&](PointIndex p) {
    return static_cast<std::size_t>(
        std::lower_bound(coords.begin(), coords.end(), p) - coords.begin());
  };
  KnownLabels k;
  for (const TernaryLabel& z : prefix) {
    if (z.label == Ternary::kStar) continue;
    const Pattern bit = Pattern{1} << index(z.point);
    const Pattern value = z.label == Ternary::kOne ? bit : 0;
    if ((k.mask & bit) != 0 && (k.bits & bit) != value) k.conflict = true;
    k.mask |= bit;
    k.bits |= value;
  }
  std::vector<Pattern> patterns;
  for (std::size_t i = 0; i < g.num_functions(); ++i) {
    Pattern p = 0;
    bool defined = true;
    for (std::size_t c = 0; c < coords.size() && defined; ++c) {
      const Ternary t = g.at(i, coords[c]);
      defined = t != Ternary::kStar;
      if (t == Ternary::kOne) p |= Pattern{1} << c;
    }
    if (defined) patterns.push_back(p);
  }
  return CwdcPredictPatterns(std::move(patterns), coords.size(), k.mask,
                             k.bits, k.conflict, index(query));
}

void AggregatorConfig::Validate() const {
  Require(gamma > Rational(0), "gamma must be positive");
  Require(tau > Rational(0) && tau <= Rational(1), "tau must lie in (0, 1]");
}

std::vector<Rational> AggregatorConfig::Thresholds() const {
  Validate();
  const std::int64_t count = (Rational(1) / tau).floor();
  std::vector<Rational> r;
  r.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 1; i <= count; ++i) r.push_back(tau * Rational(i));
  return r;
}

AggregateOutcome AggregatePredict(const FunctionClass& f,
                                  const AggregatorConfig& cfg,
                                  std::span<const LabeledPoint> prefix,
                                  PointIndex query) {
  Require(query < f.num_points(), "query point out of range");
  ValidateSample(prefix, f.num_points());
  const Coordinates coords = MakeCoordinates(prefix, query);
  std::set<std::vector<std::int64_t>> distinct;
  for (std::size_t i = 0; i < f.num_functions(); ++i) {
    std::vector<std::int64_t> row;
    row.reserve(coords.points.size());
    for (PointIndex p : coords.points) row.push_back(f.numerator(i, p));
    distinct.insert(std::move(row));
  }
  AggregateOutcome out;
  std::int64_t ones = 0;
  const std::size_t width = coords.points.size();
  for (const Rational& r : cfg.Thresholds()) {
    const KnownLabels k = TranslatePrefix(coords, prefix, r, cfg.gamma);
    const GridThresholds t(f.denominator(), r, cfg.gamma);
    // Prefix points labelled * at this threshold do not constrain the rows.
    const Pattern active = k.mask | (Pattern{1} << coords.query);
    std::vector<Pattern> patterns;
    for (const auto& row : distinct) {
      Pattern p = 0;
      bool defined = true;
      for (std::size_t c = 0; c < width && defined; ++c) {
        if (((active >> c) & 1) == 0) continue;
        const Ternary v = t.Classify(row[c]);
        defined = v != Ternary::kStar;
        if (v == Ternary::kOne) p |= Pattern{1} << c;
      }
      if (defined) patterns.push_back(p);
    }
    const int b = CwdcPredictPatterns(std::move(patterns), width, k.mask,
                                      k.bits, k.conflict, coords.query);
    out.bits.push_back(b);
    ones += b;
  }
  out.prediction = cfg.tau * Rational(ones);
  return out;
}

AggregateOutcome AggregatePredict(const ProductClass& f,
                                  const AggregatorConfig& cfg,
                                  std::span<const LabeledPoint> prefix,
                                  PointIndex query) {
  Require(query < f.num_points(), "query point out of range");
  ValidateSample(prefix, f.num_points());
  const Coordinates coords = MakeCoordinates(prefix, query);
  const std::size_t width = coords.points.size();
  AggregateOutcome out;
  std::int64_t ones = 0;
  for (const Rational& r : cfg.Thresholds()) {
    const KnownLabels k = TranslatePrefix(coords, prefix, r, cfg.gamma);
    // Bits realizable at each coordinate by a value that is not *.
    const Pattern active = k.mask | (Pattern{1} << coords.query);
    std::vector<int> avail(width, 0);
    for (std::size_t c = 0; c < width; ++c) {
      if (((active >> c) & 1) == 0) continue;
      for (const Rational& v : f.values(coords.points[c])) {
        const Ternary t = Psi(v, r, cfg.gamma);
        if (t == Ternary::kZero) avail[c] |= 1;
        if (t == Ternary::kOne) avail[c] |= 2;
      }
    }
    int b = 0;
    bool empty = k.conflict;
    for (std::size_t c = 0; c < width && !empty; ++c) {
      if (((active >> c) & 1) == 0) continue;
      empty = avail[c] == 0;
      if ((k.mask >> c) & 1) {
        empty |= (avail[c] & ((k.bits >> c) & 1 ? 2 : 1)) == 0;
      }
    }
    if (!empty) {
      const int q = avail[coords.query];
      if ((k.mask >> coords.query) & 1) {
        b = static_cast<int>((k.bits >> coords.query) & 1);
      } else if (q != 3) {
        b = q == 2 ? 1 : 0;
      } else {
        std::uint64_t count = 1;
        for (int a : avail) count *= a == 3 ? 2 : 1;
        guard::Check(count, kMaxProductPatterns,
                     "one-inclusion graph size for a product class");
        std::vector<Pattern> patterns = {0};
        for (std::size_t c = 0; c < width; ++c) {
          const Pattern bit = Pattern{1} << c;
          if (avail[c] == 2) {
            for (Pattern& p : patterns) p |= bit;
          } else if (avail[c] == 3) {
            const std::size_t n = patterns.size();
            for (std::size_t i = 0; i < n; ++i) {
              patterns.push_back(patterns[i] | bit);
            }
          }
        }
        b = CwdcPredictPatterns(std::move(patterns), width, k.mask, k.bits,
                                false, coords.query);
      }
    }
    out.bits.push_back(b);
    ones += b;
  }
  out.prediction = cfg.tau * Rational(ones);
  return out;
}

InequalityCheck CheckAggregationInequality(const Rational& y,
                                           const AggregatorConfig& cfg,
                                           std::span<const int> b) {
  const std::vector<Rational> thresholds = cfg.Thresholds();
  Require(b.size() == thresholds.size(),
          "need one vote per threshold (" +
              std::to_string(thresholds.size()) + ")");
  Require(y >= Rational(0) && y <= Rational(1), "y must lie in [0,1]");
  std::int64_t ones = 0;
  std::int64_t wrong = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    Require(b[i] == 0 || b[i] == 1, "votes must be bits");
    ones += b[i];
    const Ternary t = Psi(y, thresholds[i], cfg.gamma);
    if (t == Ternary::kStar) continue;
    if (b[i] != (t == Ternary::kOne ? 1 : 0)) ++wrong;
  }
  InequalityCheck c;
  c.lhs = Abs(y - cfg.tau * Rational(ones));
  c.rhs = Rational(2) * cfg.tau + cfg.gamma + cfg.tau * Rational(wrong);
  c.holds = c.lhs < c.rhs;
  return c;
}

PredictorTranscript RunTranscript(const FunctionClass& f,
                                  const AggregatorConfig& cfg,
                                  std::span<const LabeledPoint> sample) {
  ValidateSample(sample, f.num_points());
  const std::vector<Rational> thresholds = cfg.Thresholds();
  PredictorTranscript rows;
  for (std::size_t t = 0; t < sample.size(); ++t) {
    const AggregateOutcome o =
        AggregatePredict(f, cfg, sample.first(t), sample[t].point);
    TranscriptRow row;
    row.round = t + 1;
    row.query = sample[t].point;
    row.prediction = o.prediction;
    row.truth = sample[t].label;
    row.abs_error = Abs(o.prediction - sample[t].label);
    for (std::size_t i = 0; i < thresholds.size(); ++i) {
      const Ternary psi = Psi(sample[t].label, thresholds[i], cfg.gamma);
      row.mistakes.push_back(
          psi != Ternary::kStar && o.bits[i] != (psi == Ternary::kOne ? 1 : 0)
              ? 1
              : 0);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Rational BinarySearchPredict(const FunctionClass& f, const Rational& gamma,
                             std::size_t depth,
                             std::span<const LabeledPoint> prefix,
                             PointIndex query) {
  Require(gamma > Rational(0), "gamma must be positive");
  Require(depth >= 1 && depth <= 40, "bisection depth must be in [1, 40]");
  Require(query < f.num_points(), "query point out of range");
  ValidateSample(prefix, f.num_points());
  const Coordinates coords = MakeCoordinates(prefix, query);
  const std::size_t width = coords.points.size();
  Rational lo(0);
  Rational hi(1);
  for (std::size_t i = 0; i < depth; ++i) {
    const Rational r = (lo + hi) / Rational(2);
    const KnownLabels k = TranslatePrefix(coords, prefix, r, gamma);
    const GridThresholds t(f.denominator(), r, gamma);
    const Pattern active = k.mask | (Pattern{1} << coords.query);
    std::vector<Pattern> patterns;
    for (std::size_t row = 0; row < f.num_functions(); ++row) {
      Pattern p = 0;
      bool defined = true;
      for (std::size_t c = 0; c < width && defined; ++c) {
        if (((active >> c) & 1) == 0) continue;
        const Ternary v = t.Classify(f.numerator(row, coords.points[c]));
        defined = v != Ternary::kStar;
        if (v == Ternary::kOne) p |= Pattern{1} << c;
      }
      if (defined) patterns.push_back(p);
    }
    const int b = CwdcPredictPatterns(std::move(patterns), width, k.mask,
                                      k.bits, k.conflict, coords.query);
    if (b == 1) {
      lo = r;
    } else {
      hi = r;
    }
  }
  return lo;
}

}  // namespace scaledim
