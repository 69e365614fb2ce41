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

#include "scaledim/generators.h"

#include <algorithm>
#include <set>
#include <sstream>

#include <boost/algorithm/string/trim.hpp>

#include "scaledim/error.h"
#include "scaledim/guard.h"
#include "scaledim/rng.h"

namespace scaledim {
namespace {

void CheckExponent(std::size_t n, const char* what) {
  Require(n >= 1, std::string(what) + " needs at least one point");
  guard::Check(n, guard::kGeneratorMaxExponent,
               std::string(what) + " domain size");
}

std::vector<std::string> OneBasedLabels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

FunctionClass FromProduct(const ProductClass& p) {
  FunctionClass f = p.Materialize();
  return FunctionClass(OneBasedLabels(p.num_points()), f.values());
}

const std::string& Param(const GeneratorSpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) {
    Fail(ErrorCode::kInvalidArgument,
         "generator '" + spec.name + "' needs parameter '" + key + "'");
  }
  return it->second;
}

std::string ParamOr(const GeneratorSpec& spec, const std::string& key,
                    const std::string& fallback) {
  auto it = spec.params.find(key);
  return it == spec.params.end() ? fallback : it->second;
}

std::size_t ParseCount(const std::string& text, const std::string& key) {
  const Rational v = Rational::Parse(text);
  Require(v.is_integer() && v >= Rational(0),
          "parameter '" + key + "' must be a non-negative integer");
  return static_cast<std::size_t>(v.num());
}

}  // namespace

FunctionClass GenBinaryCube(std::size_t d) {
  CheckExponent(d, "binary_cube");
  return FromProduct(
      ProductClass(std::vector<std::vector<Rational>>(d, {0, 1})));
}

ProductClass TwoValueProduct(std::size_t n, const Rational& gamma,
                             const Rational& kappa) {
  Require(n >= 1, "two_value needs at least one point");
  Require(kappa > Rational(0) && kappa < gamma && gamma <= Rational(1, 2),
          "two_value requires 0 < kappa < gamma <= 1/2");
  const Rational high = Rational(2) * (gamma - kappa);
  return ProductClass(std::vector<std::vector<Rational>>(n, {0, high}));
}

FunctionClass GenTwoValue(std::size_t n, const Rational& gamma,
                          const Rational& kappa) {
  CheckExponent(n, "two_value");
  return FromProduct(TwoValueProduct(n, gamma, kappa));
}

std::vector<ProfileStep> ParseProfile(const std::string& text) {
  std::vector<ProfileStep> steps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    ProfileStep s;
    if (item.back() == ')') {
      s.attained = false;
      item.pop_back();
    }
    const auto at = item.find('@');
    if (at == std::string::npos) {
      Fail(ErrorCode::kParse, "profile step '" + item + "' must be d@sup");
    }
    s.d = ParseCount(item.substr(0, at), "profile dimension");
    s.sup = Rational::Parse(item.substr(at + 1));
    steps.push_back(s);
  }
  return steps;
}

FunctionClass GenProfile(const std::vector<ProfileStep>& steps,
                         std::size_t levels) {
  Require(levels >= 1, "profile needs at least one approximation level");
  std::vector<ProfileStep> sorted = steps;
  std::sort(sorted.begin(), sorted.end(),
            [](const ProfileStep& a, const ProfileStep& b) {
              return a.sup < b.sup;
            });
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const ProfileStep& s = sorted[i];
    Require(s.sup > Rational(0) && s.sup <= Rational(1, 2),
            "profile suprema must lie in (0, 1/2]");
    Require(s.d >= 1, "profile steps need a positive dimension");
    if (i > 0) {
      Require(s.d < sorted[i - 1].d && s.sup > sorted[i - 1].sup,
              "profile must be non-increasing with distinct suprema");
    }
    guard::Check(s.d, guard::kGeneratorMaxExponent, "profile block size");
  }
  // Blocks: (first column, size, half-width of the value pair).
  struct Block {
    std::size_t start;
    std::size_t size;
    Rational spread;
  };
  std::vector<Block> blocks;
  std::size_t n = 0;
  for (const ProfileStep& s : sorted) {
    if (s.attained) {
      blocks.push_back({n, s.d, s.sup});
      n += s.d;
    } else {
      for (std::size_t lv = 1; lv <= levels; ++lv) {
        const Rational spread =
            s.sup * (Rational(1) - Rational(1, static_cast<std::int64_t>(lv)));
        blocks.push_back({n, s.d, spread});
        n += s.d;
      }
    }
  }
  std::vector<std::vector<Rational>> rows;
  if (blocks.empty()) rows.emplace_back(1, Rational(0));
  for (const Block& b : blocks) {
    const Rational lo = Rational(1, 2) - b.spread;
    const Rational hi = Rational(1, 2) + b.spread;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << b.size); ++mask) {
      // Off-block value 1/2: with 0 instead, a lone point would be
      // separated by 0 and 1/2 + spread at scales above the profile.
      std::vector<Rational> row(n, Rational(1, 2));
      for (std::size_t t = 0; t < b.size; ++t) {
        row[b.start + t] = (mask >> t) & 1 ? hi : lo;
      }
      rows.push_back(std::move(row));
    }
    guard::Check(rows.size(), guard::kMaxMaterializedRows, "profile class size");
  }
  const std::size_t cols = rows.front().size();
  return FunctionClass(OneBasedLabels(cols),
                       ValueMatrix::FromRationalRows(rows));
}

ProductClass GcCounterexampleProduct(const Rational& eps, std::size_t n) {
  Require(n >= 1, "gc_counterexample needs at least one point");
  Require(eps > Rational(0) && eps < Rational(1, 2),
          "gc_counterexample requires 0 < eps < 1/2");
  std::vector<std::vector<Rational>> values;
  values.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const Rational spread =
        eps / Rational(2) + Rational(1, static_cast<std::int64_t>(i + 3));
    values.push_back({Rational(1, 2) - spread, Rational(1, 2) + spread});
  }
  return ProductClass(std::move(values));
}

FunctionClass GenGcCounterexample(const Rational& eps, std::size_t n) {
  CheckExponent(n, "gc_counterexample");
  return FromProduct(GcCounterexampleProduct(eps, n));
}

std::vector<Rational> GcAdversarialFunction(
    const Rational& eps, std::size_t n, const std::vector<PointIndex>& sample) {
  const ProductClass p = GcCounterexampleProduct(eps, n);
  std::vector<char> in_sample(n, 0);
  for (PointIndex x : sample) {
    Require(x < n, "sample point out of range");
    in_sample[x] = 1;
  }
  std::vector<Rational> f;
  f.reserve(n);
  for (PointIndex x = 0; x < n; ++x) {
    f.push_back(in_sample[x] ? p.values(x).front() : p.values(x).back());
  }
  return f;
}

ProductClass BandProduct(const Rational& eps, std::size_t n,
                         BandLevels levels) {
  Require(n >= 1, "band needs at least one point");
  if (levels == BandLevels::kTwo) {
    Require(eps > Rational(0) && eps <= Rational(1),
            "two-level band requires 0 < eps <= 1");
    const Rational h = eps / Rational(2);
    return ProductClass(std::vector<std::vector<Rational>>(
        n, {Rational(1, 2) - h, Rational(1, 2) + h}));
  }
  Require(eps > Rational(0) && eps <= Rational(1, 2),
          "three-level band requires 0 < eps <= 1/2");
  return ProductClass(std::vector<std::vector<Rational>>(
      n, {Rational(1, 2) - eps, Rational(1, 2), Rational(1, 2) + eps}));
}

FunctionClass GenBandClass(const Rational& eps, std::size_t n,
                           BandLevels levels) {
  CheckExponent(n, "band");
  return FromProduct(BandProduct(eps, n, levels));
}

FunctionClass GenRandom(std::size_t n_points, std::size_t n_funcs,
                        std::int64_t b, std::uint64_t seed) {
  Require(n_points >= 1 && n_funcs >= 1, "random class must be nonempty");
  Require(b >= 1, "grid resolution b must be positive");
  guard::Check(n_points * n_funcs, guard::kMaxMaterializedRows * 16,
               "random class entries");
  Rng rng(seed);
  std::vector<std::int64_t> data;
  data.reserve(n_points * n_funcs);
  for (std::size_t i = 0; i < n_points * n_funcs; ++i) {
    data.push_back(
        static_cast<std::int64_t>(rng.Below(static_cast<std::uint64_t>(b) + 1)));
  }
  return FunctionClass(ValueMatrix(b, n_points, std::move(data)));
}

std::map<std::string, std::string> ParseParams(const std::string& text) {
  std::map<std::string, std::string> params;
  std::stringstream ss(text);
  std::string item;
  // Profile values contain commas, so a chunk without '=' continues the
  // previous value.
  std::string last;
  while (std::getline(ss, item, ',')) {
    boost::algorithm::trim(item);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      if (last.empty()) {
        Fail(ErrorCode::kParse, "parameter '" + item + "' must be key=value");
      }
      params[last] += "," + item;
      continue;
    }
    last = boost::algorithm::trim_copy(item.substr(0, eq));
    params[last] = boost::algorithm::trim_copy(item.substr(eq + 1));
  }
  return params;
}

FunctionClass Generate(const GeneratorSpec& spec) {
  const std::string& name = spec.name;
  if (name == "binary_cube") {
    return GenBinaryCube(ParseCount(Param(spec, "d"), "d"));
  }
  if (name == "two_value") {
    return GenTwoValue(ParseCount(Param(spec, "n"), "n"),
                       Rational::Parse(Param(spec, "gamma")),
                       Rational::Parse(Param(spec, "kappa")));
  }
  if (name == "profile") {
    return GenProfile(ParseProfile(Param(spec, "phi")),
                      ParseCount(ParamOr(spec, "levels", "4"), "levels"));
  }
  if (name == "gc_counterexample") {
    return GenGcCounterexample(Rational::Parse(Param(spec, "eps")),
                               ParseCount(Param(spec, "n"), "n"));
  }
  if (name == "band") {
    const std::string lv = ParamOr(spec, "levels", "two");
    BandLevels levels;
    if (lv == "two" || lv == "2") {
      levels = BandLevels::kTwo;
    } else if (lv == "three" || lv == "3") {
      levels = BandLevels::kThree;
    } else {
      Fail(ErrorCode::kInvalidArgument, "band levels must be two or three");
    }
    return GenBandClass(Rational::Parse(Param(spec, "eps")),
                        ParseCount(Param(spec, "n"), "n"), levels);
  }
  if (name == "random") {
    return GenRandom(ParseCount(Param(spec, "points"), "points"),
                     ParseCount(Param(spec, "funcs"), "funcs"),
                     static_cast<std::int64_t>(
                         ParseCount(Param(spec, "b"), "b")),
                     spec.seed);
  }
  Fail(ErrorCode::kInvalidArgument,
       "unknown generator '" + name +
           "' (expected binary_cube, two_value, profile, gc_counterexample, "
           "band or random)");
}

}  // namespace scaledim
