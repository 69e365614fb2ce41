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

#include "scaledim/function_class.h"

#include <algorithm>
#include <map>
#include <numeric>

#include "scaledim/error.h"
#include "scaledim/grid.h"
#include "scaledim/guard.h"
#include "scaledim/rng.h"

namespace scaledim {

char TernaryChar(Ternary t) {
  switch (t) {
    case Ternary::kZero:
      return '0';
    case Ternary::kStar:
      return '*';
    case Ternary::kOne:
      return '1';
  }
  return '?';
}

// ---------------------------------------------------------------------------
// ValueMatrix

ValueMatrix::ValueMatrix(std::int64_t denominator, std::size_t cols,
                         std::vector<std::int64_t> numerators)
    : den_(denominator), cols_(cols), data_(std::move(numerators)) {
  Require(den_ > 0, "grid denominator must be positive");
  Require(cols_ > 0, "value matrix needs at least one column");
  Require(!data_.empty() && data_.size() % cols_ == 0,
          "value matrix must be rectangular and nonempty");
  for (std::int64_t n : data_) {
    Require(n >= 0 && n <= den_, "value " + std::to_string(n) + "/" +
                                     std::to_string(den_) +
                                     " outside [0,1]");
  }
}

ValueMatrix ValueMatrix::FromRows(
    std::int64_t denominator,
    const std::vector<std::vector<std::int64_t>>& rows) {
  Require(!rows.empty(), "value matrix needs at least one row");
  const std::size_t cols = rows.front().size();
  std::vector<std::int64_t> flat;
  flat.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    Require(r.size() == cols, "value matrix rows must have equal length");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return ValueMatrix(denominator, cols, std::move(flat));
}

ValueMatrix ValueMatrix::FromRationalRows(
    const std::vector<std::vector<Rational>>& rows) {
  Require(!rows.empty(), "value matrix needs at least one row");
  std::int64_t den = 1;
  for (const auto& r : rows) {
    for (const Rational& v : r) den = Lcm(den, v.den());
  }
  std::vector<std::vector<std::int64_t>> nums;
  nums.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<std::int64_t> row;
    row.reserve(r.size());
    for (const Rational& v : r) row.push_back(v.num() * (den / v.den()));
    nums.push_back(std::move(row));
  }
  return FromRows(den, nums);
}

std::vector<Rational> ValueMatrix::row_values(std::size_t r) const {
  std::vector<Rational> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(value(r, c));
  return out;
}

ValueMatrix ValueMatrix::Regrid(std::int64_t new_den) const {
  Require(new_den > 0 && new_den % den_ == 0,
          "regrid target must refine the current grid");
  const std::int64_t factor = new_den / den_;
  std::vector<std::int64_t> data(data_);
  for (auto& n : data) n *= factor;
  return ValueMatrix(new_den, cols_, std::move(data));
}

std::int64_t ValueMatrix::L1Units(std::size_t a, std::size_t b) const {
  std::int64_t sum = 0;
  const std::int64_t* x = data_.data() + a * cols_;
  const std::int64_t* y = data_.data() + b * cols_;
  for (std::size_t c = 0; c < cols_; ++c) {
    sum += x[c] > y[c] ? x[c] - y[c] : y[c] - x[c];
  }
  return sum;
}

// ---------------------------------------------------------------------------
// FunctionClass / TernaryClass

std::vector<std::string> DefaultDomainLabels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  return labels;
}

FunctionClass::FunctionClass(std::vector<std::string> domain,
                             ValueMatrix values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  Require(domain_.size() == values_.cols(),
          "domain labels must match the number of columns");
}

FunctionClass::FunctionClass(ValueMatrix values)
    : domain_(DefaultDomainLabels(values.cols())), values_(std::move(values)) {}

FunctionClass FunctionClass::RestrictTo(
    std::span<const PointIndex> points) const {
  std::vector<std::string> labels;
  labels.reserve(points.size());
  for (PointIndex p : points) {
    Require(p < num_points(), "point index " + std::to_string(p) +
                                  " out of range");
    labels.push_back(domain_[p]);
  }
  return FunctionClass(std::move(labels), Restrict(*this, points));
}

TernaryClass::TernaryClass(std::vector<std::string> domain, std::size_t rows,
                           std::vector<Ternary> data)
    : domain_(std::move(domain)), rows_(rows), data_(std::move(data)) {
  Require(!domain_.empty() && rows_ > 0,
          "ternary class must be nonempty");
  Require(data_.size() == rows_ * domain_.size(),
          "ternary class must be rectangular");
}

TernaryClass TernaryClass::FromRows(
    const std::vector<std::vector<Ternary>>& rows) {
  Require(!rows.empty(), "ternary class must be nonempty");
  const std::size_t cols = rows.front().size();
  std::vector<Ternary> flat;
  for (const auto& r : rows) {
    Require(r.size() == cols, "ternary rows must have equal length");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return TernaryClass(DefaultDomainLabels(cols), rows.size(), std::move(flat));
}

// ---------------------------------------------------------------------------
// ProductClass

ProductClass::ProductClass(std::vector<std::vector<Rational>> values_per_point)
    : values_(std::move(values_per_point)) {
  Require(!values_.empty(), "product class needs at least one point");
  for (auto& vs : values_) {
    Require(!vs.empty(), "every point needs at least one value");
    for (const Rational& v : vs) {
      Require(v >= Rational(0) && v <= Rational(1),
              "product class value outside [0,1]");
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  }
}

BigInt ProductClass::size() const {
  BigInt n = 1;
  for (const auto& vs : values_) n *= vs.size();
  return n;
}

FunctionClass ProductClass::RestrictTo(
    std::span<const PointIndex> points) const {
  std::vector<PointIndex> distinct;
  for (PointIndex p : points) {
    Require(p < num_points(), "point index out of range");
    if (std::find(distinct.begin(), distinct.end(), p) == distinct.end()) {
      distinct.push_back(p);
    }
  }
  std::uint64_t rows = 1;
  for (PointIndex p : distinct) {
    const unsigned __int128 next =
        static_cast<unsigned __int128>(rows) * values_[p].size();
    rows = next > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(next);
    guard::Check(rows, guard::kMaxMaterializedRows,
                 "product class restriction size");
  }
  std::int64_t den = 1;
  for (PointIndex p : distinct) {
    for (const Rational& v : values_[p]) den = Lcm(den, v.den());
  }
  const std::size_t k = distinct.size();
  std::vector<std::int64_t> flat;
  flat.reserve(rows * k);
  std::vector<std::size_t> digit(k, 0);
  for (std::uint64_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      const Rational& v = values_[distinct[c]][digit[c]];
      flat.push_back(v.num() * (den / v.den()));
    }
    // Last coordinate varies fastest.
    for (std::size_t c = k; c-- > 0;) {
      if (++digit[c] < values_[distinct[c]].size()) break;
      digit[c] = 0;
    }
  }
  std::vector<std::string> labels;
  for (PointIndex p : distinct) labels.push_back("x" + std::to_string(p));
  return FunctionClass(std::move(labels), ValueMatrix(den, k, std::move(flat)));
}

FunctionClass ProductClass::Materialize() const {
  std::vector<PointIndex> all(num_points());
  std::iota(all.begin(), all.end(), PointIndex{0});
  return RestrictTo(all);
}

std::vector<Rational> ProductClass::SampleFunction(Rng& rng) const {
  std::vector<Rational> f;
  f.reserve(values_.size());
  for (const auto& vs : values_) f.push_back(vs[rng.Below(vs.size())]);
  return f;
}

// ---------------------------------------------------------------------------
// DiscreteDistribution

DiscreteDistribution::DiscreteDistribution(std::vector<Rational> weights)
    : weights_(std::move(weights)) {
  Require(!weights_.empty(), "distribution needs at least one point");
  BigRational total = 0;
  std::int64_t den = 1;
  for (const Rational& w : weights_) {
    Require(w >= Rational(0), "distribution weights must be non-negative");
    total += w.to_big();
    den = Lcm(den, w.den());
  }
  Require(total == 1, "distribution weights must sum to exactly 1");
  std::uint64_t acc = 0;
  cumulative_.reserve(weights_.size());
  for (const Rational& w : weights_) {
    acc += static_cast<std::uint64_t>(w.num()) *
           static_cast<std::uint64_t>(den / w.den());
    cumulative_.push_back(acc);
  }
}

DiscreteDistribution DiscreteDistribution::Uniform(std::size_t n) {
  Require(n > 0, "uniform distribution needs at least one point");
  return DiscreteDistribution(std::vector<Rational>(
      n, Rational(1, static_cast<std::int64_t>(n))));
}

PointIndex DiscreteDistribution::Sample(Rng& rng) const {
  const std::uint64_t u = rng.Below(cumulative_.back());
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  return static_cast<PointIndex>(it - cumulative_.begin());
}

void ValidateSample(std::span<const LabeledPoint> sample,
                    std::size_t num_points) {
  for (const LabeledPoint& z : sample) {
    Require(z.point < num_points, "sample point index " +
                                      std::to_string(z.point) +
                                      " out of range");
    Require(z.label >= Rational(0) && z.label <= Rational(1),
            "sample label outside [0,1]");
  }
}

// ---------------------------------------------------------------------------
// Operations

Ternary Psi(const Rational& y, const Rational& r, const Rational& gamma) {
  Require(gamma > Rational(0), "psi scale gamma must be positive");
  if (y >= r + gamma) return Ternary::kOne;
  if (y <= r - gamma) return Ternary::kZero;
  return Ternary::kStar;
}

TernaryClass PsiClass(const FunctionClass& f, const Rational& r,
                      const Rational& gamma) {
  Require(gamma > Rational(0), "psi scale gamma must be positive");
  const GridThresholds t(f.denominator(), r, gamma);
  const auto& nums = f.values().numerators();
  std::vector<Ternary> data;
  data.reserve(nums.size());
  for (std::int64_t n : nums) data.push_back(t.Classify(n));
  return TernaryClass(f.domain(), f.num_functions(), std::move(data));
}

TernaryClass Deduplicate(const TernaryClass& g) {
  std::vector<std::vector<Ternary>> seen;
  std::vector<Ternary> flat;
  std::size_t rows = 0;
  std::map<std::vector<Ternary>, bool> index;
  for (std::size_t i = 0; i < g.num_functions(); ++i) {
    std::vector<Ternary> r(g.row(i).begin(), g.row(i).end());
    if (index.emplace(r, true).second) {
      flat.insert(flat.end(), r.begin(), r.end());
      ++rows;
    }
  }
  return TernaryClass(g.domain(), rows, std::move(flat));
}

Rational Quantize(const Rational& u, const Rational& alpha) {
  Require(alpha > Rational(0), "quantization width must be positive");
  return alpha * Rational((u / alpha).floor());
}

ValueMatrix Quantize(const ValueMatrix& m, const Rational& alpha) {
  Require(alpha > Rational(0), "quantization width must be positive");
  const std::int64_t den = Lcm(m.denominator(), alpha.den());
  // alpha = p/q, u = n/d: floor(u / alpha) = floor(n q / (d p)).
  const __int128 p = alpha.num();
  const __int128 q = alpha.den();
  const __int128 d = m.denominator();
  std::vector<std::int64_t> data;
  data.reserve(m.numerators().size());
  for (std::int64_t n : m.numerators()) {
    const __int128 k = (static_cast<__int128>(n) * q) / (d * p);
    data.push_back(static_cast<std::int64_t>(k * p * (den / q)));
  }
  return ValueMatrix(den, m.cols(), std::move(data));
}

FunctionClass Quantize(const FunctionClass& f, const Rational& alpha) {
  return FunctionClass(f.domain(), Quantize(f.values(), alpha));
}

Rational L1(std::span<const Rational> v, std::span<const Rational> w) {
  Require(v.size() == w.size(), "l1 needs vectors of equal length");
  Require(!v.empty(), "l1 needs non-empty vectors");
  BigRational sum = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    sum += Abs(v[i] - w[i]).to_big();
  }
  sum /= static_cast<long long>(v.size());
  return Rational(
      static_cast<std::int64_t>(boost::multiprecision::numerator(sum)),
      static_cast<std::int64_t>(boost::multiprecision::denominator(sum)));
}

Rational L1Rows(const ValueMatrix& m, std::size_t a, std::size_t b) {
  return Rational(m.L1Units(a, b),
                  static_cast<std::int64_t>(m.cols()) * m.denominator());
}

ValueMatrix Restrict(const FunctionClass& f, std::span<const PointIndex> xi) {
  Require(!xi.empty(), "restriction needs at least one point");
  for (PointIndex p : xi) {
    Require(p < f.num_points(),
            "point index " + std::to_string(p) + " out of range");
  }
  std::vector<std::int64_t> data;
  data.reserve(f.num_functions() * xi.size());
  for (std::size_t r = 0; r < f.num_functions(); ++r) {
    for (PointIndex p : xi) data.push_back(f.numerator(r, p));
  }
  return ValueMatrix(f.denominator(), xi.size(), std::move(data));
}

}  // namespace scaledim
