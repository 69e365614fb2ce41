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

// Exact representations of finite classes of [0,1]-valued functions, their
// {0, *, 1} threshold images, and the distributions and samples the rest of
// the library evaluates them under.

#ifndef SCALEDIM_FUNCTION_CLASS_H_
#define SCALEDIM_FUNCTION_CLASS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "scaledim/rational.h"

namespace scaledim {

class Rng;

using PointIndex = std::size_t;

// Ordered 0 < * < 1 so that comparisons follow the threshold direction.
enum class Ternary : std::uint8_t { kZero = 0, kStar = 1, kOne = 2 };

char TernaryChar(Ternary t);

// Rows of values on the grid {0, 1/den, ..., 1}, stored as numerators over a
// single shared denominator. All comparisons and distances are integral.
class ValueMatrix {
 public:
  ValueMatrix() = default;
  ValueMatrix(std::int64_t denominator, std::size_t cols,
              std::vector<std::int64_t> numerators);
  static ValueMatrix FromRows(std::int64_t denominator,
                              const std::vector<std::vector<std::int64_t>>& rows);
  // Builds the smallest shared grid holding every entry of `rows`.
  static ValueMatrix FromRationalRows(
      const std::vector<std::vector<Rational>>& rows);

  std::int64_t denominator() const { return den_; }
  std::size_t rows() const { return cols_ == 0 ? 0 : data_.size() / cols_; }
  std::size_t cols() const { return cols_; }

  std::int64_t at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  std::span<const std::int64_t> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Rational value(std::size_t r, std::size_t c) const {
    return Rational(at(r, c), den_);
  }
  std::vector<Rational> row_values(std::size_t r) const;
  const std::vector<std::int64_t>& numerators() const { return data_; }

  // Same values on the finer grid 1/new_den; new_den must be a multiple of
  // the current denominator.
  ValueMatrix Regrid(std::int64_t new_den) const;

  // Sum over columns of |a_c - b_c|, in grid units. Dividing by
  // cols() * denominator() gives the normalized l1 distance.
  std::int64_t L1Units(std::size_t a, std::size_t b) const;

  friend bool operator==(const ValueMatrix&, const ValueMatrix&) = default;

 private:
  std::int64_t den_ = 1;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

// Finite class: rows are functions, columns are domain points.
class FunctionClass {
 public:
  FunctionClass() = default;
  FunctionClass(std::vector<std::string> domain, ValueMatrix values);
  // Labels default to "x0", "x1", ...
  explicit FunctionClass(ValueMatrix values);

  std::size_t num_points() const { return values_.cols(); }
  std::size_t num_functions() const { return values_.rows(); }
  std::int64_t denominator() const { return values_.denominator(); }
  const std::vector<std::string>& domain() const { return domain_; }
  const ValueMatrix& values() const { return values_; }

  std::int64_t numerator(std::size_t f, PointIndex x) const {
    return values_.at(f, x);
  }
  Rational value(std::size_t f, PointIndex x) const {
    return values_.value(f, x);
  }

  // Class on the listed points, in the listed order (repeats allowed).
  FunctionClass RestrictTo(std::span<const PointIndex> points) const;

  friend bool operator==(const FunctionClass&, const FunctionClass&) = default;

 private:
  std::vector<std::string> domain_;
  ValueMatrix values_;
};

std::vector<std::string> DefaultDomainLabels(std::size_t n);

// Class of {0, *, 1}-valued functions.
class TernaryClass {
 public:
  TernaryClass() = default;
  TernaryClass(std::vector<std::string> domain, std::size_t rows,
               std::vector<Ternary> data);
  static TernaryClass FromRows(const std::vector<std::vector<Ternary>>& rows);

  std::size_t num_points() const { return domain_.size(); }
  std::size_t num_functions() const { return rows_; }
  const std::vector<std::string>& domain() const { return domain_; }
  Ternary at(std::size_t g, PointIndex x) const {
    return data_[g * domain_.size() + x];
  }
  std::span<const Ternary> row(std::size_t g) const {
    return {data_.data() + g * domain_.size(), domain_.size()};
  }

  friend bool operator==(const TernaryClass&, const TernaryClass&) = default;

 private:
  std::vector<std::string> domain_;
  std::size_t rows_ = 0;
  std::vector<Ternary> data_;
};

// Class of every function whose value at point p lies in a per-point value
// set; stored implicitly so that domains far too large to enumerate (2^50
// functions and up) can still be restricted, sampled, and optimized over
// coordinate by coordinate.
class ProductClass {
 public:
  ProductClass() = default;
  explicit ProductClass(std::vector<std::vector<Rational>> values_per_point);

  std::size_t num_points() const { return values_.size(); }
  const std::vector<Rational>& values(PointIndex p) const { return values_[p]; }
  BigInt size() const;

  // Every function restricted to the distinct points of `points` (in first
  // appearance order); rows enumerate the product in lexicographic order.
  FunctionClass RestrictTo(std::span<const PointIndex> points) const;
  // All functions on the full domain. Guarded.
  FunctionClass Materialize() const;

  // A function drawn uniformly from the class, as per-point values.
  std::vector<Rational> SampleFunction(Rng& rng) const;

 private:
  std::vector<std::vector<Rational>> values_;
};

// Probability vector over domain indices with exact rational weights.
class DiscreteDistribution {
 public:
  DiscreteDistribution() = default;
  explicit DiscreteDistribution(std::vector<Rational> weights);
  static DiscreteDistribution Uniform(std::size_t n);

  std::size_t size() const { return weights_.size(); }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& weight(PointIndex p) const { return weights_[p]; }

  PointIndex Sample(Rng& rng) const;

 private:
  std::vector<Rational> weights_;
  // Integer cumulative weights over the common denominator, for sampling.
  std::vector<std::uint64_t> cumulative_;
};

struct LabeledPoint {
  PointIndex point = 0;
  Rational label;

  friend bool operator==(const LabeledPoint&, const LabeledPoint&) = default;
};

using LabeledSample = std::vector<LabeledPoint>;

void ValidateSample(std::span<const LabeledPoint> sample,
                    std::size_t num_points);

// psi_{r,gamma}(y): 1 if y >= r + gamma, 0 if y <= r - gamma, * in between.
Ternary Psi(const Rational& y, const Rational& r, const Rational& gamma);

// Entrywise Psi; duplicate ternary rows are kept.
TernaryClass PsiClass(const FunctionClass& f, const Rational& r,
                      const Rational& gamma);

// Distinct rows in first-appearance order.
TernaryClass Deduplicate(const TernaryClass& g);

// Q_alpha(u) = alpha * floor(u / alpha), entrywise. The result lives on the
// common refinement of the input grid and alpha's grid.
ValueMatrix Quantize(const ValueMatrix& m, const Rational& alpha);
FunctionClass Quantize(const FunctionClass& f, const Rational& alpha);
Rational Quantize(const Rational& u, const Rational& alpha);

// Normalized l1 distance (1/n) * sum |v_i - w_i|.
Rational L1(std::span<const Rational> v, std::span<const Rational> w);
Rational L1Rows(const ValueMatrix& m, std::size_t a, std::size_t b);

// Rows (f(x_1), ..., f(x_n)) for every f, repeats in xi retained.
ValueMatrix Restrict(const FunctionClass& f, std::span<const PointIndex> xi);

}  // namespace scaledim

#endif  // SCALEDIM_FUNCTION_CLASS_H_
