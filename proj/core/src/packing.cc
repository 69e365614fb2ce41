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

#include "scaledim/packing.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "scaledim/error.h"
#include "scaledim/guard.h"

namespace scaledim {
namespace {

// Fixed-size bitset over graph vertices.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : words_((n + 63) / 64, 0) {}

  void Set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void Reset(std::size_t i) {
    words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  }
  bool Test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
  std::size_t Count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool Any() const {
    return std::any_of(words_.begin(), words_.end(),
                       [](std::uint64_t w) { return w != 0; });
  }
  Bits And(const Bits& o) const {
    Bits r = *this;
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= o.words_[k];
    return r;
  }
  Bits AndNot(const Bits& o) const {
    Bits r = *this;
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= ~o.words_[k];
    return r;
  }
  // Indices in increasing order.
  template <typename Fn>
  void ForEach(Fn fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w != 0) {
        const int b = std::countr_zero(w);
        fn(k * 64 + static_cast<std::size_t>(b));
        w &= w - 1;
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

std::vector<Bits> SeparationGraph(const RowMetric& metric,
                                  const Rational& eps) {
  const std::size_t n = metric.matrix().rows();
  std::vector<Bits> adj(n, Bits(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (metric.Separated(a, b, eps)) {
        adj[a].Set(b);
        adj[b].Set(a);
      }
    }
  }
  return adj;
}

// Greedy colouring of `cand` (in the given order); returns vertices sorted by
// colour and the running colour numbers, which bound the clique size of each
// suffix.
void ColourSort(const std::vector<Bits>& adj,
                const std::vector<std::size_t>& cand,
                std::vector<std::size_t>* order,
                std::vector<std::size_t>* colour) {
  order->clear();
  colour->clear();
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t v : cand) {
    std::size_t k = 0;
    for (; k < classes.size(); ++k) {
      bool clash = false;
      for (std::size_t u : classes[k]) {
        if (adj[v].Test(u)) {
          clash = true;
          break;
        }
      }
      if (!clash) break;
    }
    if (k == classes.size()) classes.emplace_back();
    classes[k].push_back(v);
  }
  for (std::size_t k = 0; k < classes.size(); ++k) {
    for (std::size_t v : classes[k]) {
      order->push_back(v);
      colour->push_back(k + 1);
    }
  }
}

std::size_t ColourBound(const std::vector<Bits>& adj, const Bits& cand) {
  std::vector<std::size_t> list;
  cand.ForEach([&](std::size_t v) { list.push_back(v); });
  std::vector<std::size_t> order;
  std::vector<std::size_t> colour;
  ColourSort(adj, list, &order, &colour);
  return colour.empty() ? 0 : colour.back();
}

class MaxClique {
 public:
  explicit MaxClique(const std::vector<Bits>& adj) : adj_(adj) {}

  std::size_t Size() {
    const std::size_t n = adj_.size();
    std::vector<std::size_t> cand(n);
    std::iota(cand.begin(), cand.end(), 0);
    std::stable_sort(cand.begin(), cand.end(),
                     [&](std::size_t a, std::size_t b) {
                       return adj_[a].Count() > adj_[b].Count();
                     });
    best_ = n == 0 ? 0 : 1;
    std::vector<std::size_t> clique;
    Expand(cand, &clique);
    return best_;
  }

  // Lexicographically smallest clique of the given size.
  std::vector<std::size_t> LexSmallest(std::size_t size) {
    const std::size_t n = adj_.size();
    Bits all(n);
    for (std::size_t v = 0; v < n; ++v) all.Set(v);
    std::vector<std::size_t> chosen;
    if (size == 0) return chosen;
    Lex(all, size, &chosen);
    return chosen;
  }

 private:
  void Expand(const std::vector<std::size_t>& cand,
              std::vector<std::size_t>* clique) {
    std::vector<std::size_t> order;
    std::vector<std::size_t> colour;
    ColourSort(adj_, cand, &order, &colour);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (clique->size() + colour[i] <= best_) return;
      const std::size_t v = order[i];
      clique->push_back(v);
      std::vector<std::size_t> next;
      for (std::size_t j = 0; j < i; ++j) {
        if (adj_[v].Test(order[j])) next.push_back(order[j]);
      }
      if (next.empty()) {
        best_ = std::max(best_, clique->size());
      } else {
        Expand(next, clique);
      }
      clique->pop_back();
    }
  }

  bool Lex(const Bits& cand, std::size_t size,
           std::vector<std::size_t>* chosen) {
    if (chosen->size() == size) return true;
    std::vector<std::size_t> list;
    cand.ForEach([&](std::size_t v) { list.push_back(v); });
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (chosen->size() + (list.size() - i) < size) return false;
      const std::size_t v = list[i];
      Bits next(adj_.size());
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        if (adj_[v].Test(list[j])) next.Set(list[j]);
      }
      if (chosen->size() + 1 + ColourBound(adj_, next) < size) continue;
      chosen->push_back(v);
      if (Lex(next, size, chosen)) return true;
      chosen->pop_back();
    }
    return false;
  }

  const std::vector<Bits>& adj_;
  std::size_t best_ = 0;
};

class SetCover {
 public:
  explicit SetCover(std::vector<Bits> covers)
      : covers_(std::move(covers)), n_(covers_.size()) {}

  std::vector<std::size_t> Solve(std::vector<std::size_t> upper) {
    best_ = std::move(upper);
    Bits uncovered(n_);
    for (std::size_t v = 0; v < n_; ++v) uncovered.Set(v);
    std::vector<std::size_t> chosen;
    Search(uncovered, &chosen);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  void Search(const Bits& uncovered, std::vector<std::size_t>* chosen) {
    if (!uncovered.Any()) {
      if (chosen->size() < best_.size()) best_ = *chosen;
      return;
    }
    const std::size_t remaining = uncovered.Count();
    std::size_t widest = 0;
    for (const Bits& c : covers_) {
      widest = std::max(widest, c.And(uncovered).Count());
    }
    const std::size_t lower = (remaining + widest - 1) / widest;
    if (chosen->size() + lower >= best_.size()) return;
    // Branch on the uncovered row with the fewest candidate centers.
    std::size_t pick = n_;
    std::size_t fewest = n_ + 1;
    uncovered.ForEach([&](std::size_t e) {
      std::size_t k = 0;
      for (std::size_t j = 0; j < n_; ++j) k += covers_[j].Test(e) ? 1 : 0;
      if (k < fewest) {
        fewest = k;
        pick = e;
      }
    });
    std::vector<std::pair<std::size_t, std::size_t>> options;
    for (std::size_t j = 0; j < n_; ++j) {
      if (covers_[j].Test(pick)) {
        options.push_back({covers_[j].And(uncovered).Count(), j});
      }
    }
    std::stable_sort(options.begin(), options.end(),
                     [](const auto& a, const auto& b) {
                       return a.first > b.first;
                     });
    for (const auto& [gain, j] : options) {
      chosen->push_back(j);
      Search(uncovered.AndNot(covers_[j]), chosen);
      chosen->pop_back();
    }
  }

  std::vector<Bits> covers_;
  std::size_t n_;
  std::vector<std::size_t> best_;
};

Rational CheckedEps(const Rational& eps) {
  Require(eps >= Rational(0), "epsilon must be non-negative");
  return eps;
}

}  // namespace

const char* PackingMethodName(PackingMethod method) {
  switch (method) {
    case PackingMethod::kExact:
      return "exact";
    case PackingMethod::kGreedyLower:
      return "greedy-lower";
    case PackingMethod::kProperCoverUpper:
      return "proper-cover-upper";
  }
  return "?";
}

RowMetric::RowMetric(const ValueMatrix& m,
                     std::span<const std::int64_t> weights)
    : m_(&m) {
  Require(m.rows() > 0, "row set must be nonempty");
  if (weights.empty()) {
    weights_.assign(m.cols(), 1);
  } else {
    Require(weights.size() == m.cols(), "one weight per column required");
    weights_.assign(weights.begin(), weights.end());
  }
  std::int64_t total = 0;
  for (std::int64_t w : weights_) {
    Require(w >= 0, "column weights must be non-negative");
    total += w;
  }
  Require(total > 0, "column weights must not all be zero");
  const __int128 scale = static_cast<__int128>(total) * m.denominator();
  if (scale > INT64_MAX) Fail(ErrorCode::kOverflow, "metric scale overflow");
  scale_ = static_cast<std::int64_t>(scale);
}

std::int64_t RowMetric::Units(std::size_t a, std::size_t b) const {
  const auto x = m_->row(a);
  const auto y = m_->row(b);
  __int128 sum = 0;
  for (std::size_t c = 0; c < x.size(); ++c) {
    const std::int64_t d = x[c] > y[c] ? x[c] - y[c] : y[c] - x[c];
    sum += static_cast<__int128>(d) * weights_[c];
  }
  if (sum > INT64_MAX) Fail(ErrorCode::kOverflow, "distance overflow");
  return static_cast<std::int64_t>(sum);
}

bool RowMetric::Within(std::size_t a, std::size_t b,
                       const Rational& eps) const {
  return static_cast<__int128>(Units(a, b)) * eps.den() <=
         static_cast<__int128>(eps.num()) * scale_;
}

bool RowMetric::Separated(std::size_t a, std::size_t b,
                          const Rational& eps) const {
  return !Within(a, b, eps);
}

Rational RowMetric::Distance(std::size_t a, std::size_t b) const {
  return Rational(Units(a, b), scale_);
}

PackingResult PackingExact(const ValueMatrix& s, const Rational& eps,
                           std::span<const std::int64_t> weights) {
  CheckedEps(eps);
  guard::Check(s.rows(), guard::kPackingExactMaxRows, "exact packing rows");
  const RowMetric metric(s, weights);
  const auto adj = SeparationGraph(metric, eps);
  MaxClique mc(adj);
  PackingResult r;
  r.epsilon = eps;
  r.method = PackingMethod::kExact;
  r.size = mc.Size();
  r.witness = mc.LexSmallest(r.size);
  return r;
}

PackingResult PackingGreedy(const ValueMatrix& s, const Rational& eps,
                            std::span<const std::size_t> order,
                            std::span<const std::int64_t> weights) {
  CheckedEps(eps);
  guard::Check(s.rows(), guard::kPackingGreedyMaxRows, "greedy packing rows");
  const RowMetric metric(s, weights);
  std::vector<std::size_t> seq;
  if (order.empty()) {
    seq.resize(s.rows());
    std::iota(seq.begin(), seq.end(), 0);
  } else {
    Require(order.size() == s.rows(), "order must be a permutation of rows");
    seq.assign(order.begin(), order.end());
    std::vector<std::size_t> check = seq;
    std::sort(check.begin(), check.end());
    for (std::size_t i = 0; i < check.size(); ++i) {
      Require(check[i] == i, "order must be a permutation of rows");
    }
  }
  PackingResult r;
  r.epsilon = eps;
  r.method = PackingMethod::kGreedyLower;
  for (std::size_t v : seq) {
    bool far = true;
    for (std::size_t u : r.witness) {
      if (!metric.Separated(u, v, eps)) {
        far = false;
        break;
      }
    }
    if (far) r.witness.push_back(v);
  }
  r.size = r.witness.size();
  return r;
}

PackingResult CoverProperExact(const ValueMatrix& s, const Rational& eps,
                               std::span<const std::int64_t> weights) {
  CheckedEps(eps);
  guard::Check(s.rows(), guard::kPackingExactMaxRows, "exact cover rows");
  const RowMetric metric(s, weights);
  const std::size_t n = s.rows();
  std::vector<Bits> covers(n, Bits(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (metric.Within(a, b, eps)) covers[a].Set(b);
    }
  }
  // A maximal packing is a proper cover, which seeds the upper bound.
  std::vector<std::size_t> upper =
      PackingGreedy(s, eps, {}, weights).witness;
  SetCover solver(std::move(covers));
  PackingResult r;
  r.epsilon = eps;
  r.method = PackingMethod::kProperCoverUpper;
  r.witness = solver.Solve(std::move(upper));
  r.size = r.witness.size();
  return r;
}

bool VerifyPacking(const ValueMatrix& s, const Rational& eps,
                   std::span<const std::size_t> witness,
                   std::span<const std::int64_t> weights) {
  const RowMetric metric(s, weights);
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (witness[i] >= s.rows()) return false;
    for (std::size_t j = i + 1; j < witness.size(); ++j) {
      if (!metric.Separated(witness[i], witness[j], eps)) return false;
    }
  }
  return true;
}

bool VerifyCover(const ValueMatrix& s, const Rational& eps,
                 std::span<const std::size_t> centers,
                 std::span<const std::int64_t> weights) {
  const RowMetric metric(s, weights);
  for (std::size_t c : centers) {
    if (c >= s.rows()) return false;
  }
  for (std::size_t a = 0; a < s.rows(); ++a) {
    bool covered = false;
    for (std::size_t c : centers) {
      if (metric.Within(a, c, eps)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

SandwichReport SandwichCheck(const ValueMatrix& s, const Rational& eps) {
  SandwichReport r;
  r.packing_double = PackingExact(s, Rational(2) * eps).size;
  r.cover = CoverProperExact(s, eps).size;
  r.packing = PackingExact(s, eps).size;
  r.holds = r.packing_double <= r.cover && r.cover <= r.packing;
  return r;
}

bool QuantizationCoverCheck(const ValueMatrix& s, const Rational& eps,
                            const Rational& alpha) {
  Require(alpha > Rational(0) && alpha < eps / Rational(2),
          "quantization check requires 0 < alpha < eps / 2");
  const ValueMatrix q = Quantize(s, alpha);
  const PackingResult cover = CoverProperExact(q, eps - alpha);
  if (!VerifyCover(q, eps - alpha, cover.witness)) return false;
  // Stack the original rows (regridded) above the centers and test the
  // cross distances with one metric.
  const ValueMatrix fine = s.Regrid(q.denominator());
  std::vector<std::int64_t> stacked = fine.numerators();
  for (std::size_t c : cover.witness) {
    const auto row = q.row(c);
    stacked.insert(stacked.end(), row.begin(), row.end());
  }
  const ValueMatrix both(q.denominator(), s.cols(), std::move(stacked));
  const RowMetric metric(both);
  for (std::size_t a = 0; a < s.rows(); ++a) {
    bool covered = false;
    for (std::size_t k = 0; k < cover.witness.size() && !covered; ++k) {
      covered = metric.Within(a, s.rows() + k, eps);
    }
    if (!covered) return false;
  }
  return true;
}

bool LossClassCoverCheck(const FunctionClass& f,
                         std::span<const LabeledPoint> z,
                         const Rational& eps) {
  Require(!z.empty(), "loss class check needs a nonempty sample");
  ValidateSample(z, f.num_points());
  std::vector<PointIndex> xs;
  for (const LabeledPoint& p : z) xs.push_back(p.point);
  // Distinct restricted rows; the loss rows are functions of them.
  const ValueMatrix restricted = Restrict(f, xs);
  std::set<std::vector<std::int64_t>> distinct;
  for (std::size_t i = 0; i < restricted.rows(); ++i) {
    const auto r = restricted.row(i);
    distinct.emplace(r.begin(), r.end());
  }
  const std::vector<std::vector<std::int64_t>> rows(distinct.begin(),
                                                     distinct.end());
  const ValueMatrix fx = ValueMatrix::FromRows(f.denominator(), rows);
  const PackingResult cover = CoverProperExact(fx, eps);
  std::vector<std::vector<Rational>> loss_rows;
  for (std::size_t i = 0; i < fx.rows(); ++i) {
    std::vector<Rational> l;
    for (std::size_t c = 0; c < z.size(); ++c) {
      l.push_back(Abs(fx.value(i, c) - z[c].label));
    }
    loss_rows.push_back(std::move(l));
  }
  const ValueMatrix loss = ValueMatrix::FromRationalRows(loss_rows);
  return VerifyCover(loss, eps, cover.witness);
}

}  // namespace scaledim
