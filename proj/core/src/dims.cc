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

#include "scaledim/dims.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>

#include "scaledim/error.h"
#include "scaledim/grid.h"
#include "scaledim/guard.h"

namespace scaledim {
namespace {

using PointSet = std::vector<PointIndex>;
using ShatterTest = std::function<bool(const PointSet&, DimensionWitness*)>;

std::size_t FloorLog2(std::size_t n) {
  return n == 0 ? 0 : static_cast<std::size_t>(std::bit_width(n) - 1);
}

void CheckSize(std::size_t points, std::size_t rows) {
  guard::Check(points, guard::kDimsMaxPoints, "dimension search domain size");
  guard::Check(rows, guard::kDimsMaxRows, "dimension search class size");
}

// Shattering is hereditary, so the sets shattered at size d are exactly the
// candidates whose (d-1)-subsets were all shattered and which pass `test`.
// Candidates are visited in lexicographic order, so the first success on
// the last nonempty level is the lexicographically smallest witness.
DimensionResult LevelSearch(std::size_t n, std::size_t cap, DimensionKind kind,
                            const ShatterTest& test) {
  DimensionResult best;
  best.witness.kind = kind;
  std::vector<PointSet> level = {PointSet{}};
  std::set<PointSet> level_index = {PointSet{}};
  for (std::size_t d = 1; d <= cap; ++d) {
    std::vector<PointSet> next;
    DimensionWitness first;
    for (const PointSet& s : level) {
      const PointIndex start = s.empty() ? 0 : s.back() + 1;
      for (PointIndex j = start; j < n; ++j) {
        PointSet cand = s;
        cand.push_back(j);
        bool hereditary = true;
        for (std::size_t k = 0; k + 1 < cand.size() && hereditary; ++k) {
          PointSet sub = cand;
          sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(k));
          hereditary = level_index.count(sub) > 0;
        }
        if (!hereditary) continue;
        DimensionWitness w;
        w.kind = kind;
        if (!test(cand, &w)) continue;
        w.points = cand;
        if (next.empty()) first = std::move(w);
        next.push_back(std::move(cand));
      }
    }
    if (next.empty()) break;
    best.size = d;
    best.witness = std::move(first);
    level = std::move(next);
    level_index = std::set<PointSet>(level.begin(), level.end());
  }
  return best;
}

// Ternary row as two masks over the domain: `care` has the non-* points and
// `ones` the points labelled 1.
struct MaskRow {
  std::uint64_t care;
  std::uint64_t ones;
  auto operator<=>(const MaskRow&) const = default;
};

bool MasksShatter(const std::vector<MaskRow>& rows, const PointSet& s) {
  std::uint64_t mask = 0;
  for (PointIndex p : s) mask |= std::uint64_t{1} << p;
  const std::size_t need = std::size_t{1} << s.size();
  if (rows.size() < need) return false;
  std::vector<char> seen(need, 0);
  std::size_t found = 0;
  for (const MaskRow& r : rows) {
    if ((r.care & mask) != mask) continue;
    std::size_t pattern = 0;
    for (std::size_t t = 0; t < s.size(); ++t) {
      pattern |= static_cast<std::size_t>((r.ones >> s[t]) & 1) << t;
    }
    if (!seen[pattern]) {
      seen[pattern] = 1;
      if (++found == need) return true;
    }
  }
  return false;
}

DimensionResult MaskVcdim(std::vector<MaskRow> rows, std::size_t n,
                          DimensionKind kind) {
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  const std::size_t cap = std::min(n, FloorLog2(rows.size()));
  return LevelSearch(n, cap, kind, [&](const PointSet& s, DimensionWitness*) {
    return MasksShatter(rows, s);
  });
}

std::vector<MaskRow> PsiMasks(const FunctionClass& f, const Rational& r,
                              const Rational& gamma) {
  const GridThresholds t(f.denominator(), r, gamma);
  std::vector<MaskRow> rows;
  rows.reserve(f.num_functions());
  for (std::size_t i = 0; i < f.num_functions(); ++i) {
    MaskRow m{0, 0};
    for (PointIndex x = 0; x < f.num_points(); ++x) {
      const Ternary v = t.Classify(f.numerator(i, x));
      if (v == Ternary::kStar) continue;
      m.care |= std::uint64_t{1} << x;
      if (v == Ternary::kOne) m.ones |= std::uint64_t{1} << x;
    }
    rows.push_back(m);
  }
  return rows;
}

std::vector<std::vector<std::int64_t>> DistinctRows(const FunctionClass& f) {
  std::set<std::vector<std::int64_t>> rows;
  for (std::size_t i = 0; i < f.num_functions(); ++i) {
    const auto r = f.values().row(i);
    rows.emplace(r.begin(), r.end());
  }
  return {rows.begin(), rows.end()};
}

// Per-coordinate threshold choice for the fat and sfat searches: the label
// each distinct row receives at that coordinate.
struct CoordinateOption {
  Rational threshold;
  std::pair<Rational, Rational> level;
  std::vector<Ternary> code;
};

bool ShatterDfs(const std::vector<const std::vector<CoordinateOption>*>& opts,
                std::size_t depth, const std::vector<std::uint32_t>& alive,
                const std::vector<std::uint32_t>& patterns,
                std::vector<std::size_t>* choice) {
  const std::size_t d = opts.size();
  if (depth == d) return true;
  const std::size_t need = std::size_t{1} << (depth + 1);
  const auto& options = *opts[depth];
  for (std::size_t o = 0; o < options.size(); ++o) {
    const auto& code = options[o].code;
    std::vector<std::uint32_t> next_alive;
    std::vector<std::uint32_t> next_patterns;
    for (std::size_t k = 0; k < alive.size(); ++k) {
      const Ternary t = code[alive[k]];
      if (t == Ternary::kStar) continue;
      next_alive.push_back(alive[k]);
      next_patterns.push_back(patterns[k] |
                              (t == Ternary::kOne ? 1u << depth : 0u));
    }
    if (next_alive.size() < need) continue;
    std::vector<char> seen(need, 0);
    std::size_t found = 0;
    for (std::uint32_t p : next_patterns) {
      if (!seen[p]) {
        seen[p] = 1;
        ++found;
      }
    }
    if (found < need) continue;
    (*choice)[depth] = o;
    if (ShatterDfs(opts, depth + 1, next_alive, next_patterns, choice)) {
      return true;
    }
  }
  return false;
}

DimensionResult OptionSearch(
    const std::vector<std::vector<CoordinateOption>>& per_point,
    std::size_t rows, DimensionKind kind) {
  const std::size_t n = per_point.size();
  const std::size_t cap = std::min(n, FloorLog2(rows));
  std::vector<std::uint32_t> all(rows);
  for (std::size_t i = 0; i < rows; ++i) all[i] = static_cast<std::uint32_t>(i);
  const std::vector<std::uint32_t> zero(rows, 0);
  return LevelSearch(n, cap, kind, [&](const PointSet& s, DimensionWitness* w) {
    std::vector<const std::vector<CoordinateOption>*> opts;
    for (PointIndex p : s) {
      if (per_point[p].empty()) return false;
      opts.push_back(&per_point[p]);
    }
    std::vector<std::size_t> choice(s.size(), 0);
    if (!ShatterDfs(opts, 0, all, zero, &choice)) return false;
    for (std::size_t t = 0; t < s.size(); ++t) {
      const CoordinateOption& o = per_point[s[t]][choice[t]];
      if (kind == DimensionKind::kSfat) {
        w->levels.push_back(o.level);
      } else {
        w->thresholds.push_back(o.threshold);
      }
    }
    return true;
  });
}

std::vector<std::int64_t> DistinctColumnValues(
    const std::vector<std::vector<std::int64_t>>& rows, PointIndex x) {
  std::set<std::int64_t> vals;
  for (const auto& r : rows) vals.insert(r[x]);
  return {vals.begin(), vals.end()};
}

}  // namespace

const char* DimensionKindName(DimensionKind kind) {
  switch (kind) {
    case DimensionKind::kVcdimStar:
      return "vcdim_star";
    case DimensionKind::kFatV:
      return "fatv";
    case DimensionKind::kFat:
      return "fat";
    case DimensionKind::kSfat:
      return "sfat";
  }
  return "?";
}

DimensionKind ParseDimensionKind(const std::string& name) {
  if (name == "vcdim_star") return DimensionKind::kVcdimStar;
  if (name == "fatv") return DimensionKind::kFatV;
  if (name == "fat") return DimensionKind::kFat;
  if (name == "sfat") return DimensionKind::kSfat;
  Fail(ErrorCode::kInvalidArgument, "unknown dimension kind '" + name +
                                        "' (expected vcdim_star, fatv, fat "
                                        "or sfat)");
}

DimensionResult VcdimStar(const TernaryClass& g) {
  CheckSize(g.num_points(), g.num_functions());
  std::vector<MaskRow> rows;
  rows.reserve(g.num_functions());
  for (std::size_t i = 0; i < g.num_functions(); ++i) {
    MaskRow m{0, 0};
    for (PointIndex x = 0; x < g.num_points(); ++x) {
      const Ternary v = g.at(i, x);
      if (v == Ternary::kStar) continue;
      m.care |= std::uint64_t{1} << x;
      if (v == Ternary::kOne) m.ones |= std::uint64_t{1} << x;
    }
    rows.push_back(m);
  }
  return MaskVcdim(std::move(rows), g.num_points(), DimensionKind::kVcdimStar);
}

std::size_t VcDimension(const std::vector<std::uint64_t>& patterns,
                        std::size_t width) {
  Require(width <= 63, "pattern width must be at most 63");
  const std::uint64_t all = (std::uint64_t{1} << width) - 1;
  std::vector<MaskRow> rows;
  rows.reserve(patterns.size());
  for (std::uint64_t p : patterns) rows.push_back({all, p & all});
  return MaskVcdim(std::move(rows), width, DimensionKind::kVcdimStar).size;
}

DimensionResult FatV(const FunctionClass& f, const Rational& gamma) {
  Require(gamma > Rational(0), "gamma must be positive");
  CheckSize(f.num_points(), f.num_functions());
  const std::int64_t den = f.denominator();
  std::set<std::int64_t> values(f.values().numerators().begin(),
                                f.values().numerators().end());
  std::set<Rational> candidates = {Rational(0), Rational(1)};
  for (std::int64_t v : values) {
    for (const Rational& r :
         {Rational(v, den) - gamma, Rational(v, den) + gamma}) {
      if (r >= Rational(0) && r <= Rational(1)) candidates.insert(r);
    }
  }
  DimensionResult best;
  best.witness.kind = DimensionKind::kFatV;
  bool have = false;
  for (const Rational& r : candidates) {
    DimensionResult at_r = MaskVcdim(PsiMasks(f, r, gamma), f.num_points(),
                                     DimensionKind::kFatV);
    if (at_r.size == 0) continue;
    const bool better =
        !have || at_r.size > best.size ||
        (at_r.size == best.size && at_r.witness.points < best.witness.points);
    if (better) {
      have = true;
      best = std::move(at_r);
      best.witness.thresholds = {r};
    }
  }
  return best;
}

DimensionResult Fat(const FunctionClass& f, const Rational& gamma) {
  Require(gamma > Rational(0), "gamma must be positive");
  CheckSize(f.num_points(), f.num_functions());
  const auto rows = DistinctRows(f);
  const std::int64_t den = f.denominator();
  std::vector<std::vector<CoordinateOption>> per_point(f.num_points());
  for (PointIndex x = 0; x < f.num_points(); ++x) {
    const auto vals = DistinctColumnValues(rows, x);
    std::set<Rational> candidates;
    for (std::int64_t v : vals) {
      for (const Rational& r :
           {Rational(v, den) - gamma, Rational(v, den) + gamma}) {
        if (r >= Rational(0) && r <= Rational(1)) candidates.insert(r);
      }
    }
    std::set<std::vector<Ternary>> seen_codes;
    for (const Rational& r : candidates) {
      const GridThresholds t(den, r, gamma);
      CoordinateOption o;
      o.threshold = r;
      bool has_zero = false;
      bool has_one = false;
      for (const auto& row : rows) {
        const Ternary v = t.Classify(row[x]);
        has_zero |= v == Ternary::kZero;
        has_one |= v == Ternary::kOne;
        o.code.push_back(v);
      }
      if (!has_zero || !has_one) continue;
      if (!seen_codes.insert(o.code).second) continue;
      per_point[x].push_back(std::move(o));
    }
  }
  return OptionSearch(per_point, rows.size(), DimensionKind::kFat);
}

DimensionResult Sfat(const FunctionClass& f, const Rational& gamma) {
  Require(gamma > Rational(0), "gamma must be positive");
  CheckSize(f.num_points(), f.num_functions());
  const auto rows = DistinctRows(f);
  const std::int64_t den = f.denominator();
  std::vector<std::vector<CoordinateOption>> per_point(f.num_points());
  for (PointIndex x = 0; x < f.num_points(); ++x) {
    const auto vals = DistinctColumnValues(rows, x);
    for (std::int64_t l : vals) {
      for (std::int64_t u : vals) {
        if (Rational(u, den) < Rational(l, den) + Rational(2) * gamma) continue;
        CoordinateOption o;
        o.level = {Rational(l, den), Rational(u, den)};
        for (const auto& row : rows) {
          o.code.push_back(row[x] == u   ? Ternary::kOne
                           : row[x] == l ? Ternary::kZero
                                         : Ternary::kStar);
        }
        per_point[x].push_back(std::move(o));
      }
    }
  }
  return OptionSearch(per_point, rows.size(), DimensionKind::kSfat);
}

DimensionResult ComputeDimension(DimensionKind kind, const FunctionClass& f,
                                 const Rational& gamma, const Rational& r) {
  switch (kind) {
    case DimensionKind::kVcdimStar: {
      DimensionResult res = VcdimStar(PsiClass(f, r, gamma));
      res.witness.thresholds = {r};
      return res;
    }
    case DimensionKind::kFatV:
      return FatV(f, gamma);
    case DimensionKind::kFat:
      return Fat(f, gamma);
    case DimensionKind::kSfat:
      return Sfat(f, gamma);
  }
  Fail(ErrorCode::kInvalidArgument, "unknown dimension kind");
}

bool VerifyWitness(const TernaryClass& g, const DimensionWitness& w) {
  const std::size_t d = w.points.size();
  if (d >= 63) return false;
  for (PointIndex p : w.points) {
    if (p >= g.num_points()) return false;
  }
  for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << d);
       ++pattern) {
    bool realized = false;
    for (std::size_t i = 0; i < g.num_functions() && !realized; ++i) {
      realized = true;
      for (std::size_t t = 0; t < d && realized; ++t) {
        const Ternary want =
            (pattern >> t) & 1 ? Ternary::kOne : Ternary::kZero;
        realized = g.at(i, w.points[t]) == want;
      }
    }
    if (!realized) return false;
  }
  return true;
}

bool VerifyWitness(const FunctionClass& f, const Rational& gamma,
                   const DimensionWitness& w) {
  const std::size_t d = w.points.size();
  if (d >= 63) return false;
  std::set<PointIndex> distinct(w.points.begin(), w.points.end());
  if (distinct.size() != d) return false;
  for (PointIndex p : w.points) {
    if (p >= f.num_points()) return false;
  }
  switch (w.kind) {
    case DimensionKind::kVcdimStar:
    case DimensionKind::kFatV:
      if (w.thresholds.size() != 1) return d == 0 && w.thresholds.empty();
      break;
    case DimensionKind::kFat:
      if (w.thresholds.size() != d) return false;
      break;
    case DimensionKind::kSfat:
      if (w.levels.size() != d) return false;
      for (const auto& [l, u] : w.levels) {
        if (u < l + Rational(2) * gamma) return false;
      }
      break;
  }
  auto bit_ok = [&](std::size_t i, std::size_t t, bool one) {
    const Rational v = f.value(i, w.points[t]);
    switch (w.kind) {
      case DimensionKind::kVcdimStar:
      case DimensionKind::kFatV:
        return Psi(v, w.thresholds[0], gamma) ==
               (one ? Ternary::kOne : Ternary::kZero);
      case DimensionKind::kFat:
        return one ? v >= w.thresholds[t] + gamma
                   : v <= w.thresholds[t] - gamma;
      case DimensionKind::kSfat:
        return v == (one ? w.levels[t].second : w.levels[t].first);
    }
    return false;
  };
  for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << d);
       ++pattern) {
    bool realized = false;
    for (std::size_t i = 0; i < f.num_functions() && !realized; ++i) {
      realized = true;
      for (std::size_t t = 0; t < d && realized; ++t) {
        realized = bit_ok(i, t, (pattern >> t) & 1);
      }
    }
    if (!realized) return false;
  }
  return true;
}

}  // namespace scaledim
