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

#include "scaledim/oracles.h"

#include <algorithm>
#include <functional>
#include <set>

namespace scaledim::oracle {
namespace {

// 0 = zero, 1 = star, 2 = one, decided on big rationals.
int Threshold(const BigRational& v, const BigRational& r,
              const BigRational& gamma) {
  if (v >= r + gamma) return 2;
  if (v <= r - gamma) return 0;
  return 1;
}

std::vector<std::vector<std::size_t>> Subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

// True when every pattern in {0,1}^|s| is produced by some row of `codes`,
// where codes[row][j] is 0, 1 (star) or 2 at subset position j.
bool AllPatterns(const std::vector<std::vector<int>>& codes, std::size_t k) {
  for (std::uint64_t pat = 0; pat < (std::uint64_t{1} << k); ++pat) {
    bool found = false;
    for (const auto& row : codes) {
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        ok = row[j] == (((pat >> j) & 1) ? 2 : 0);
      }
      if (ok) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::vector<BigRational> ThresholdGrid(const FunctionClass& f,
                                       const Rational& gamma) {
  const std::int64_t l = Lcm(f.denominator(), gamma.den());
  std::vector<BigRational> grid;
  for (std::int64_t j = 0; j <= 2 * l; ++j) grid.emplace_back(j, 2 * l);
  return grid;
}

// Shattering needs at least 2^k rows, which caps the sizes worth trying.
std::size_t MaxSize(std::size_t points, std::size_t rows) {
  std::size_t k = 0;
  while (k < points && (std::size_t{1} << (k + 1)) <= rows) ++k;
  return k;
}

template <typename Test>
std::size_t LargestShattered(std::size_t points, std::size_t rows, Test test) {
  for (std::size_t k = MaxSize(points, rows); k > 0; --k) {
    for (const auto& s : Subsets(points, k)) {
      if (test(s)) return k;
    }
  }
  return 0;
}

}  // namespace

std::size_t VcdimStar(const TernaryClass& g) {
  return LargestShattered(
      g.num_points(), g.num_functions(), [&](const std::vector<std::size_t>& s) {
        std::vector<std::vector<int>> codes;
        for (std::size_t i = 0; i < g.num_functions(); ++i) {
          std::vector<int> row;
          for (std::size_t x : s) row.push_back(static_cast<int>(g.at(i, x)));
          codes.push_back(row);
        }
        return AllPatterns(codes, s.size());
      });
}

std::size_t FatV(const FunctionClass& f, const Rational& gamma) {
  const BigRational g = gamma.to_big();
  const auto grid = ThresholdGrid(f, gamma);
  return LargestShattered(
      f.num_points(), f.num_functions(), [&](const std::vector<std::size_t>& s) {
        for (const BigRational& r : grid) {
          std::vector<std::vector<int>> codes;
          for (std::size_t i = 0; i < f.num_functions(); ++i) {
            std::vector<int> row;
            for (std::size_t x : s) {
              row.push_back(Threshold(f.value(i, x).to_big(), r, g));
            }
            codes.push_back(row);
          }
          if (AllPatterns(codes, s.size())) return true;
        }
        return false;
      });
}

std::size_t Fat(const FunctionClass& f, const Rational& gamma) {
  const BigRational g = gamma.to_big();
  const auto grid = ThresholdGrid(f, gamma);
  return LargestShattered(
      f.num_points(), f.num_functions(), [&](const std::vector<std::size_t>& s) {
        // Column codes per point for every grid threshold; thresholds giving
        // the same column are interchangeable.
        std::vector<std::vector<std::vector<int>>> options(s.size());
        for (std::size_t j = 0; j < s.size(); ++j) {
          std::set<std::vector<int>> seen;
          for (const BigRational& r : grid) {
            std::vector<int> col;
            for (std::size_t i = 0; i < f.num_functions(); ++i) {
              col.push_back(Threshold(f.value(i, s[j]).to_big(), r, g));
            }
            seen.insert(col);
          }
          options[j].assign(seen.begin(), seen.end());
        }
        std::vector<std::size_t> pick(s.size(), 0);
        while (true) {
          std::vector<std::vector<int>> codes(f.num_functions(),
                                              std::vector<int>(s.size()));
          for (std::size_t j = 0; j < s.size(); ++j) {
            for (std::size_t i = 0; i < f.num_functions(); ++i) {
              codes[i][j] = options[j][pick[j]][i];
            }
          }
          if (AllPatterns(codes, s.size())) return true;
          std::size_t j = 0;
          while (j < s.size() && ++pick[j] == options[j].size()) pick[j++] = 0;
          if (j == s.size()) return false;
        }
      });
}

std::size_t Sfat(const FunctionClass& f, const Rational& gamma) {
  const Rational two_gamma = Rational(2) * gamma;
  return LargestShattered(
      f.num_points(), f.num_functions(), [&](const std::vector<std::size_t>& s) {
        std::vector<std::vector<std::pair<Rational, Rational>>> options(s.size());
        for (std::size_t j = 0; j < s.size(); ++j) {
          std::set<Rational> vals;
          for (std::size_t i = 0; i < f.num_functions(); ++i) {
            vals.insert(f.value(i, s[j]));
          }
          for (const Rational& l : vals) {
            for (const Rational& u : vals) {
              if (u >= l + two_gamma) options[j].push_back({l, u});
            }
          }
          if (options[j].empty()) return false;
        }
        std::vector<std::size_t> pick(s.size(), 0);
        while (true) {
          std::vector<std::vector<int>> codes(f.num_functions(),
                                              std::vector<int>(s.size()));
          for (std::size_t j = 0; j < s.size(); ++j) {
            const auto& [l, u] = options[j][pick[j]];
            for (std::size_t i = 0; i < f.num_functions(); ++i) {
              const Rational v = f.value(i, s[j]);
              codes[i][j] = v == u ? 2 : (v == l ? 0 : 1);
            }
          }
          if (AllPatterns(codes, s.size())) return true;
          std::size_t j = 0;
          while (j < s.size() && ++pick[j] == options[j].size()) pick[j++] = 0;
          if (j == s.size()) return false;
        }
      });
}

std::size_t VcDimension(std::span<const std::uint64_t> patterns,
                        std::size_t width) {
  return LargestShattered(
      width, patterns.size(), [&](const std::vector<std::size_t>& s) {
        std::set<std::uint64_t> seen;
        for (std::uint64_t p : patterns) {
          std::uint64_t proj = 0;
          for (std::size_t j = 0; j < s.size(); ++j) {
            proj |= ((p >> s[j]) & 1) << j;
          }
          seen.insert(proj);
        }
        return seen.size() == (std::size_t{1} << s.size());
      });
}

namespace {

BigRational RowDistance(const ValueMatrix& s, std::size_t a, std::size_t b) {
  BigRational sum = 0;
  for (std::size_t c = 0; c < s.cols(); ++c) {
    sum += (s.value(a, c) - s.value(b, c) < Rational(0)
                ? s.value(b, c) - s.value(a, c)
                : s.value(a, c) - s.value(b, c))
               .to_big();
  }
  return sum / BigRational(static_cast<long long>(s.cols()));
}

}  // namespace

std::size_t PackingNumber(const ValueMatrix& s, const Rational& eps) {
  const std::size_t n = s.rows();
  const BigRational e = eps.to_big();
  std::vector<std::vector<char>> sep(n, std::vector<char>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) sep[a][b] = RowDistance(s, a, b) > e;
  }
  std::size_t best = 0;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    best = std::max(best, cur.size());
    for (std::size_t i = start; i < n; ++i) {
      bool ok = true;
      for (std::size_t j : cur) ok = ok && sep[i][j];
      if (!ok) continue;
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return best;
}

std::size_t ProperCoverNumber(const ValueMatrix& s, const Rational& eps) {
  const std::size_t n = s.rows();
  if (n == 0) return 0;
  const BigRational e = eps.to_big();
  std::vector<std::vector<char>> near(n, std::vector<char>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) near[a][b] = RowDistance(s, a, b) <= e;
  }
  for (std::size_t k = 1; k <= n; ++k) {
    for (const auto& centers : Subsets(n, k)) {
      bool covers = true;
      for (std::size_t r = 0; r < n && covers; ++r) {
        bool hit = false;
        for (std::size_t c : centers) hit = hit || near[c][r];
        covers = hit;
      }
      if (covers) return k;
    }
  }
  return n;
}

std::size_t OptimalMaxOutDegree(std::span<const std::uint64_t> patterns,
                                std::size_t width) {
  const std::set<std::uint64_t> distinct(patterns.begin(), patterns.end());
  const std::vector<std::uint64_t> v(distinct.begin(), distinct.end());
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < v.size(); ++a) {
    for (std::size_t b = a + 1; b < v.size(); ++b) {
      const std::uint64_t diff = v[a] ^ v[b];
      if (diff != 0 && (diff & (diff - 1)) == 0 &&
          diff < (std::uint64_t{1} << width)) {
        edges.push_back({a, b});
      }
    }
  }
  std::size_t best = edges.size();
  for (std::uint64_t o = 0; o < (std::uint64_t{1} << edges.size()); ++o) {
    std::vector<std::size_t> out(v.size(), 0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      ++out[((o >> e) & 1) ? edges[e].second : edges[e].first];
    }
    std::size_t mx = 0;
    for (std::size_t d : out) mx = std::max(mx, d);
    best = std::min(best, mx);
  }
  return best;
}

InequalitySides AggregationInequality(const Rational& y, const Rational& tau,
                                      const Rational& gamma,
                                      std::span<const int> b) {
  // Exact integers on the common grid 1/L of y, tau and gamma.
  const std::int64_t l = Lcm(Lcm(y.den(), tau.den()), gamma.den());
  const std::int64_t yy = y.num() * (l / y.den());
  const std::int64_t t = tau.num() * (l / tau.den());
  const std::int64_t g = gamma.num() * (l / gamma.den());
  std::int64_t votes = 0;
  std::int64_t wrong = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const std::int64_t r = t * static_cast<std::int64_t>(i + 1);
    votes += b[i];
    if (yy >= r + g) {
      wrong += b[i] != 1;
    } else if (yy <= r - g) {
      wrong += b[i] != 0;
    }
  }
  const std::int64_t diff = yy - t * votes;
  return {BigRational(diff < 0 ? -diff : diff, l),
          BigRational(2 * t + g + t * wrong, l)};
}

std::vector<std::vector<Rational>> Restrict(const FunctionClass& f,
                                            std::span<const PointIndex> xi) {
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < f.num_functions(); ++i) {
    std::vector<Rational> row;
    for (PointIndex x : xi) row.push_back(f.value(i, x));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace scaledim::oracle
