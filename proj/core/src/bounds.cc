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

#include "scaledim/bounds.h"

#include <cmath>
#include <limits>

#include "scaledim/error.h"

namespace scaledim {
namespace {

std::int64_t CeilToInt(double x, const char* what) {
  if (!std::isfinite(x) || x > 9.0e18) {
    Fail(ErrorCode::kOverflow, std::string(what) + " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(std::ceil(x));
}

double Log2Big(const BigInt& v) {
  const std::size_t bits = boost::multiprecision::msb(v) + 1;
  if (bits <= 60) return std::log2(static_cast<double>(v));
  const BigInt top = v >> (bits - 60);
  return std::log2(static_cast<double>(top)) + static_cast<double>(bits - 60);
}

}  // namespace

LogNumber LogNumber::FromLog(double log_value) {
  LogNumber n;
  n.log_ = log_value;
  n.zero_ = false;
  return n;
}

LogNumber LogNumber::FromValue(double value) {
  Require(value >= 0, "log-domain numbers must be non-negative");
  if (value == 0) return Zero();
  return FromLog(std::log(value));
}

LogNumber LogNumber::FromBig(const BigInt& value) {
  Require(value >= 0, "log-domain numbers must be non-negative");
  if (value == 0) return Zero();
  return FromLog(Log2Big(value) * std::log(2.0));
}

double LogNumber::log() const {
  return zero_ ? -std::numeric_limits<double>::infinity() : log_;
}

double LogNumber::value() const { return zero_ ? 0.0 : std::exp(log_); }

bool operator<=(const LogNumber& a, const LogNumber& b) {
  if (a.zero_) return true;
  if (b.zero_) return false;
  return a.log_ <= b.log_;
}

Rational PredictionBoundCorrected(std::int64_t d, std::int64_t m,
                                  const Rational& gamma,
                                  std::optional<Rational> tau) {
  Require(m >= 1, "m must be at least 1");
  Require(d >= 0, "d must be non-negative");
  Require(gamma > Rational(0), "gamma must be positive");
  Rational v = Rational(d, m) + gamma;
  if (tau) {
    Require(*tau > Rational(0), "tau must be positive");
    v += Rational(2) * *tau;
  }
  return v;
}

Rational PredictionBoundOriginal(std::int64_t d, std::int64_t m,
                                 const Rational& gamma) {
  Require(m >= 1, "m must be at least 1");
  Require(d >= 0, "d must be non-negative");
  Require(gamma > Rational(0), "gamma must be positive");
  return Rational(2 * d, m) + gamma;
}

PredictionSampleSize MPred(std::int64_t d, const Rational& eps,
                           const Rational& alpha) {
  Require(alpha > Rational(0) && alpha < eps,
          "m_pred requires 0 < alpha < eps");
  Require(d >= 0, "d must be non-negative");
  PredictionSampleSize s;
  if (d == 0) {
    s.printed = s.corrected = 1;
    s.degenerate = true;
    return s;
  }
  s.printed = (Rational(2 * d) / alpha).ceil();
  s.corrected = (Rational(d) / alpha).ceil();
  return s;
}

LogNumber PackBoundFatV(const Rational& eps, const Rational& alpha,
                        std::int64_t b, std::int64_t d) {
  Require(alpha > Rational(0) && alpha < eps / Rational(4),
          "pack_bound_fatv requires 0 < alpha < eps / 4");
  Require(d >= 1 && b >= 1, "pack_bound_fatv requires d >= 1 and b >= 1");
  const double a = alpha.to_double();
  return LogNumber::FromLog(std::log(eps.to_double() / (2 * a)) +
                            (4.0 * static_cast<double>(d) / a) *
                                std::log(static_cast<double>(b + 1)));
}

BigInt SauerY(std::int64_t m, std::int64_t d, std::int64_t b) {
  Require(m >= d && d >= 0 && b >= 1, "sauer_y requires m >= d >= 0, b >= 1");
  BigInt sum = 0;
  BigInt binom = 1;
  BigInt power = 1;
  for (std::int64_t i = 0; i <= d; ++i) {
    if (i > 0) {
      binom = binom * (m - i + 1) / i;
      power *= (1 + b);
    }
    sum += binom * power;
  }
  return sum;
}

PackBoundFatResult PackBoundFat(const Rational& eps, std::int64_t b,
                                std::int64_t m, std::int64_t d) {
  Require(Rational(b) > Rational(4) / eps, "pack_bound_fat requires b > 4/eps");
  Require(m >= d && d >= 1, "pack_bound_fat requires m >= d >= 1");
  const BigInt y = SauerY(m, d, b);
  const std::int64_t log2_floor =
      static_cast<std::int64_t>(boost::multiprecision::msb(y));
  const std::int64_t exponent = 3 * (log2_floor + 1);
  Require(exponent <= 1000000, "pack_bound_fat exponent too large");
  PackBoundFatResult r;
  r.exact = 2 * boost::multiprecision::pow(BigInt(b),
                                           static_cast<unsigned>(exponent));
  r.exact_log = LogNumber::FromLog(std::log(2.0) +
                                   static_cast<double>(exponent) *
                                       std::log(static_cast<double>(b)));
  const double dd = static_cast<double>(d);
  r.loose = LogNumber::FromLog(
      std::log(2.0) +
      6 * dd *
          std::log2(2 * static_cast<double>(b) * std::exp(1.0) *
                    static_cast<double>(m) / dd) *
          std::log(static_cast<double>(b)));
  return r;
}

double HoeffdingTail(double eps, std::int64_t m, double a, double b) {
  Require(b > a, "hoeffding requires b > a");
  Require(m >= 1, "hoeffding requires m >= 1");
  Require(eps > 0, "hoeffding requires eps > 0");
  return 2 * std::exp(-2 * eps * eps * static_cast<double>(m) /
                      ((b - a) * (b - a)));
}

std::int64_t InverseSampleSize(double y1, double y2, double y3, double y4,
                               double delta) {
  Require(y1 > 0 && y2 > 0 && y4 > 0 && delta > 0 && y3 >= 1,
          "inverse_sample_size requires y1, y2, y4, delta > 0 and y3 >= 1");
  const double m = (2 / y4) * (y2 * std::log(2 * y2 * y3 / y4) +
                               std::log(y1 / delta));
  return std::max<std::int64_t>(1, CeilToInt(m, "inverse sample size"));
}

double InverseSampleSizeLhs(double y1, double y2, double y3, double y4,
                            std::int64_t m) {
  const double md = static_cast<double>(m);
  return y1 * std::exp(y2 * std::log(y3 * md) - y4 * md);
}

namespace {

void CheckGcArgs(const Rational& eps, const Rational& delta, std::int64_t d,
                 const Rational& kappa) {
  Require(eps > Rational(0) && eps <= Rational(1), "eps must lie in (0,1]");
  Require(delta > Rational(0) && delta < Rational(1),
          "delta must lie in (0,1)");
  Require(kappa > Rational(0) && kappa < Rational(1, 4),
          "kappa must lie in (0, 1/4)");
  Require(d >= 0, "d must be non-negative");
}

Rational GridAlpha(const Rational& eps, const Rational& kappa) {
  return Rational(1, (Rational(1) / (kappa * eps)).ceil());
}

}  // namespace

GcSampleSize GcSampleFat(const Rational& eps, const Rational& delta,
                         std::int64_t d, const Rational& kappa) {
  CheckGcArgs(eps, delta, d, kappa);
  GcSampleSize s;
  s.alpha = GridAlpha(eps, kappa);
  const double a = s.alpha.to_double();
  const double ln2 = std::log(2.0);
  const double l7 = std::log(7 / a);
  const double inner = 6 * static_cast<double>(d) / ln2 * l7 *
                       std::log((336 * std::exp(1.0) / (a * ln2)) * l7);
  const double m =
      (4 / (a * a)) * (inner + std::log(8 / delta.to_double()));
  s.side_condition =
      static_cast<std::int64_t>(std::floor(std::log(4.0) / (2 * a * a))) + 1;
  s.m = std::max(CeilToInt(m, "gc_sample_fat"), s.side_condition);
  return s;
}

GcSampleSize GcSampleFatV(const Rational& eps, const Rational& delta,
                          std::int64_t d, const Rational& kappa) {
  CheckGcArgs(eps, delta, d, kappa);
  GcSampleSize s;
  s.alpha = GridAlpha(eps, kappa);
  const double a = s.alpha.to_double();
  const double m = 8 * static_cast<double>(d) / (a * a * a) * std::log(6 / a) +
                   (1 / (2 * a * a)) *
                       std::log(8 * eps.to_double() / (delta.to_double() * a));
  s.m = std::max<std::int64_t>(1, CeilToInt(m, "gc_sample_fatv"));
  return s;
}

CoverLearnerPlan PlanCoverLearner(const Rational& eps, const Rational& delta,
                                  const Rational& kappa, std::int64_t d,
                                  double c) {
  Require(eps > Rational(0) && eps <= Rational(1), "eps must lie in (0,1]");
  Require(delta > Rational(0) && delta < Rational(1),
          "delta must lie in (0,1)");
  Require(kappa > Rational(0) && kappa < Rational(1, 2),
          "kappa must lie in (0, 1/2)");
  Require(d >= 0, "d must be non-negative");
  Require(c > 0, "the block-size constant must be positive");
  CoverLearnerPlan p;
  p.alpha = GridAlpha(eps, kappa);
  p.gamma = p.alpha / Rational(13);
  p.cover_radius = eps - Rational(9) * p.gamma;
  const double g = p.gamma.to_double();
  const double lg = std::log(1 / g);
  const double k_main =
      (c / (g * g)) * (static_cast<double>(d) * lg * lg + lg);
  const std::int64_t k_hoeffding =
      static_cast<std::int64_t>(
          std::floor((1 / (4 * g * g)) * std::log(2 / g))) +
      1;
  p.k = std::max(CeilToInt(k_main, "cover learner block size"), k_hoeffding);
  const double e = eps.to_double();
  const double dl = delta.to_double();
  p.n1 = std::max<std::int64_t>(1, CeilToInt((e / g) * std::log(2 / dl), "N1"));
  p.n2 = CeilToInt((2 / (g * g)) * std::log(4 * static_cast<double>(p.n1) / dl),
                   "N2");
  p.total = p.n1 * (2 * p.k - 1) + p.n2;
  return p;
}

}  // namespace scaledim
