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

#ifndef SCALEDIM_RATIONAL_H_
#define SCALEDIM_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace scaledim {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Exact rational number with 64-bit numerator and denominator, always kept
// in lowest terms with a positive denominator. Intermediate products are
// formed in 128 bits; a result that does not fit raises ErrorCode::kOverflow
// instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  // Largest integer <= *this, smallest integer >= *this.
  std::int64_t floor() const;
  std::int64_t ceil() const;

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  BigRational to_big() const { return BigRational(num_, den_); }

  // "p/q", or "p" when the denominator is one.
  std::string str() const;

  // Accepts "p/q", "p", and finite decimals such as "0.25" or "-1.5e-2".
  static Rational Parse(std::string_view text);

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(0) - a; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

 private:
  static Rational FromWide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Rational Abs(const Rational& r);
Rational Min(const Rational& a, const Rational& b);
Rational Max(const Rational& a, const Rational& b);

std::int64_t Gcd(std::int64_t a, std::int64_t b);
// Least common multiple; raises kOverflow past 63 bits.
std::int64_t Lcm(std::int64_t a, std::int64_t b);

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Decimal rendering used in CSV convenience columns.
std::string ToDecimal(const BigRational& r, int digits = 12);
std::string ToDecimal(const Rational& r, int digits = 12);

}  // namespace scaledim

#endif  // SCALEDIM_RATIONAL_H_
