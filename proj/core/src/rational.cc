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

#include "scaledim/rational.h"

#include <charconv>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <sstream>

#include "scaledim/error.h"

namespace scaledim {
namespace {

__int128 WideGcd(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();

std::int64_t ParseInteger(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  if (begin != end && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || begin == end) {
    Fail(ErrorCode::kParse,
         "malformed rational '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) Fail(ErrorCode::kInvalidArgument, "zero denominator");
  *this = FromWide(num, den);
}

Rational Rational::FromWide(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = WideGcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num > kMax || num < -kMax || den > kMax) {
    Fail(ErrorCode::kOverflow, "rational arithmetic overflow");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

std::int64_t Rational::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::int64_t Rational::ceil() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::Parse(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
    text.remove_prefix(1);
  }
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) {
    text.remove_suffix(1);
  }
  if (text.empty()) Fail(ErrorCode::kParse, "empty rational");
  const std::string_view whole = text;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t p = ParseInteger(text.substr(0, slash), whole);
    std::int64_t q = ParseInteger(text.substr(slash + 1), whole);
    if (q == 0) Fail(ErrorCode::kParse, "zero denominator in '" +
                                            std::string(whole) + "'");
    return Rational(p, q);
  }
  // Decimal with optional exponent, converted exactly.
  std::int64_t exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    exponent = ParseInteger(text.substr(e + 1), whole);
    text = text.substr(0, e);
  }
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string digits;
  std::int64_t fraction_digits = 0;
  bool seen_point = false;
  for (char c : text) {
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_point) ++fraction_digits;
    } else {
      Fail(ErrorCode::kParse, "malformed rational '" + std::string(whole) +
                                  "'");
    }
  }
  if (digits.empty()) {
    Fail(ErrorCode::kParse, "malformed rational '" + std::string(whole) + "'");
  }
  Rational value(ParseInteger(digits, whole));
  std::int64_t scale = exponent - fraction_digits;
  Rational ten(10);
  for (std::int64_t i = 0; i < std::abs(scale); ++i) {
    if (scale > 0) {
      value *= ten;
    } else {
      value /= ten;
    }
  }
  return negative ? -value : value;
}

Rational& Rational::operator+=(const Rational& o) {
  *this = FromWide(static_cast<__int128>(num_) * o.den_ +
                       static_cast<__int128>(o.num_) * den_,
                   static_cast<__int128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  *this = FromWide(static_cast<__int128>(num_) * o.den_ -
                       static_cast<__int128>(o.num_) * den_,
                   static_cast<__int128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  *this = FromWide(static_cast<__int128>(num_) * o.num_,
                   static_cast<__int128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) Fail(ErrorCode::kInvalidArgument, "division by zero");
  *this = FromWide(static_cast<__int128>(num_) * o.den_,
                   static_cast<__int128>(den_) * o.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Abs(const Rational& r) { return r < Rational(0) ? -r : r; }
Rational Min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational Max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::int64_t Gcd(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(WideGcd(a, b));
}

std::int64_t Lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  __int128 l = static_cast<__int128>(a) / WideGcd(a, b) * b;
  if (l < 0) l = -l;
  if (l > kMax) Fail(ErrorCode::kOverflow, "grid denominator overflow");
  return static_cast<std::int64_t>(l);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

std::string ToDecimal(const BigRational& r, int digits) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  BigInt scale = boost::multiprecision::pow(BigInt(10), digits);
  // Round half up at the last printed digit.
  BigInt scaled = (num * scale * 2 + den) / (den * 2);
  BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;
  std::string frac_text = frac.str();
  frac_text.insert(0, static_cast<std::size_t>(digits) - frac_text.size(),
                   '0');
  while (!frac_text.empty() && frac_text.back() == '0') frac_text.pop_back();
  if (scaled == 0) sign.clear();
  std::string out = sign + whole.str();
  if (!frac_text.empty()) out += "." + frac_text;
  return out;
}

std::string ToDecimal(const Rational& r, int digits) {
  return ToDecimal(r.to_big(), digits);
}

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "invalid-argument";
    case ErrorCode::kGuardLimit:
      return "guard-limit";
    case ErrorCode::kParse:
      return "parse-error";
    case ErrorCode::kInconsistentPrefix:
      return "inconsistent-prefix";
    case ErrorCode::kOverflow:
      return "overflow";
    case ErrorCode::kInsufficientSample:
      return "insufficient-sample";
    case ErrorCode::kIo:
      return "io-error";
  }
  return "unknown";
}

void Fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace scaledim
