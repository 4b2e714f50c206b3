// Copyright 2026 The ceptool Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CEPTOOL_RATIONAL_HPP_
#define CEPTOOL_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ceptool {

// Arbitrary-precision integer used for counts that overflow 64 bits.
using BigInt = mpz_class;

// Exact rational number, always kept in lowest terms with a positive
// denominator. Thin value wrapper around GMP's mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value);  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& value);

  // Accepts "p", "p/q", "-p/q" and finite decimals such as "0.4" or "-1.25".
  // Throws std::invalid_argument on malformed text or a zero denominator.
  static Rational Parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  Rational abs() const;
  Rational inverse() const;
  // Correctly rounded when numerator and denominator are below 2^53.
  double to_double() const;

  // "p/q", or "p" when the denominator is 1.
  std::string ToString() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::size_t Hash() const;

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational Pow(const Rational& base, unsigned exponent);

// Least common multiple of the denominators; 1 for an empty range.
template <typename Range>
BigInt DenominatorLcm(const Range& values) {
  BigInt l = 1;
  for (const Rational& v : values) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.raw().get_den_mpz_t());
  }
  return l;
}

}  // namespace ceptool

template <>
struct std::hash<ceptool::Rational> {
  std::size_t operator()(const ceptool::Rational& r) const { return r.Hash(); }
};

#endif  // CEPTOOL_RATIONAL_HPP_
