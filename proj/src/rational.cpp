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

#include "ceptool/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace ceptool {

Rational::Rational(std::int64_t value) {
  // mpq_class has no int64 constructor on every platform; go through mpz.
  mpz_class z;
  const std::uint64_t mag =
      value < 0 ? ~static_cast<std::uint64_t>(value) + 1u
                : static_cast<std::uint64_t>(value);
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(mag), 0, 0, &mag);
  if (value < 0) z = -z;
  value_ = mpq_class(z);
}

Rational::Rational(const BigInt& value) : value_(value) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(Rational(num).numerator(), Rational(den).numerator()) {}

Rational::Rational(const mpq_class& value) : value_(value) {
  value_.canonicalize();
}

namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt ParseInteger(std::string_view s, bool allow_sign) {
  bool negative = false;
  if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!AllDigits(s)) {
    throw std::invalid_argument("Rational: malformed integer '" +
                                std::string(s) + "'");
  }
  BigInt z(std::string(s), 10);
  return negative ? BigInt(-z) : z;
}

}  // namespace

Rational Rational::Parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("Rational: empty text");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = ParseInteger(text.substr(0, slash), true);
    BigInt den = ParseInteger(text.substr(slash + 1), false);
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if (int_part.empty() && frac_part.empty())
      throw std::invalid_argument("Rational: malformed decimal");
    BigInt whole = int_part.empty() ? BigInt(0) : ParseInteger(int_part, false);
    BigInt frac = frac_part.empty() ? BigInt(0) : ParseInteger(frac_part, false);
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
    Rational r(BigInt(whole * scale + frac), scale);
    return negative ? -r : r;
  }
  return Rational(ParseInteger(text, true));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(mpq_class(1 / value_));
}

double Rational::to_double() const {
  const mpz_class& num = value_.get_num();
  const mpz_class& den = value_.get_den();
  if (mpz_sizeinbase(num.get_mpz_t(), 2) <= 53 &&
      mpz_sizeinbase(den.get_mpz_t(), 2) <= 53) {
    return num.get_d() / den.get_d();
  }
  return value_.get_d();
}

std::string Rational::ToString() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

std::size_t Rational::Hash() const {
  std::size_t h = mpz_get_ui(value_.get_num_mpz_t());
  h ^= static_cast<std::size_t>(sign() + 1) << 1;
  h = h * 0x9E3779B97F4A7C15ull ^ mpz_get_ui(value_.get_den_mpz_t());
  return h;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.ToString();
}

Rational Pow(const Rational& base, unsigned exponent) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return Rational(num, den);
}

}  // namespace ceptool
