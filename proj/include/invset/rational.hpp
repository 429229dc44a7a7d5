// Copyright 2026 The invset Authors
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

#pragma once

// Arbitrary-precision integers and reduced fractions shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace invset {

using BigInt = boost::multiprecision::cpp_int;

/// Reduced fraction num/den with den >= 1. cpp_rational canonicalizes on
/// every operation, so gcd(|num|, den) == 1 holds for every live value.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator_of(const Rational& q) {
  return boost::multiprecision::numerator(q);
}

inline BigInt denominator_of(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

inline bool is_integer(const Rational& q) { return denominator_of(q) == 1; }

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  return den < 0 ? Rational(BigInt(-num), BigInt(-den)) : Rational(num, den);
}

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// Always "num/den", including integers ("-1/1"). Round-trips through
/// parse_rational.
inline std::string to_string(const Rational& q) {
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

/// Integer-valued rationals print without the "/1".
inline std::string to_short_string(const Rational& q) {
  if (is_integer(q)) return numerator_of(q).str();
  return to_string(q);
}

namespace detail {

inline BigInt parse_integer(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw std::invalid_argument("expected digits");
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') {
      throw std::invalid_argument("invalid character in integer: '" +
                                  std::string(text) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace detail

/// Accepts "n", "n/d" and signed forms. Throws std::invalid_argument.
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(detail::parse_integer(text));
  const BigInt num = detail::parse_integer(text.substr(0, slash));
  const BigInt den = detail::parse_integer(text.substr(slash + 1));
  return make_rational(num, den);
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline long double to_long_double(const Rational& q) {
  return q.convert_to<long double>();
}

inline BigInt ipow(BigInt base, unsigned exponent) {
  BigInt result = 1;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

inline Rational rpow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("zero to a negative power");
    return rpow(Rational(1) / base, -exponent);
  }
  return Rational(ipow(numerator_of(base), static_cast<unsigned>(exponent)),
                  ipow(denominator_of(base), static_cast<unsigned>(exponent)));
}

}  // namespace invset
