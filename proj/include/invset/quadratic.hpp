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

#include "invset/polynomial.hpp"
#include "invset/rational.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <variant>

namespace invset {

/// n = root^2 * core with core square-free.
struct SquareFreeSplit {
  BigInt root;
  BigInt core;
};

namespace detail {

inline void split_u64(std::uint64_t m, std::uint64_t& root, std::uint64_t& core) {
  root = 1;
  core = 1;
  for (std::uint64_t p = 2; p * p * p <= m; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) root *= p;
    if (e % 2 == 1) core *= p;
  }
  // Remaining cofactor has at most two prime factors, all larger than the
  // trial bound: it is 1, a prime, a prime square, or a product of two
  // distinct primes.
  if (m > 1) {
    auto s = static_cast<std::uint64_t>(boost::multiprecision::sqrt(BigInt(m)));
    if (s * s == m) {
      root *= s;
    } else {
      core *= m;
    }
  }
}

}  // namespace detail

/// Square-free decomposition of n >= 1 by trial division up to cbrt(n).
/// Inputs wider than 64 bits must shed small factors (below 10^7) until the
/// cofactor fits; otherwise std::domain_error is thrown.
inline SquareFreeSplit square_free_split(const BigInt& n) {
  if (n <= 0) throw std::domain_error("square_free_split needs n >= 1");
  BigInt m = n;
  BigInt root = 1;
  BigInt core = 1;
  // Strip small primes in BigInt arithmetic until the cofactor fits 64 bits.
  const BigInt u64_max = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t p = 2; m > u64_max; p += (p == 2 ? 1 : 2)) {
    if (p > 10'000'000) {
      throw std::domain_error("square_free_split: integer too large to factor");
    }
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) root *= p;
    if (e % 2 == 1) core *= p;
  }
  std::uint64_t r64 = 1;
  std::uint64_t c64 = 1;
  detail::split_u64(m.convert_to<std::uint64_t>(), r64, c64);
  // Overlap between the BigInt phase and the 64-bit phase is impossible:
  // every prime stripped above was fully divided out.
  return {root * r64, core * c64};
}

inline bool is_perfect_square(const BigInt& n) {
  if (n < 0) return false;
  const BigInt s = boost::multiprecision::sqrt(n);
  return s * s == n;
}

/// Exact q0 + q1*sqrt(d), d square-free. Canonical: q1 == 0 implies d == 1.
class QuadraticValue {
 public:
  QuadraticValue() = default;
  explicit QuadraticValue(Rational q0) : q0_(std::move(q0)) {}

  /// d must be square-free and positive. d == 1 folds q1 into q0.
  QuadraticValue(Rational q0, Rational q1, BigInt d)
      : q0_(std::move(q0)), q1_(std::move(q1)), d_(std::move(d)) {
    if (d_ < 1) throw std::invalid_argument("QuadraticValue radicand must be positive");
    if (d_ == 1) {
      q0_ += q1_;
      q1_ = 0;
    } else if (q1_ == 0) {
      d_ = 1;
    }
  }

  const Rational& rational_part() const { return q0_; }
  const Rational& surd_coefficient() const { return q1_; }
  const BigInt& radicand() const { return d_; }
  bool is_rational() const { return q1_ == 0; }

  /// (y - q0)^2 - q1^2 d, or y - q0 for rational values.
  IntPolynomial minimal_polynomial() const {
    if (is_rational()) return IntPolynomial::from_rational({Rational(1), Rational(-q0_)});
    const Rational c = q0_ * q0_ - q1_ * q1_ * Rational(d_);
    return IntPolynomial::from_rational({Rational(1), Rational(-2 * q0_), c});
  }

  long double approx() const {
    return to_long_double(q0_) +
           to_long_double(q1_) * std::sqrt(d_.convert_to<long double>());
  }

  std::string to_string() const {
    if (is_rational()) return invset::to_string(q0_);
    std::string out;
    if (q0_ != 0) out = invset::to_string(q0_) + " + ";
    return out + "(" + invset::to_string(q1_) + ")*sqrt(" + d_.str() + ")";
  }

  friend bool operator==(const QuadraticValue&, const QuadraticValue&) = default;

 private:
  Rational q0_ = 0;
  Rational q1_ = 0;
  BigInt d_ = 1;
};

/// Result of taking an exact square root: a rational, or q1*sqrt(d).
using SqrtResult = std::variant<Rational, QuadraticValue>;

/// sqrt(r) for r >= 0: the nonnegative rational root when r is a rational
/// square, else the canonical q1*sqrt(d) with q1 > 0.
inline SqrtResult sqrt_classify(const Rational& r) {
  if (r < 0) throw std::domain_error("sqrt_classify: negative input");
  if (r == 0) return Rational(0);
  const BigInt p = numerator_of(r);
  const BigInt q = denominator_of(r);
  // gcd(p, q) == 1, so the square-free parts of p and q are coprime and
  // sqrt(p/q) = (fp / (fq * dq)) * sqrt(dp * dq).
  const auto sp = square_free_split(p);
  const auto sq = square_free_split(q);
  const BigInt d = sp.core * sq.core;
  const Rational coeff(sp.root, sq.root * sq.core);
  if (d == 1) return coeff;
  return QuadraticValue(Rational(0), coeff, d);
}

}  // namespace invset
