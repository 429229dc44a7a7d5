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

#include "invset/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace invset {

/// Primitive integer polynomial with positive leading coefficient.
/// Coefficients are stored leading-first: {2, 0, -1} is 2x^2 - 1.
class IntPolynomial {
 public:
  explicit IntPolynomial(std::vector<BigInt> leading_first)
      : coeffs_(std::move(leading_first)) {
    normalize();
  }

  /// Clears denominators, then normalizes. Input is leading-first.
  static IntPolynomial from_rational(const std::vector<Rational>& leading_first) {
    BigInt l = 1;
    for (const auto& c : leading_first) {
      l = boost::multiprecision::lcm(l, denominator_of(c));
    }
    std::vector<BigInt> ints;
    ints.reserve(leading_first.size());
    for (const auto& c : leading_first) {
      ints.push_back(numerator_of(c) * (l / denominator_of(c)));
    }
    return IntPolynomial(std::move(ints));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  const BigInt& leading() const { return coeffs_.front(); }
  const BigInt& constant_term() const { return coeffs_.back(); }

  Rational evaluate(const Rational& x) const {
    Rational acc = 0;
    for (const auto& c : coeffs_) acc = acc * x + Rational(c);
    return acc;
  }

  long double evaluate(long double x) const {
    long double acc = 0;
    for (const auto& c : coeffs_) acc = acc * x + c.convert_to<long double>();
    return acc;
  }

  /// Rational-root test over the divisors of the constant and leading
  /// coefficients. Coefficients must fit in 64 bits.
  bool has_rational_root() const {
    if (degree() == 0) return false;
    if (constant_term() == 0) return true;
    const auto ps = divisors(constant_term());
    const auto qs = divisors(leading());
    for (const auto& p : ps) {
      for (const auto& q : qs) {
        const Rational candidate(p, q);
        if (evaluate(candidate) == 0 || evaluate(Rational(-candidate)) == 0) {
          return true;
        }
      }
    }
    return false;
  }

  std::string to_string() const {
    std::string out;
    const int n = degree();
    for (int i = 0; i <= n; ++i) {
      const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      const int power = n - i;
      const BigInt mag = c < 0 ? BigInt(-c) : c;
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (mag != 1 || power == 0) out += mag.str();
      if (power >= 1) out += "x";
      if (power >= 2) out += "^" + std::to_string(power);
    }
    return out;
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void normalize() {
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                              [](const BigInt& c) { return c != 0; });
    coeffs_.erase(coeffs_.begin(), first);
    if (coeffs_.empty()) throw std::invalid_argument("zero polynomial");
    BigInt g = 0;
    for (const auto& c : coeffs_) g = boost::multiprecision::gcd(g, c);
    if (coeffs_.front() < 0) g = -g;
    for (auto& c : coeffs_) c /= g;
  }

  static std::vector<BigInt> divisors(const BigInt& value) {
    const BigInt v = value < 0 ? BigInt(-value) : value;
    if (v > BigInt(std::numeric_limits<std::int64_t>::max())) {
      throw std::domain_error("rational-root test: coefficient too large");
    }
    const auto n = v.convert_to<std::int64_t>();
    std::vector<BigInt> out;
    for (std::int64_t d = 1; d * d <= n; ++d) {
      if (n % d == 0) {
        out.emplace_back(d);
        if (d != n / d) out.emplace_back(n / d);
      }
    }
    return out;
  }

  std::vector<BigInt> coeffs_;
};

namespace detail {

// Dense polynomials with rational coefficients, constant term first.
using RatPoly = std::vector<Rational>;

inline RatPoly poly_mul(const RatPoly& x, const RatPoly& y) {
  if (x.empty() || y.empty()) return {};
  RatPoly out(x.size() + y.size() - 1, Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  return out;
}

inline RatPoly poly_add(RatPoly x, const RatPoly& y) {
  if (x.size() < y.size()) x.resize(y.size(), Rational(0));
  for (std::size_t i = 0; i < y.size(); ++i) x[i] += y[i];
  return x;
}

inline RatPoly poly_scale(RatPoly x, const Rational& k) {
  for (auto& c : x) c *= k;
  return x;
}

/// P((y - shift) / scale), as a polynomial in y.
inline RatPoly affine_substitute(const RatPoly& p, const Rational& shift,
                                 const Rational& scale) {
  const RatPoly inner{Rational(-shift) / scale, Rational(1) / scale};
  RatPoly out{Rational(0)};
  // Horner from the top coefficient down.
  for (std::size_t i = p.size(); i-- > 0;) {
    out = poly_add(poly_mul(out, inner), RatPoly{p[i]});
  }
  return out;
}

inline IntPolynomial to_int_polynomial(const RatPoly& constant_first) {
  std::vector<Rational> leading_first(constant_first.rbegin(),
                                      constant_first.rend());
  return IntPolynomial::from_rational(leading_first);
}

inline RatPoly to_rat_poly(const IntPolynomial& p) {
  RatPoly out;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) out.emplace_back(*it);
  return out;
}

}  // namespace detail
}  // namespace invset
