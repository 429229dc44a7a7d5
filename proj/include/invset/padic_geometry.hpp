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

// The state-space metric g_p: Euclidean (normalized) between points of the
// Cantor set C(p), and the constant p whenever an off-set point is involved.

#include "invset/rational.hpp"

#include <cmath>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace invset {

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

/// p = s^2 + t^2 with s < t, p prime and p = 1 (mod 4). N = p - 1 is the
/// number of helix strands and is divisible by 4.
struct PythagoreanPrime {
  std::int64_t p = 0;
  std::int64_t s = 0;
  std::int64_t t = 0;

  std::int64_t strands() const { return p - 1; }
  friend bool operator==(const PythagoreanPrime&, const PythagoreanPrime&) = default;
};

inline std::optional<PythagoreanPrime> is_pythagorean_prime(std::int64_t p) {
  if (p < 2) throw std::invalid_argument("is_pythagorean_prime needs p >= 2");
  if (p % 4 != 1 || !is_prime(p)) return std::nullopt;
  // Fermat: a prime p = 1 (mod 4) is a sum of two squares in exactly one way.
  for (std::int64_t s = 1; 2 * s * s < p; ++s) {
    const std::int64_t rest = p - s * s;
    auto t = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(rest)));
    while (t * t > rest) --t;
    while ((t + 1) * (t + 1) <= rest) ++t;
    if (t * t == rest) return PythagoreanPrime{p, s, t};
  }
  throw std::logic_error("two-square decomposition not found for prime 1 mod 4");
}

/// Throws unless N is divisible by 4 and N + 1 is a Pythagorean prime.
inline PythagoreanPrime prime_for_strands(std::int64_t n) {
  if (n < 4 || n % 4 != 0) {
    throw std::invalid_argument("N must be a positive multiple of 4, got " +
                                std::to_string(n));
  }
  auto prime = is_pythagorean_prime(n + 1);
  if (!prime) {
    throw std::invalid_argument("N + 1 = " + std::to_string(n + 1) +
                                " is not a Pythagorean prime");
  }
  return *prime;
}

/// v_p(x); v_p(0) is +infinity.
class Valuation {
 public:
  static Valuation infinite() { return Valuation(); }
  static Valuation finite(std::uint64_t k) { return Valuation(k); }

  bool is_infinite() const { return !value_.has_value(); }
  std::uint64_t value() const {
    if (!value_) throw std::logic_error("infinite valuation has no value");
    return *value_;
  }

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  Valuation() = default;
  explicit Valuation(std::uint64_t k) : value_(k) {}
  std::optional<std::uint64_t> value_;
};

inline Valuation padic_valuation(const BigInt& x, std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("padic_valuation: p must be prime");
  if (x == 0) return Valuation::infinite();
  BigInt m = x < 0 ? BigInt(-x) : x;
  std::uint64_t k = 0;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  return Valuation::finite(k);
}

/// |q|_p = p^-(v_p(num) - v_p(den)); |0|_p = 0.
inline Rational padic_norm(const Rational& q, std::int64_t p) {
  if (q == 0) return Rational(0);
  const auto vn = static_cast<std::int64_t>(padic_valuation(numerator_of(q), p).value());
  const auto vd = static_cast<std::int64_t>(padic_valuation(denominator_of(q), p).value());
  return rpow(Rational(p), static_cast<int>(vd - vn));
}

struct PlanarPoint {
  Rational x;
  Rational y;

  friend bool operator==(const PlanarPoint&, const PlanarPoint&) = default;
};

inline Rational squared_distance(const PlanarPoint& u, const PlanarPoint& v) {
  const Rational dx = u.x - v.x;
  const Rational dy = u.y - v.y;
  return dx * dx + dy * dy;
}

/// Finite digit address (d_1, ..., d_J) in C(p). Digit 0 is the central
/// strand; digits 1..N are the polygon strands.
class CantorPoint {
 public:
  explicit CantorPoint(std::vector<std::uint32_t> digits) : digits_(std::move(digits)) {
    if (digits_.empty()) throw std::invalid_argument("CantorPoint depth must be >= 1");
  }

  const std::vector<std::uint32_t>& digits() const { return digits_; }
  std::size_t depth() const { return digits_.size(); }

  friend bool operator==(const CantorPoint&, const CantorPoint&) = default;

 private:
  std::vector<std::uint32_t> digits_;
};

/// Vertex k (1 <= k <= N) of the rational N-gon on the unit circle. The
/// grid x_k = (2k - N - 1)/(N + 1) is pushed through t = x/(1 - x^2) and the
/// half-angle parametrization ((1 - t^2)/(1 + t^2), 2t/(1 + t^2)). Both maps
/// are increasing, so vertices are distinct and in angular order; adjacent
/// vertices subtend at least 4/(N + 1) radians.
inline PlanarPoint ngon_vertex(std::int64_t k, std::int64_t n) {
  if (k < 1 || k > n) throw std::out_of_range("ngon_vertex: k outside 1..N");
  const Rational x(2 * k - n - 1, n + 1);
  const Rational t = x / (1 - x * x);
  const Rational t2 = t * t;
  return {(1 - t2) / (1 + t2), (2 * t) / (1 + t2)};
}

inline void check_contraction(const Rational& s, std::int64_t n) {
  if (s <= 0 || s > Rational(1, 2 * n)) {
    throw std::invalid_argument("contraction ratio must lie in (0, 1/(2N)]");
  }
}

/// IFS image sum_j s^(j-1) v(d_j), v(0) the origin.
inline PlanarPoint cantor_embed(const CantorPoint& point, const PythagoreanPrime& prime,
                                const Rational& s) {
  const std::int64_t n = prime.strands();
  check_contraction(s, n);
  PlanarPoint acc{Rational(0), Rational(0)};
  Rational scale = 1;
  for (const std::uint32_t digit : point.digits()) {
    if (digit >= static_cast<std::uint64_t>(prime.p)) {
      throw std::invalid_argument("Cantor digit " + std::to_string(digit) +
                                  " out of range for p = " + std::to_string(prime.p));
    }
    if (digit != 0) {
      const PlanarPoint v = ngon_vertex(digit, n);
      acc.x += scale * v.x;
      acc.y += scale * v.y;
    }
    scale *= s;
  }
  return acc;
}

struct OnSet {
  CantorPoint point;
  friend bool operator==(const OnSet&, const OnSet&) = default;
};

struct OffSet {
  PlanarPoint coords;
  friend bool operator==(const OffSet&, const OffSet&) = default;
};

using StateSpacePoint = std::variant<OnSet, OffSet>;

/// A nonnegative distance held as its exact square.
class ExactDistance {
 public:
  ExactDistance() = default;
  static ExactDistance from_squared(Rational squared) {
    if (squared < 0) throw std::invalid_argument("negative squared distance");
    ExactDistance d;
    d.squared_ = std::move(squared);
    return d;
  }
  static ExactDistance from_value(const Rational& value) {
    if (value < 0) throw std::invalid_argument("negative distance");
    return from_squared(value * value);
  }

  const Rational& squared() const { return squared_; }
  double approx() const { return std::sqrt(to_double(squared_)); }

  friend bool operator==(const ExactDistance&, const ExactDistance&) = default;
  friend std::strong_ordering operator<=>(const ExactDistance& a, const ExactDistance& b) {
    if (a.squared_ < b.squared_) return std::strong_ordering::less;
    if (a.squared_ > b.squared_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Rational squared_ = 0;
};

/// a + b >= c, decided without square roots.
inline bool sum_at_least(const ExactDistance& a, const ExactDistance& b,
                         const ExactDistance& c) {
  // sqrt(A) + sqrt(B) >= sqrt(C)  <=>  A + B + 2 sqrt(AB) >= C
  const Rational gap = c.squared() - a.squared() - b.squared();
  if (gap <= 0) return true;
  return 4 * a.squared() * b.squared() >= gap * gap;
}

/// Every embedded point lies in the disc of radius 1/(1 - s), so the
/// normalization 2/(1 - s) bounds the diameter of the set by 1.
inline Rational embedding_diameter_bound(const Rational& s) { return 2 / (1 - s); }

inline ExactDistance gp_distance(const StateSpacePoint& x, const StateSpacePoint& y,
                                 const PythagoreanPrime& prime, const Rational& s) {
  check_contraction(s, prime.strands());
  const auto* xo = std::get_if<OnSet>(&x);
  const auto* yo = std::get_if<OnSet>(&y);
  if (xo != nullptr && yo != nullptr) {
    if (xo->point.depth() != yo->point.depth()) {
      throw std::invalid_argument("gp_distance: on-set points of different depth");
    }
    const PlanarPoint u = cantor_embed(xo->point, prime, s);
    const PlanarPoint v = cantor_embed(yo->point, prime, s);
    const Rational norm = embedding_diameter_bound(s);
    return ExactDistance::from_squared(squared_distance(u, v) / (norm * norm));
  }
  // Digits of an on-set point must still be valid for this p.
  if (xo != nullptr) (void)cantor_embed(xo->point, prime, s);
  if (yo != nullptr) (void)cantor_embed(yo->point, prime, s);
  if (x == y) return ExactDistance{};
  return ExactDistance::from_value(Rational(prime.p));
}

}  // namespace invset
