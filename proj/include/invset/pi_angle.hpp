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

#include <compare>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace invset {

/// An angle a*pi/b with gcd(|a|, b) == 1 and 0 <= a/b < 2. Every
/// constructor reduces to this canonical form, so two PiAngles compare
/// equal iff they denote the same point on the circle.
class PiAngle {
 public:
  PiAngle() = default;

  PiAngle(std::int64_t a, std::int64_t b) {
    if (b <= 0) throw std::invalid_argument("PiAngle denominator must be positive");
    const std::int64_t period = 2 * b;
    a %= period;
    if (a < 0) a += period;
    const std::int64_t g = std::gcd(a, b);
    a_ = a / g;
    b_ = b / g;
  }

  static PiAngle from_fraction_of_turn(std::int64_t k, std::int64_t n) {
    return PiAngle(2 * k, n);
  }

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }

  /// n such that the angle is 2*pi*k/n with gcd(k, n) == 1, i.e. the order
  /// of e^{i*angle} as a root of unity.
  std::int64_t root_of_unity_order() const {
    // a*pi/b = 2*pi * a/(2b)
    const std::int64_t g = std::gcd(a_, 2 * b_);
    return (2 * b_) / g;
  }

  PiAngle operator+(const PiAngle& o) const {
    const std::int64_t l = std::lcm(b_, o.b_);
    return PiAngle(a_ * (l / b_) + o.a_ * (l / o.b_), l);
  }
  PiAngle operator-(const PiAngle& o) const {
    const std::int64_t l = std::lcm(b_, o.b_);
    return PiAngle(a_ * (l / b_) - o.a_ * (l / o.b_), l);
  }
  PiAngle operator-() const { return PiAngle(-a_, b_); }
  PiAngle doubled() const { return PiAngle(2 * a_, b_); }

  /// Great-circle separation folded into [0, pi].
  PiAngle folded() const { return a_ > b_ ? PiAngle(2 * b_ - a_, b_) : *this; }

  long double radians() const {
    return std::numbers::pi_v<long double> * static_cast<long double>(a_) /
           static_cast<long double>(b_);
  }

  std::string to_string() const {
    return std::to_string(a_) + "/" + std::to_string(b_);
  }

  friend bool operator==(const PiAngle&, const PiAngle&) = default;
  friend std::strong_ordering operator<=>(const PiAngle& x, const PiAngle& y) {
    // a/b vs c/d with positive denominators
    const __int128 lhs = static_cast<__int128>(x.a_) * y.b_;
    const __int128 rhs = static_cast<__int128>(y.a_) * x.b_;
    return lhs <=> rhs;
  }

 private:
  std::int64_t a_ = 0;
  std::int64_t b_ = 1;
};

/// Angular distance in [0, pi] between two positions on a great circle.
inline PiAngle relative_angle(const PiAngle& x, const PiAngle& y) {
  return (x - y).folded();
}

/// Parses "a/b" or "a" (meaning a*pi). Throws std::invalid_argument.
inline PiAngle parse_pi_angle(const std::string& text) {
  const auto slash = text.find('/');
  std::size_t used = 0;
  try {
    if (slash == std::string::npos) {
      const long long a = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return PiAngle(a, 1);
    }
    const std::string lhs = text.substr(0, slash);
    const std::string rhs = text.substr(slash + 1);
    const long long a = std::stoll(lhs, &used);
    if (used != lhs.size()) throw std::invalid_argument(text);
    const long long b = std::stoll(rhs, &used);
    if (used != rhs.size()) throw std::invalid_argument(text);
    return PiAngle(a, b);
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("angle out of range: " + text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed angle: '" + text + "'");
  }
}

}  // namespace invset
