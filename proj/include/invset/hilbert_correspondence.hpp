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

// Helix descriptors (n1, n2, N) and the qubit states they stand for:
// cos^2(theta/2) = n1/N, phi = 2*pi*n2/N.

#include "invset/padic_geometry.hpp"
#include "invset/rational.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>

namespace invset {

class Descriptor {
 public:
  /// Throws std::invalid_argument unless 1 <= n1, n2 <= N, 4 | N and
  /// N + 1 is a Pythagorean prime.
  Descriptor(std::int64_t n1, std::int64_t n2, std::int64_t n) : n1_(n1), n2_(n2), n_(n) {
    (void)prime_for_strands(n);
    if (n1 < 1 || n1 > n) throw std::invalid_argument("n1 outside 1..N");
    if (n2 < 1 || n2 > n) throw std::invalid_argument("n2 outside 1..N");
  }

  std::int64_t n1() const { return n1_; }
  std::int64_t n2() const { return n2_; }
  std::int64_t strands() const { return n_; }

  friend bool operator==(const Descriptor&, const Descriptor&) = default;

 private:
  std::int64_t n1_;
  std::int64_t n2_;
  std::int64_t n_;
};

struct QubitState {
  Rational cos_sq_half_theta;  // in [0, 1]
  Rational phase_fraction;     // phi / 2pi, in [0, 1)

  friend bool operator==(const QubitState&, const QubitState&) = default;
};

struct NonOntic {
  friend bool operator==(const NonOntic&, const NonOntic&) = default;
};

inline QubitState descriptor_to_state(const Descriptor& d) {
  const std::int64_t n = d.strands();
  return {Rational(d.n1(), n), Rational(d.n2() % n, n)};
}

/// Inverse of descriptor_to_state; NonOntic when either field is off the
/// 1/N grid or out of range.
inline std::variant<Descriptor, NonOntic> state_to_descriptor(const QubitState& q,
                                                              std::int64_t n) {
  (void)prime_for_strands(n);
  const Rational scaled_amp = q.cos_sq_half_theta * n;
  const Rational scaled_phase = q.phase_fraction * n;
  if (!is_integer(scaled_amp) || !is_integer(scaled_phase)) return NonOntic{};
  if (q.phase_fraction < 0 || q.phase_fraction >= 1) return NonOntic{};
  const auto n1 = numerator_of(scaled_amp).convert_to<std::int64_t>();
  auto n2 = numerator_of(scaled_phase).convert_to<std::int64_t>();
  if (n1 < 1 || n1 > n) return NonOntic{};
  if (n2 == 0) n2 = n;
  return Descriptor(n1, n2, n);
}

inline bool denominator_divides(const Rational& q, std::int64_t n) {
  return BigInt(n) % denominator_of(q) == 0;
}

/// True iff every squared amplitude and phase fraction lies on the 1/N grid.
/// Squared amplitudes must sum to 1.
inline bool ontic_check(std::span<const Rational> amplitudes_sq,
                        std::span<const Rational> phase_fractions, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("ontic_check: N must be positive");
  Rational total = 0;
  for (const auto& a : amplitudes_sq) {
    if (a < 0) throw std::invalid_argument("ontic_check: negative squared amplitude");
    total += a;
  }
  if (total != 1) throw std::invalid_argument("ontic_check: squared amplitudes must sum to 1");
  for (const auto& a : amplitudes_sq) {
    if (!denominator_divides(a, n)) return false;
  }
  for (const auto& f : phase_fractions) {
    if (!denominator_divides(f, n)) return false;
  }
  return true;
}

/// N strand labels; 'a' for the first cluster, 'A' for the other. The
/// central strand carries no label and is not included.
struct LabelString {
  std::string labels;
  std::int64_t count_a = 0;
};

/// Strand i (0-based) is 'a' iff (i - n2) mod N < n1: a contiguous block of
/// n1 strands rotated by n2.
inline LabelString label_helix(const Descriptor& d) {
  const std::int64_t n = d.strands();
  LabelString out;
  out.labels.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    const std::int64_t offset = ((i - d.n2()) % n + n) % n;
    const bool is_a = offset < d.n1();
    out.labels.push_back(is_a ? 'a' : 'A');
    out.count_a += is_a ? 1 : 0;
  }
  return out;
}

/// -cos(theta) for cos^2(theta/2) = n1/N, i.e. 1 - 2 n1/N. Accepts n1 = 0
/// (theta = pi), which Descriptor itself excludes.
inline Rational correlation_from_descriptor(std::int64_t n1, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("N must be positive");
  if (n1 < 0 || n1 > n) throw std::invalid_argument("n1 outside 0..N");
  return 1 - Rational(2 * n1, n);
}

}  // namespace invset
