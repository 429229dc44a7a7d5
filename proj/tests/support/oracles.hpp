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

// Independent floating-point and brute-force oracles. Nothing here calls
// into the exact code paths it is used to check.

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

namespace invset::oracle {

using Quad = boost::multiprecision::cpp_bin_float_quad;

inline Quad pi_quad() { return boost::math::constants::pi<Quad>(); }

/// cos(a*pi/b) in IEEE quad precision.
inline Quad cos_pi_fraction(std::int64_t a, std::int64_t b) {
  return boost::multiprecision::cos(pi_quad() * Quad(a) / Quad(b));
}

/// Returns (p, q) when some continued-fraction convergent p/q of x with
/// q <= max_den lies within tol of x.
template <class Real>
std::optional<std::pair<std::int64_t, std::int64_t>> rational_approximation(
    Real x, std::int64_t max_den, Real tol) {
  std::int64_t p_prev = 0, q_prev = 1;
  std::int64_t p_cur = 1, q_cur = 0;
  Real rest = x;
  for (int iter = 0; iter < 64; ++iter) {
    const Real fl = floor(rest);
    const auto a = static_cast<std::int64_t>(fl);
    const std::int64_t p_next = a * p_cur + p_prev;
    const std::int64_t q_next = a * q_cur + q_prev;
    if (q_next > max_den) break;
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = p_next;
    q_cur = q_next;
    if (abs(x - Real(p_cur) / Real(q_cur)) <= tol) return std::make_pair(p_cur, q_cur);
    const Real frac = rest - fl;
    if (frac == 0) break;
    rest = 1 / frac;
  }
  return std::nullopt;
}

inline bool looks_rational(const Quad& x, std::int64_t max_den = 1'000'000) {
  return rational_approximation<Quad>(x, max_den, Quad(1e-24)).has_value();
}

/// Third side of a spherical triangle by the cosine rule, in quad precision.
inline Quad third_side_cos(const Quad& cos_a, const Quad& cos_b, std::int64_t ga,
                           std::int64_t gb) {
  using boost::multiprecision::sqrt;
  const Quad r = (1 - cos_a * cos_a) * (1 - cos_b * cos_b);
  return cos_a * cos_b + sqrt(r) * cos_pi_fraction(ga, gb);
}

/// All (s, t) with s <= t and s^2 + t^2 == n.
inline std::vector<std::pair<std::int64_t, std::int64_t>> two_squares(std::int64_t n) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t s = 0; s * s <= n; ++s) {
    for (std::int64_t t = s; s * s + t * t <= n; ++t) {
      if (s * s + t * t == n) out.emplace_back(s, t);
    }
  }
  return out;
}

inline bool prime_by_sieve_free_trial(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d < n; ++d) {
    if (d * d > n) break;
    if (n % d == 0) return false;
  }
  return true;
}

/// Exhaustive max of |S|*N over every frame with alice0 = 0 and the other
/// three positions on the k*pi/grid lattice, each relative angle snapped to
/// the nearest n1/N by long double cosine. Frames above 2*sqrt(2) + 1e-9
/// are skipped when `guarded`.
inline std::int64_t brute_force_scaled_smax(std::int64_t n, std::int64_t grid, bool guarded) {
  const std::int64_t period = 2 * grid;
  std::vector<std::int64_t> corr(static_cast<std::size_t>(period));
  for (std::int64_t k = 0; k < period; ++k) {
    const long double theta =
        std::numbers::pi_v<long double> * static_cast<long double>(k) / static_cast<long double>(grid);
    const long double c = std::cos(theta / 2);
    const auto n1 = static_cast<std::int64_t>(std::llround(c * c * static_cast<long double>(n)));
    corr[static_cast<std::size_t>(k)] = n - 2 * n1;
  }
  const auto at = [&](std::int64_t k) {
    return corr[static_cast<std::size_t>(((k % period) + period) % period)];
  };
  const double bound = (2.0 * std::numbers::sqrt2 + 1e-9) * static_cast<double>(n);
  std::int64_t best = 0;
  for (std::int64_t bob0 = 0; bob0 < period; ++bob0) {
    for (std::int64_t alice1 = 0; alice1 < period; ++alice1) {
      for (std::int64_t bob1 = 0; bob1 < period; ++bob1) {
        const std::int64_t s =
            std::abs(at(bob0) + at(alice1 - bob0) + at(bob1) - at(alice1 - bob1));
        if (guarded && static_cast<double>(s) > bound) continue;
        best = std::max(best, s);
      }
    }
  }
  return best;
}

}  // namespace invset::oracle
