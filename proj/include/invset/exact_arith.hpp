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

// Rationality decisions for cosines of rational multiples of pi, and for
// the third side of a spherical triangle given two rational sides.

#include "invset/pi_angle.hpp"
#include "invset/polynomial.hpp"
#include "invset/quadratic.hpp"
#include "invset/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace invset {

struct RationalCos {
  Rational value;
};

/// An irrational cosine. `degree` is exact unless `degree_is_bound`, in
/// which case it is an upper bound and no polynomial is attached.
struct IrrationalCos {
  int degree = 0;
  std::optional<IntPolynomial> min_poly;
  bool degree_is_bound = false;
};

using CosClass = std::variant<RationalCos, IrrationalCos>;

inline bool is_rational(const CosClass& c) {
  return std::holds_alternative<RationalCos>(c);
}

inline const Rational& rational_value(const CosClass& c) {
  return std::get<RationalCos>(c).value;
}

/// Largest denominator (root-of-unity order) for which minimal polynomials
/// are materialized.
inline constexpr std::int64_t kMinimalPolynomialCap = 1'000'000;

inline std::int64_t euler_totient(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("euler_totient needs n >= 1");
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace detail {

inline int mobius(std::int64_t n) {
  int sign = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

/// Cyclotomic polynomial Phi_n, constant term first, from
/// Phi_n(z) = prod_{d | n} (1 - z^d)^{mu(n/d)} as a truncated power series.
inline std::vector<BigInt> cyclotomic(std::int64_t n) {
  const auto deg = static_cast<std::size_t>(euler_totient(n));
  if (n == 1) return {BigInt(-1), BigInt(1)};
  std::vector<BigInt> series(deg + 1, BigInt(0));
  series[0] = 1;
  std::vector<std::int64_t> divs;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    divs.push_back(d);
    if (d != n / d) divs.push_back(n / d);
  }
  std::sort(divs.begin(), divs.end());
  for (const std::int64_t d : divs) {
    const int mu = mobius(n / d);
    const auto step = static_cast<std::size_t>(d);
    if (mu == 1) {
      for (std::size_t i = deg + 1; i-- > step;) series[i] -= series[i - step];
    } else if (mu == -1) {
      for (std::size_t i = step; i <= deg; ++i) series[i] += series[i - step];
    }
  }
  return series;
}

/// Minimal polynomial of 2cos(2*pi/n), n >= 3, constant term first.
/// Phi_n is palindromic of degree 2m and Phi_n(z) = z^m Psi(z + 1/z); the
/// terms z^j + z^-j expand through D_{j+1} = x D_j - D_{j-1}, which is the
/// Chebyshev recurrence on 2cos (D_2 = x^2 - 2 is the doubling map).
inline std::vector<BigInt> two_cos_minimal_polynomial(std::int64_t n) {
  const auto phi = cyclotomic(n);
  const std::size_t m = (phi.size() - 1) / 2;
  std::vector<BigInt> psi(m + 1, BigInt(0));
  psi[0] = phi[m];
  std::vector<BigInt> prev{BigInt(2)};           // D_0
  std::vector<BigInt> cur{BigInt(0), BigInt(1)};  // D_1
  for (std::size_t j = 1; j <= m; ++j) {
    const BigInt& c = phi[m + j];
    if (c != 0) {
      for (std::size_t i = 0; i < cur.size(); ++i) psi[i] += c * cur[i];
    }
    std::vector<BigInt> next(cur.size() + 1, BigInt(0));
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return psi;
}

inline IntPolynomial compute_cos_minimal_polynomial(std::int64_t n) {
  if (n == 1) return IntPolynomial({BigInt(1), BigInt(-1)});
  if (n == 2) return IntPolynomial({BigInt(1), BigInt(1)});
  // cos = (2cos)/2: substitute x = 2y.
  const auto psi = two_cos_minimal_polynomial(n);
  std::vector<BigInt> leading_first;
  leading_first.reserve(psi.size());
  for (std::size_t i = psi.size(); i-- > 0;) {
    leading_first.push_back(psi[i] << static_cast<unsigned>(i));
  }
  return IntPolynomial(std::move(leading_first));
}

// Memo for small orders. Observable behaviour stays pure: a given n always
// maps to the same polynomial, and access is synchronized.
class MinimalPolynomialCache {
 public:
  static constexpr std::int64_t kMaxCachedOrder = 8192;

  static const IntPolynomial& get(std::int64_t n) {
    static MinimalPolynomialCache instance;
    {
      std::shared_lock lock(instance.mutex_);
      if (auto it = instance.table_.find(n); it != instance.table_.end()) {
        return it->second;
      }
    }
    IntPolynomial computed = compute_cos_minimal_polynomial(n);
    std::unique_lock lock(instance.mutex_);
    return instance.table_.try_emplace(n, std::move(computed)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::int64_t, IntPolynomial> table_;
};

}  // namespace detail

/// Degree over Q of cos(phi): 1 for orders 1 and 2, totient(n)/2 otherwise.
inline int cos_degree(const PiAngle& phi) {
  const std::int64_t n = phi.root_of_unity_order();
  if (n <= 2) return 1;
  return static_cast<int>(euler_totient(n) / 2);
}

/// Minimal polynomial of cos(phi) over Q, primitive with positive leading
/// coefficient. Throws std::length_error past kMinimalPolynomialCap.
inline IntPolynomial cos_minimal_polynomial(const PiAngle& phi) {
  const std::int64_t n = phi.root_of_unity_order();
  if (n > kMinimalPolynomialCap) {
    throw std::length_error("cos_minimal_polynomial: order " + std::to_string(n) +
                            " exceeds cap");
  }
  if (n <= detail::MinimalPolynomialCache::kMaxCachedOrder) {
    return detail::MinimalPolynomialCache::get(n);
  }
  return detail::compute_cos_minimal_polynomial(n);
}

/// Niven: cos(phi) is rational only for denominators 1, 2, 3.
inline CosClass niven_classify(const PiAngle& phi) {
  const std::int64_t a = phi.a();
  switch (phi.b()) {
    case 1:
      return RationalCos{a == 0 ? Rational(1) : Rational(-1)};
    case 2:
      return RationalCos{Rational(0)};
    case 3:
      // a in {1, 2, 4, 5}
      return RationalCos{(a == 1 || a == 5) ? Rational(1, 2) : Rational(-1, 2)};
    default:
      break;
  }
  IrrationalCos out;
  out.degree = cos_degree(phi);
  if (phi.root_of_unity_order() <= kMinimalPolynomialCap) {
    out.min_poly = cos_minimal_polynomial(phi);
  }
  return out;
}

/// The doubling map on 2cos values: 2cos(2x) = (2cos x)^2 - 2.
inline Rational chebyshev_double(const Rational& c) { return c * c - 2; }

/// Orbit of phi under angle doubling (mod 2pi) up to the first repeat.
/// Its length never exceeds 2b.
inline std::vector<PiAngle> doubling_orbit(const PiAngle& phi) {
  std::vector<PiAngle> orbit;
  PiAngle cur = phi;
  while (std::find(orbit.begin(), orbit.end(), cur) == orbit.end()) {
    orbit.push_back(cur);
    cur = cur.doubled();
  }
  return orbit;
}

/// cos(phi) as u + v*sqrt(D) for angles of cosine degree 1 or 2.
inline QuadraticValue cos_as_quadratic(const PiAngle& phi) {
  const CosClass cls = niven_classify(phi);
  if (is_rational(cls)) return QuadraticValue(rational_value(cls));
  const auto& irr = std::get<IrrationalCos>(cls);
  if (irr.degree != 2) throw std::domain_error("cos_as_quadratic: degree > 2");
  const auto& coeffs = irr.min_poly->coefficients();
  const Rational qa(coeffs[0]);
  const Rational qb(coeffs[1]);
  const Rational qc(coeffs[2]);
  // Roots (-b +- sqrt(b^2 - 4ac)) / 2a. The folded angle 2*pi*k/n is the
  // larger root iff k is the smaller of the two totatives of n in (0, n/2).
  const PiAngle folded = phi.folded();
  const std::int64_t n = folded.root_of_unity_order();
  const std::int64_t k = folded.a() * n / (2 * folded.b());
  std::int64_t smallest = 0;
  for (std::int64_t j = 1; 2 * j < n; ++j) {
    if (std::gcd(j, n) == 1) {
      smallest = j;
      break;
    }
  }
  const auto root = sqrt_classify((qb * qb - 4 * qa * qc) / (4 * qa * qa));
  const auto& surd = std::get<QuadraticValue>(root);
  const Rational sign = (k == smallest) ? Rational(1) : Rational(-1);
  return QuadraticValue(Rational(-qb / (2 * qa)), sign * surd.surd_coefficient(),
                        surd.radicand());
}

/// Exact classification of cos(c) = cosA*cosB + sinA*sinB*cos(gamma) for a
/// spherical triangle with sides a, b in [0, pi] and included angle gamma.
inline CosClass classify_third_side(const Rational& cos_a, const Rational& cos_b,
                                    const PiAngle& gamma) {
  if (abs(cos_a) > 1 || abs(cos_b) > 1) {
    throw std::invalid_argument("classify_third_side: cosine outside [-1, 1]");
  }
  const Rational base = cos_a * cos_b;
  const Rational r = (1 - cos_a * cos_a) * (1 - cos_b * cos_b);
  const SqrtResult sine_product = sqrt_classify(r);
  const CosClass gamma_class = niven_classify(gamma);

  if (const auto* s = std::get_if<Rational>(&sine_product)) {
    if (*s == 0) return RationalCos{base};
    if (is_rational(gamma_class)) {
      return RationalCos{base + *s * rational_value(gamma_class)};
    }
    // Affine image of cos(gamma): same degree, polynomial P((y - base)/s).
    const auto& irr = std::get<IrrationalCos>(gamma_class);
    IrrationalCos out{irr.degree, std::nullopt, false};
    if (irr.min_poly) {
      out.min_poly = detail::to_int_polynomial(
          detail::affine_substitute(detail::to_rat_poly(*irr.min_poly), base, *s));
    }
    return out;
  }

  const auto& surd = std::get<QuadraticValue>(sine_product);
  const Rational& q1 = surd.surd_coefficient();
  const BigInt& d = surd.radicand();

  if (is_rational(gamma_class)) {
    const Rational& c = rational_value(gamma_class);
    if (c == 0) return RationalCos{base};
    const QuadraticValue value(base, c * q1, d);
    return IrrationalCos{2, value.minimal_polynomial(), false};
  }

  const auto& irr = std::get<IrrationalCos>(gamma_class);
  if (irr.degree > 2) {
    // A rational third side would force cos(gamma) = (q - base)/sqrt(r),
    // of degree <= 2.
    return IrrationalCos{2 * irr.degree, std::nullopt, true};
  }

  const QuadraticValue cg = cos_as_quadratic(gamma);
  const Rational& u = cg.rational_part();
  const Rational& v = cg.surd_coefficient();
  const BigInt& big_d = cg.radicand();
  // value = base + q1*u*sqrt(d) + q1*v*sqrt(d*D)
  if (d == big_d) {
    const QuadraticValue value(base + q1 * v * Rational(big_d), q1 * u, d);
    if (value.is_rational()) return RationalCos{value.rational_part()};
    return IrrationalCos{2, value.minimal_polynomial(), false};
  }
  const BigInt g = boost::multiprecision::gcd(d, big_d);
  const BigInt e = (d / g) * (big_d / g);
  const Rational alpha = q1 * u;
  const Rational beta = q1 * v * Rational(g);
  if (alpha == 0) {
    const QuadraticValue value(base, beta, e);
    return IrrationalCos{2, value.minimal_polynomial(), false};
  }
  // w = alpha*sqrt(d) + beta*sqrt(e) with d != e square-free:
  // (w^2 - K)^2 = L, K = alpha^2 d + beta^2 e, L = 4 alpha^2 beta^2 d e.
  const Rational big_k = alpha * alpha * Rational(d) + beta * beta * Rational(e);
  const Rational big_l = 4 * alpha * alpha * beta * beta * Rational(d) * Rational(e);
  const detail::RatPoly in_w{big_k * big_k - big_l, Rational(0), Rational(-2 * big_k),
                             Rational(0), Rational(1)};
  return IrrationalCos{
      4, detail::to_int_polynomial(detail::affine_substitute(in_w, base, Rational(1))),
      false};
}

}  // namespace invset
