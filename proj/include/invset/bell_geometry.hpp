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

// CHSH evaluation over correlations that may be undefined, counterfactual
// definability via the spherical cosine rule, and the finite-precision
// scan over rational-descriptor frames.

#include "invset/exact_arith.hpp"
#include "invset/hilbert_correspondence.hpp"
#include "invset/padic_geometry.hpp"
#include "invset/pi_angle.hpp"
#include "invset/rational.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <thread>
#include <variant>
#include <vector>

namespace invset {

struct Defined {
  Rational value;
  friend bool operator==(const Defined&, const Defined&) = default;
};

struct Undefined {
  CosClass witness;
};

using Correlation = std::variant<Defined, Undefined>;

inline bool is_defined(const Correlation& c) { return std::holds_alternative<Defined>(c); }

/// Slots in CHSH order: (0,0), (1,0), (0,1), (1,1).
struct CorrelationQuadruple {
  std::array<Correlation, 4> entries;
};

struct ChshResult {
  std::optional<Rational> s;         // empty when any entry is undefined
  std::optional<CosClass> witness;   // first undefined entry's witness
  bool violates_bell = false;        // S > 2
  bool within_tsirelson = false;     // S <= 2*sqrt(2) + 1e-9
};

inline constexpr double kTsirelsonBound = 2.0 * std::numbers::sqrt2;
inline constexpr double kTsirelsonTolerance = 1e-9;

inline bool within_tsirelson(const Rational& s) {
  if (s * s <= 8) return true;
  return to_double(s) <= kTsirelsonBound + kTsirelsonTolerance;
}

inline ChshResult chsh_evaluate(const CorrelationQuadruple& q) {
  ChshResult out;
  for (const auto& entry : q.entries) {
    if (const auto* u = std::get_if<Undefined>(&entry)) {
      out.witness = u->witness;
      return out;
    }
  }
  const auto value = [&](std::size_t i) { return std::get<Defined>(q.entries[i]).value; };
  const Rational s = abs(value(0) + value(1) + value(2) - value(3));
  out.violates_bell = s > 2;
  out.within_tsirelson = within_tsirelson(s);
  out.s = s;
  return out;
}

/// Singlet correlation -cos(theta) when the cosine is rational; undefined
/// otherwise.
inline Correlation correlation_from_cos(const CosClass& cos_class) {
  if (is_rational(cos_class)) return Defined{Rational(-rational_value(cos_class))};
  return Undefined{cos_class};
}

/// Is the counterfactual third side rational, given the realized side and
/// the apparatus rotation (both rational cosines) and their included angle?
inline CosClass counterfactual_definability(const Rational& cos_realized,
                                            const Rational& cos_apparatus,
                                            const PiAngle& gamma) {
  return classify_third_side(cos_realized, cos_apparatus, gamma);
}

/// Four settings on a great circle (positions in units of pi) and the
/// included angles for the counterfactual triangles (1,0), (0,1), (1,1).
/// gamma = pi is exact coplanarity.
struct MeasurementFrame {
  PiAngle alice0;
  PiAngle alice1;
  PiAngle bob0;
  PiAngle bob1;
  std::array<PiAngle, 3> dihedral{PiAngle(1, 1), PiAngle(1, 1), PiAngle(1, 1)};

  /// Relative angles in CHSH slot order.
  std::array<PiAngle, 4> relative_angles() const {
    return {relative_angle(alice0, bob0), relative_angle(alice1, bob0),
            relative_angle(alice0, bob1), relative_angle(alice1, bob1)};
  }

  friend bool operator==(const MeasurementFrame&, const MeasurementFrame&) = default;
};

/// The textbook CHSH frame: separations pi/4, pi/4, pi/4, 3pi/4.
inline MeasurementFrame tsirelson_frame() {
  return {PiAngle(0, 1), PiAngle(1, 2), PiAngle(1, 4), PiAngle(-1, 4)};
}

/// A realized setting pair landed on the 1/N grid: cos^2(theta/2) = n1/N.
struct SnappedSetting {
  std::int64_t n1 = 0;
  std::int64_t strands = 0;

  Rational correlation() const { return correlation_from_descriptor(n1, strands); }

  /// Phase is irrelevant to the correlation and fixed at n2 = N. Empty for
  /// n1 = 0 (antiparallel settings), which Descriptor does not admit.
  std::optional<Descriptor> descriptor() const {
    if (n1 == 0) return std::nullopt;
    return Descriptor(n1, strands, strands);
  }
};

namespace detail {

inline std::int64_t round_half_even(const Rational& x) {
  const BigInt fl = numerator_of(x) / denominator_of(x) -
                    ((numerator_of(x) % denominator_of(x) < 0) ? 1 : 0);
  const Rational frac = x - Rational(fl);
  BigInt r = fl;
  if (frac > Rational(1, 2) || (frac == Rational(1, 2) && fl % 2 != 0)) r += 1;
  return r.convert_to<std::int64_t>();
}

}  // namespace detail

/// Nearest n1 to N cos^2(theta/2), ties toward even n1. Rational cosines
/// are handled exactly; otherwise N cos^2(theta/2) is irrational, no tie is
/// possible and long double rounding is used.
inline std::int64_t snap_n1(const PiAngle& theta, std::int64_t n) {
  const CosClass c = niven_classify(theta);
  if (is_rational(c)) {
    return detail::round_half_even((1 + rational_value(c)) / 2 * n);
  }
  const long double half = theta.radians() / 2.0L;
  const long double target = std::cos(half) * std::cos(half) * static_cast<long double>(n);
  return std::clamp(static_cast<std::int64_t>(std::llround(target)), std::int64_t{0}, n);
}

struct SnappedQuadruple {
  CorrelationQuadruple quadruple;
  std::array<SnappedSetting, 4> settings;
};

/// Realized (perturbed) orientations always land on the rational grid, so
/// every entry is defined.
inline SnappedQuadruple quadruple_from_frame(const MeasurementFrame& frame, std::int64_t n) {
  (void)prime_for_strands(n);
  SnappedQuadruple out;
  const auto angles = frame.relative_angles();
  for (std::size_t i = 0; i < 4; ++i) {
    out.settings[i] = SnappedSetting{snap_n1(angles[i], n), n};
    out.quadruple.entries[i] = Defined{out.settings[i].correlation()};
  }
  return out;
}

/// Counterfactual reading of a frame: (0,0) is the realized pair; (1,0) and
/// (0,1) follow from the realized side and one apparatus rotation through
/// the cosine rule, and (1,1) from the (1,0) side and Bob's rotation.
inline CorrelationQuadruple counterfactual_quadruple(const MeasurementFrame& frame) {
  const auto angles = frame.relative_angles();
  const CosClass realized = niven_classify(angles[0]);
  const CosClass alice_rotation = niven_classify(relative_angle(frame.alice0, frame.alice1));
  const CosClass bob_rotation = niven_classify(relative_angle(frame.bob0, frame.bob1));

  const auto third = [](const CosClass& side, const CosClass& rotation,
                        const PiAngle& gamma) -> CosClass {
    if (!is_rational(side)) return side;
    if (!is_rational(rotation)) return rotation;
    return counterfactual_definability(rational_value(side), rational_value(rotation), gamma);
  };
  const CosClass c10 = third(realized, alice_rotation, frame.dihedral[0]);
  const CosClass c01 = third(realized, bob_rotation, frame.dihedral[1]);
  const CosClass c11 = third(c10, bob_rotation, frame.dihedral[2]);
  return {{correlation_from_cos(realized), correlation_from_cos(c10),
           correlation_from_cos(c01), correlation_from_cos(c11)}};
}

struct ExactConfiguration {
  CorrelationQuadruple quadruple;
  ChshResult result;
};

/// Correlations at exactly the given separations, each defined only when
/// its cosine is rational.
inline ExactConfiguration exact_configuration(const std::array<PiAngle, 4>& separations) {
  ExactConfiguration out;
  for (std::size_t i = 0; i < 4; ++i) {
    out.quadruple.entries[i] = correlation_from_cos(niven_classify(separations[i]));
  }
  out.result = chsh_evaluate(out.quadruple);
  return out;
}

inline ExactConfiguration bell_exact_configuration() {
  return exact_configuration(tsirelson_frame().relative_angles());
}

struct ScanResult {
  std::int64_t strands = 0;
  std::int64_t grid = 0;  // positions are multiples of pi/grid
  MeasurementFrame frame;
  ChshResult result;
  Rational s;
  double gap = 0;  // 2*sqrt(2) - S
  // Best |S| before the Tsirelson guard, reported for reference.
  MeasurementFrame unguarded_frame;
  Rational unguarded_s;
};

namespace detail {

struct ScanCandidate {
  std::int64_t scaled_s = -1;  // |S| * N
  std::int64_t x = 0, y = 0, z = 0;

  // Larger |S| wins; ties go to the smaller y so any chunking of the y range
  // merges to the same answer.
  bool better_than(const ScanCandidate& o) const {
    if (scaled_s != o.scaled_s) return scaled_s > o.scaled_s;
    return y < o.y;
  }
};

struct ScanChunk {
  ScanCandidate guarded;
  ScanCandidate unguarded;
};

/// Positions alice0 = 0, bob0 = x, alice1 = y, bob1 = z (units of pi/G).
/// S*N = f(x) + f(y - x) + f(z) - f(y - z) separates for fixed y into
/// g1(x) + g2(z), so each y costs O(G + N) instead of O(G^2).
inline ScanChunk scan_range(std::span<const std::int64_t> f, std::int64_t n,
                            std::int64_t y_begin, std::int64_t y_end) {
  const auto period = static_cast<std::int64_t>(f.size());
  const std::int64_t offset = 2 * n;
  const std::int64_t width = 4 * n + 1;
  const auto guard_ok = [n](std::int64_t scaled) {
    return within_tsirelson(Rational(scaled, n));
  };
  std::int64_t limit = 0;  // largest admissible |S|*N
  while (guard_ok(limit + 1)) ++limit;

  ScanChunk chunk;
  std::vector<std::int64_t> first_x(static_cast<std::size_t>(width));
  std::vector<std::int64_t> first_z(static_cast<std::size_t>(width));
  std::vector<std::int64_t> a_vals;
  std::vector<std::int64_t> b_vals;
  for (std::int64_t y = y_begin; y < y_end; ++y) {
    std::fill(first_x.begin(), first_x.end(), -1);
    std::fill(first_z.begin(), first_z.end(), -1);
    for (std::int64_t x = 0; x < period; ++x) {
      const std::int64_t a = f[x] + f[((y - x) % period + period) % period];
      auto& slot = first_x[static_cast<std::size_t>(a + offset)];
      if (slot < 0) slot = x;
    }
    for (std::int64_t z = 0; z < period; ++z) {
      const std::int64_t b = f[z] - f[((y - z) % period + period) % period];
      auto& slot = first_z[static_cast<std::size_t>(b + offset)];
      if (slot < 0) slot = z;
    }
    a_vals.clear();
    b_vals.clear();
    for (std::int64_t v = 0; v < width; ++v) {
      if (first_x[static_cast<std::size_t>(v)] >= 0) a_vals.push_back(v - offset);
      if (first_z[static_cast<std::size_t>(v)] >= 0) b_vals.push_back(v - offset);
    }
    const auto consider = [&](ScanCandidate& best, std::int64_t a, std::int64_t b) {
      ScanCandidate c{std::abs(a + b), first_x[static_cast<std::size_t>(a + offset)], y,
                      first_z[static_cast<std::size_t>(b + offset)]};
      if (c.better_than(best)) best = c;
    };
    consider(chunk.unguarded, a_vals.back(), b_vals.back());
    consider(chunk.unguarded, a_vals.front(), b_vals.front());

    // Largest a + b <= limit.
    std::int64_t j = static_cast<std::int64_t>(b_vals.size()) - 1;
    std::optional<std::pair<std::int64_t, std::int64_t>> hi;
    for (const std::int64_t a : a_vals) {
      while (j >= 0 && a + b_vals[static_cast<std::size_t>(j)] > limit) --j;
      if (j < 0) break;
      const std::int64_t b = b_vals[static_cast<std::size_t>(j)];
      if (!hi || a + b > hi->first + hi->second) hi = {a, b};
    }
    // Smallest a + b >= -limit.
    std::size_t k = 0;
    std::optional<std::pair<std::int64_t, std::int64_t>> lo;
    for (auto it = a_vals.rbegin(); it != a_vals.rend(); ++it) {
      const std::int64_t a = *it;
      while (k < b_vals.size() && a + b_vals[k] < -limit) ++k;
      if (k == b_vals.size()) break;
      if (!lo || a + b_vals[k] < lo->first + lo->second) lo = {a, b_vals[k]};
    }
    if (hi) consider(chunk.guarded, hi->first, hi->second);
    if (lo) consider(chunk.guarded, lo->first, lo->second);
  }
  return chunk;
}

inline MeasurementFrame frame_from_indices(const ScanCandidate& c, std::int64_t grid) {
  return {PiAngle(0, 1), PiAngle(c.y, grid), PiAngle(c.x, grid), PiAngle(c.z, grid)};
}

}  // namespace detail

/// Maximizes S over coplanar frames whose four settings lie on the grid
/// k*pi/G, every relative angle snapped through quadruple_from_frame.
/// Snapping moves each correlation by up to 1/N, which can push a
/// consistent frame past 2*sqrt(2); such frames are excluded from the
/// optimum and the unguarded maximum is reported alongside.
inline ScanResult chsh_scan(std::int64_t n, std::int64_t grid,
                            unsigned threads = std::thread::hardware_concurrency()) {
  (void)prime_for_strands(n);
  if (grid < 1) throw std::invalid_argument("grid must be >= 1");
  const std::int64_t period = 2 * grid;
  std::vector<std::int64_t> f(static_cast<std::size_t>(period));
  for (std::int64_t k = 0; k < period; ++k) {
    // S*N numerator of the snapped correlation 1 - 2 n1/N.
    f[static_cast<std::size_t>(k)] = n - 2 * snap_n1(PiAngle(k, grid).folded(), n);
  }

  threads = std::clamp<unsigned>(threads, 1U, static_cast<unsigned>(period));
  std::vector<detail::ScanChunk> chunks(threads);
  std::vector<std::thread> workers;
  const std::int64_t per = (period + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::int64_t lo = std::min<std::int64_t>(period, t * per);
    const std::int64_t hi = std::min<std::int64_t>(period, lo + per);
    workers.emplace_back([&, t, lo, hi] { chunks[t] = detail::scan_range(f, n, lo, hi); });
  }
  for (auto& w : workers) w.join();

  detail::ScanChunk best;
  for (const auto& c : chunks) {
    if (c.guarded.better_than(best.guarded)) best.guarded = c.guarded;
    if (c.unguarded.better_than(best.unguarded)) best.unguarded = c.unguarded;
  }
  if (best.guarded.scaled_s < 0) throw std::logic_error("chsh_scan: empty search space");

  ScanResult out;
  out.strands = n;
  out.grid = grid;
  out.frame = detail::frame_from_indices(best.guarded, grid);
  out.result = chsh_evaluate(quadruple_from_frame(out.frame, n).quadruple);
  out.s = *out.result.s;
  if (out.s != Rational(best.guarded.scaled_s, n)) {
    throw std::logic_error("chsh_scan: frame re-evaluation disagrees with scan");
  }
  out.gap = kTsirelsonBound - to_double(out.s);
  out.unguarded_frame = detail::frame_from_indices(best.unguarded, grid);
  out.unguarded_s = Rational(best.unguarded.scaled_s, n);
  return out;
}

struct LimitRow {
  std::int64_t strands = 0;
  Rational s_max;
  double gap = 0;
};

inline std::vector<LimitRow> singular_limit_table(std::span<const std::int64_t> ns,
                                                  std::int64_t grid) {
  std::vector<LimitRow> rows;
  rows.reserve(ns.size());
  for (const std::int64_t n : ns) {
    const ScanResult r = chsh_scan(n, grid);
    rows.push_back({n, r.s, r.gap});
  }
  return rows;
}

}  // namespace invset
