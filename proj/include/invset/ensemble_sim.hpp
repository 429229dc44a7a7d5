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

// Finite sub-ensembles realizing each CHSH correlation separately, one
// sub-ensemble per setting pair.

#include "invset/bell_geometry.hpp"
#include "invset/hilbert_correspondence.hpp"
#include "invset/rational.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <future>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace invset {

enum class PairId : std::uint8_t { k00 = 0, k10p = 1, k0p1 = 2, k1p1p = 3 };

inline constexpr std::array<PairId, 4> kAllPairs{PairId::k00, PairId::k10p, PairId::k0p1,
                                                 PairId::k1p1p};

inline std::string_view pair_name(PairId id) {
  switch (id) {
    case PairId::k00: return "0,0";
    case PairId::k10p: return "1,0'";
    case PairId::k0p1: return "0',1";
    case PairId::k1p1p: return "1',1'";
  }
  return "?";
}

struct Outcome {
  std::int8_t alice = 1;
  std::int8_t bob = 1;
  friend bool operator==(const Outcome&, const Outcome&) = default;
};

struct SubEnsemble {
  PairId pair = PairId::k00;
  std::int64_t n1 = 0;
  std::int64_t strands = 0;
  std::uint64_t seed = 0;
  std::vector<Outcome> outcomes;

  std::optional<Descriptor> descriptor() const {
    return SnappedSetting{n1, strands}.descriptor();
  }
  bool exact_mode() const {
    return static_cast<std::int64_t>(outcomes.size()) == strands;
  }
};

/// SplitMix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Per-pair stream seed: mix64(seed ^ mix64(pair index + 1)).
inline std::uint64_t derive_seed(std::uint64_t seed, PairId pair) {
  return mix64(seed ^ mix64(static_cast<std::uint64_t>(pair) + 1));
}

namespace detail {

// Unbiased integer in [0, bound) by rejection; std distributions are not
// reproducible across standard libraries, the engine itself is.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw = 0;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

}  // namespace detail

/// Outcomes for one setting pair. With M == N, a seeded shuffle of exactly
/// n1 anticorrelated and N - n1 correlated pairs with Alice's signs
/// balanced; otherwise M independent draws, anticorrelated with probability
/// n1/N and Alice's sign a fair coin.
inline SubEnsemble generate_outcomes(std::int64_t n1, std::int64_t n, std::int64_t m,
                                     std::uint64_t seed, PairId pair = PairId::k00) {
  if (n < 1 || n1 < 0 || n1 > n) throw std::invalid_argument("n1 outside 0..N");
  if (m < 1) throw std::invalid_argument("ensemble size M must be >= 1");
  SubEnsemble out{pair, n1, n, seed, {}};
  out.outcomes.reserve(static_cast<std::size_t>(m));
  std::mt19937_64 rng(seed);
  if (m == n) {
    for (std::int64_t i = 0; i < n; ++i) {
      const std::int8_t alice = (i % 2 == 0) ? 1 : -1;
      const bool anti = i < n1;
      out.outcomes.push_back({alice, static_cast<std::int8_t>(anti ? -alice : alice)});
    }
    for (std::size_t i = out.outcomes.size() - 1; i > 0; --i) {
      const auto j = static_cast<std::size_t>(detail::uniform_below(rng, i + 1));
      std::swap(out.outcomes[i], out.outcomes[j]);
    }
    return out;
  }
  for (std::int64_t i = 0; i < m; ++i) {
    const std::int8_t alice = detail::uniform_below(rng, 2) == 0 ? 1 : -1;
    const bool anti = detail::uniform_below(rng, static_cast<std::uint64_t>(n)) <
                      static_cast<std::uint64_t>(n1);
    out.outcomes.push_back({alice, static_cast<std::int8_t>(anti ? -alice : alice)});
  }
  return out;
}

inline SubEnsemble generate_subensemble(const Descriptor& d, std::int64_t m,
                                        std::uint64_t seed, PairId pair = PairId::k00) {
  return generate_outcomes(d.n1(), d.strands(), m, seed, pair);
}

/// (sum of a_i b_i) / M, exactly.
inline Rational estimate_correlation(const SubEnsemble& se) {
  if (se.outcomes.empty()) throw std::invalid_argument("empty ensemble");
  std::int64_t sum = 0;
  for (const auto& o : se.outcomes) sum += o.alice * o.bob;
  return Rational(sum, static_cast<std::int64_t>(se.outcomes.size()));
}

struct SimReport {
  std::int64_t strands = 0;
  std::int64_t ensemble_size = 0;
  std::uint64_t seed = 0;
  std::array<Rational, 4> empirical;
  std::array<Rational, 4> exact;
  Rational s_empirical_exact;  // |S| of the empirical correlations, unrounded
  double s_empirical = 0;
  Rational s_exact;
  std::array<double, 4> std_errs{};
  std::array<SubEnsemble, 4> ensembles;
};

inline Rational chsh_combination(const std::array<Rational, 4>& c) {
  return abs(c[0] + c[1] + c[2] - c[3]);
}

/// Four independent sub-ensembles, one per snapped setting pair of the
/// frame, generated concurrently and merged in pair order.
inline SimReport run_chsh_experiment(const MeasurementFrame& frame, std::int64_t n,
                                     std::int64_t m, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("ensemble size M must be >= 1");
  const SnappedQuadruple snapped = quadruple_from_frame(frame, n);
  SimReport report;
  report.strands = n;
  report.ensemble_size = m;
  report.seed = seed;

  std::array<std::future<SubEnsemble>, 4> pending;
  for (std::size_t i = 0; i < 4; ++i) {
    const PairId pair = kAllPairs[i];
    const std::int64_t n1 = snapped.settings[i].n1;
    pending[i] = std::async(std::launch::async, [=] {
      return generate_outcomes(n1, n, m, derive_seed(seed, pair), pair);
    });
  }
  for (std::size_t i = 0; i < 4; ++i) {
    report.ensembles[i] = pending[i].get();
    report.empirical[i] = estimate_correlation(report.ensembles[i]);
    report.exact[i] = snapped.settings[i].correlation();
    report.std_errs[i] = 1.0 / std::sqrt(static_cast<double>(m));
  }
  report.s_empirical_exact = chsh_combination(report.empirical);
  report.s_empirical = to_double(report.s_empirical_exact);
  report.s_exact = chsh_combination(report.exact);
  return report;
}

}  // namespace invset
