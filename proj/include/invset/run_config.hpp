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

#include "invset/padic_geometry.hpp"
#include "invset/rational.hpp"

#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>

namespace invset {

enum class OutputFormat { kJson, kCsv };

struct RunConfig {
  std::int64_t strands = 520;
  std::int64_t depth = 8;
  std::optional<Rational> contraction;  // defaults to 1/(2N)
  std::uint64_t seed = 0;
  std::int64_t ensemble_size = 520;
  std::int64_t grid = 1440;
  OutputFormat format = OutputFormat::kJson;

  Rational effective_contraction() const {
    return contraction ? *contraction : Rational(1, 2 * strands);
  }

  /// Throws std::invalid_argument on any violated invariant.
  void validate() const {
    (void)prime_for_strands(strands);
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    check_contraction(effective_contraction(), strands);
    if (ensemble_size < 1) throw std::invalid_argument("M must be >= 1");
    if (grid < 1) throw std::invalid_argument("grid must be >= 1");
  }
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::int64_t parse_int64(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  try {
    const long long v = std::stoll(value, &used);
    if (used == value.size()) return v;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("config: '" + key + "' expects an integer, got '" + value + "'");
}

}  // namespace detail

/// Applies "key = value" lines; '#' starts a comment. Keys: N, depth,
/// contraction, seed, M, grid, format.
inline void apply_config_text(std::istream& in, RunConfig& cfg) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string value = detail::trim(line.substr(eq + 1));
    if (key == "N") {
      cfg.strands = detail::parse_int64(key, value);
    } else if (key == "depth") {
      cfg.depth = detail::parse_int64(key, value);
    } else if (key == "contraction") {
      cfg.contraction = parse_rational(value);
    } else if (key == "seed") {
      cfg.seed = static_cast<std::uint64_t>(detail::parse_int64(key, value));
    } else if (key == "M") {
      cfg.ensemble_size = detail::parse_int64(key, value);
    } else if (key == "grid") {
      cfg.grid = detail::parse_int64(key, value);
    } else if (key == "format") {
      if (value == "json") {
        cfg.format = OutputFormat::kJson;
      } else if (value == "csv") {
        cfg.format = OutputFormat::kCsv;
      } else {
        throw std::invalid_argument("config: format must be json or csv");
      }
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
}

inline RunConfig load_config_file(const std::string& path, RunConfig cfg = {}) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  apply_config_text(in, cfg);
  return cfg;
}

}  // namespace invset
