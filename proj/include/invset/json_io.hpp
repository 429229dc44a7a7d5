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

// JSON and CSV encodings. Rationals are "num/den" strings; floats appear
// only in fields suffixed _float or named gap / std_errs.

#include "invset/bell_geometry.hpp"
#include "invset/ensemble_sim.hpp"
#include "invset/exact_arith.hpp"
#include "invset/hilbert_correspondence.hpp"
#include "invset/padic_geometry.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace invset {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, wider ones strings.
inline Json integer_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

inline Json to_json(const IntPolynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coefficients()) arr.push_back(integer_to_json(c));
  return arr;
}

inline Json to_json(const CosClass& c) {
  Json out;
  if (const auto* r = std::get_if<RationalCos>(&c)) {
    out["rational"] = true;
    out["value"] = to_string(r->value);
    return out;
  }
  const auto& irr = std::get<IrrationalCos>(c);
  out["rational"] = false;
  out["degree"] = irr.degree;
  if (irr.degree_is_bound) out["degree_is_bound"] = true;
  if (irr.min_poly) out["minpoly"] = to_json(*irr.min_poly);
  return out;
}

inline Json to_json(const Correlation& c) {
  if (const auto* d = std::get_if<Defined>(&c)) {
    return Json{{"defined", true}, {"value", to_string(d->value)}};
  }
  return Json{{"defined", false}, {"witness", to_json(std::get<Undefined>(c).witness)}};
}

inline Json to_json(const CorrelationQuadruple& q) {
  static constexpr const char* kNames[4] = {"c00", "c10", "c01", "c11"};
  Json out;
  for (std::size_t i = 0; i < 4; ++i) out[kNames[i]] = to_json(q.entries[i]);
  return out;
}

inline Json to_json(const ChshResult& r) {
  Json out;
  out["defined"] = r.s.has_value();
  if (r.s) {
    out["S"] = to_string(*r.s);
    out["S_float"] = to_double(*r.s);
  }
  out["violates_bell"] = r.violates_bell;
  out["within_tsirelson"] = r.within_tsirelson;
  if (r.witness) out["witness"] = to_json(*r.witness);
  return out;
}

/// Positions and included angles are multiples of pi, written "a/b".
inline Json to_json(const MeasurementFrame& f) {
  Json out;
  out["unit"] = "pi";
  out["alice0"] = f.alice0.to_string();
  out["alice1"] = f.alice1.to_string();
  out["bob0"] = f.bob0.to_string();
  out["bob1"] = f.bob1.to_string();
  Json dihedral = Json::array();
  for (const auto& g : f.dihedral) dihedral.push_back(g.to_string());
  out["dihedral"] = dihedral;
  return out;
}

inline Json to_json(const ScanResult& r) {
  Json out;
  out["N"] = r.strands;
  out["p"] = r.strands + 1;
  out["grid"] = "1/" + std::to_string(r.grid);
  out["frame"] = to_json(r.frame);
  out["S"] = to_string(r.s);
  out["S_float"] = to_double(r.s);
  out["gap"] = r.gap;
  out["violates_bell"] = r.result.violates_bell;
  out["within_tsirelson"] = r.result.within_tsirelson;
  out["unguarded"] = Json{{"S", to_string(r.unguarded_s)},
                          {"S_float", to_double(r.unguarded_s)},
                          {"frame", to_json(r.unguarded_frame)}};
  return out;
}

inline Json to_json(const Descriptor& d) {
  return Json{{"n1", d.n1()}, {"n2", d.n2()}, {"N", d.strands()}};
}

inline Descriptor descriptor_from_json(const Json& j) {
  return Descriptor(j.at("n1").get<std::int64_t>(), j.at("n2").get<std::int64_t>(),
                    j.at("N").get<std::int64_t>());
}

inline Json to_json(const QubitState& q) {
  return Json{{"cos_sq_half_theta", to_string(q.cos_sq_half_theta)},
              {"phase_fraction", to_string(q.phase_fraction)}};
}

inline Json to_json(const CantorPoint& p) {
  Json arr = Json::array();
  for (const auto d : p.digits()) arr.push_back(d);
  return arr;
}

inline CantorPoint cantor_point_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("CantorPoint must be a JSON array");
  std::vector<std::uint32_t> digits;
  for (const auto& d : j) {
    if (!d.is_number_unsigned()) throw std::invalid_argument("Cantor digits must be nonnegative integers");
    digits.push_back(d.get<std::uint32_t>());
  }
  return CantorPoint(std::move(digits));
}

inline Json to_json(const PlanarPoint& p) {
  return Json{{"x", to_string(p.x)},
              {"y", to_string(p.y)},
              {"x_float", to_double(p.x)},
              {"y_float", to_double(p.y)}};
}

inline Json to_json(const SimReport& r) {
  static constexpr const char* kNames[4] = {"c00", "c10p", "c0p1", "c1p1p"};
  Json out;
  out["N"] = r.strands;
  out["M"] = r.ensemble_size;
  out["seed"] = r.seed;
  out["exact_mode"] = r.ensemble_size == r.strands;
  Json empirical;
  Json exact;
  Json errs;
  for (std::size_t i = 0; i < 4; ++i) {
    empirical[kNames[i]] = to_string(r.empirical[i]);
    exact[kNames[i]] = to_string(r.exact[i]);
    errs[kNames[i]] = r.std_errs[i];
  }
  out["empirical"] = empirical;
  out["exact"] = exact;
  out["std_errs"] = errs;
  out["S_empirical"] = to_string(r.s_empirical_exact);
  out["S_empirical_float"] = r.s_empirical;
  out["S_exact"] = to_string(r.s_exact);
  out["S_exact_float"] = to_double(r.s_exact);
  Json descriptors = Json::array();
  for (const auto& e : r.ensembles) {
    const auto d = e.descriptor();
    descriptors.push_back(d ? to_json(*d) : Json{{"n1", e.n1}, {"n2", nullptr}, {"N", e.strands}});
  }
  out["descriptors"] = descriptors;
  return out;
}

/// CSV "pairId,alice,bob", one row per outcome, pairs in CHSH order.
inline std::string outcomes_csv(const SimReport& r) {
  std::ostringstream os;
  os << "pairId,alice,bob\n";
  for (const auto& e : r.ensembles) {
    for (const auto& o : e.outcomes) {
      os << '"' << pair_name(e.pair) << "\"," << int{o.alice} << ',' << int{o.bob} << '\n';
    }
  }
  return os.str();
}

/// CSV "N,S_max,gap"; S_max as an exact rational.
inline std::string limit_table_csv(const std::vector<LimitRow>& rows) {
  std::ostringstream os;
  os.precision(17);
  os << "N,S_max,gap\n";
  for (const auto& row : rows) {
    os << row.strands << ',' << to_string(row.s_max) << ',' << row.gap << '\n';
  }
  return os.str();
}

}  // namespace invset
