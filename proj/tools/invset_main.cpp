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

// Command-line front end. Exit codes: 0 success or defined result, 2 the
// mathematical result is undefined or irrational, 1 usage or input error.

#include "invset/invset.hpp"
#include "invset/json_io.hpp"
#include "invset/run_config.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace invset;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUndefined = 2;

struct Flags {
  std::string config_path;
  std::string out_path;
  std::optional<std::int64_t> strands;
  std::optional<std::int64_t> depth;
  std::optional<std::string> contraction;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> ensemble_size;
  std::optional<std::int64_t> grid;
  std::optional<std::string> format;
};

RunConfig resolve_config(const Flags& flags) {
  RunConfig cfg;
  if (!flags.config_path.empty()) cfg = load_config_file(flags.config_path, cfg);
  if (flags.strands) cfg.strands = *flags.strands;
  if (flags.depth) cfg.depth = *flags.depth;
  if (flags.contraction) cfg.contraction = parse_rational(*flags.contraction);
  if (flags.seed) cfg.seed = *flags.seed;
  if (flags.ensemble_size) cfg.ensemble_size = *flags.ensemble_size;
  if (flags.grid) cfg.grid = *flags.grid;
  if (flags.format) {
    if (*flags.format == "json") {
      cfg.format = OutputFormat::kJson;
    } else if (*flags.format == "csv") {
      cfg.format = OutputFormat::kCsv;
    } else {
      throw std::invalid_argument("--format must be json or csv");
    }
  }
  return cfg;
}

struct CommandOutput {
  std::string text;
  int code = kExitOk;
};

std::string dump(const Json& j) { return j.dump() + "\n"; }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

std::int64_t parse_int(const std::string& text) {
  std::size_t used = 0;
  try {
    const long long v = std::stoll(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("expected an integer, got '" + text + "'");
}

CantorPoint parse_digits(const std::string& text) {
  std::vector<std::uint32_t> digits;
  for (const auto& part : split(text, ',')) {
    const std::int64_t d = parse_int(part);
    if (d < 0) throw std::invalid_argument("Cantor digits must be nonnegative");
    digits.push_back(static_cast<std::uint32_t>(d));
  }
  return CantorPoint(std::move(digits));
}

PlanarPoint parse_planar(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw std::invalid_argument("off-set point needs x,y");
  return {parse_rational(parts[0]), parse_rational(parts[1])};
}

int code_for(const CosClass& c) { return is_rational(c) ? kExitOk : kExitUndefined; }


MeasurementFrame parse_frame(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) throw std::invalid_argument("--frame needs alice0,alice1,bob0,bob1");
  return {parse_pi_angle(parts[0]), parse_pi_angle(parts[1]), parse_pi_angle(parts[2]),
          parse_pi_angle(parts[3])};
}

// "angle:a/b" is the singlet correlation -cos(a*pi/b); anything else is
// a rational correlation value.
Correlation parse_correlation(const std::string& text) {
  constexpr std::string_view kAnglePrefix = "angle:";
  if (text.rfind(kAnglePrefix, 0) == 0) {
    return correlation_from_cos(niven_classify(parse_pi_angle(text.substr(kAnglePrefix.size()))));
  }
  const Rational v = parse_rational(text);
  if (abs(v) > 1) throw std::invalid_argument("correlation outside [-1, 1]: " + text);
  return Defined{v};
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::filesystem::path path(out_path);
  if (path.is_relative()) {
    if (const char* dir = std::getenv("OUT_DIR"); dir != nullptr && *dir != '\0') {
      path = std::filesystem::path(dir) / path;
    }
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact rationality, p-adic metric and CHSH tools"};
  app.require_subcommand(1);
  Flags flags;
  app.add_option("--config", flags.config_path, "key = value config file");
  app.add_option("--out", flags.out_path, "write output to this file (relative to $OUT_DIR)");

  const auto add_n = [&](CLI::App* cmd) {
    cmd->add_option("--N", flags.strands, "strand count N (N + 1 Pythagorean prime)");
  };

  std::function<CommandOutput(const RunConfig&)> action;

  // niven
  std::int64_t niven_a = 0;
  std::int64_t niven_b = 1;
  auto* niven = app.add_subcommand("niven", "classify cos(a*pi/b)");
  niven->add_option("a", niven_a)->required();
  niven->add_option("b", niven_b)->required();
  niven->callback([&] {
    action = [&](const RunConfig&) {
      if (niven_b < 1) throw std::invalid_argument("b must be >= 1");
      const CosClass c = niven_classify(PiAngle(niven_a, niven_b));
      return CommandOutput{dump(to_json(c)), code_for(c)};
    };
  });

  // classify-side
  std::string cos_a_text, cos_b_text;
  std::int64_t gamma_a = 1, gamma_b = 1;
  auto* side = app.add_subcommand("classify-side",
                                  "classify the third side of a spherical triangle");
  side->add_option("cosA", cos_a_text)->required();
  side->add_option("cosB", cos_b_text)->required();
  side->add_option("gamma_a", gamma_a)->required();
  side->add_option("gamma_b", gamma_b)->required();
  side->callback([&] {
    action = [&](const RunConfig&) {
      if (gamma_b < 1) throw std::invalid_argument("gamma_b must be >= 1");
      const CosClass c = classify_third_side(parse_rational(cos_a_text),
                                             parse_rational(cos_b_text),
                                             PiAngle(gamma_a, gamma_b));
      return CommandOutput{dump(to_json(c)), code_for(c)};
    };
  });

  // chsh
  auto* chsh = app.add_subcommand("chsh", "CHSH evaluation, scans and simulation");
  chsh->require_subcommand(1);

  auto* scan = chsh->add_subcommand("scan", "maximize S over grid frames");
  add_n(scan);
  scan->add_option("--grid", flags.grid, "positions are multiples of pi/grid");
  unsigned threads = 0;
  scan->add_option("--threads", threads, "worker threads (0 = hardware)");
  scan->callback([&] {
    action = [&](const RunConfig& cfg) {
      const ScanResult r =
          chsh_scan(cfg.strands, cfg.grid, threads == 0 ? std::thread::hardware_concurrency() : threads);
      return CommandOutput{dump(to_json(r)), kExitOk};
    };
  });

  std::vector<std::string> eval_entries;
  auto* eval = chsh->add_subcommand("eval", "evaluate |c00 + c10 + c01 - c11|");
  eval->add_option("correlations", eval_entries, "four rationals, or angle:a/b for -cos(a*pi/b)")
      ->required()
      ->expected(4);
  eval->callback([&] {
    action = [&](const RunConfig&) {
      CorrelationQuadruple q;
      for (std::size_t i = 0; i < 4; ++i) q.entries[i] = parse_correlation(eval_entries[i]);
      const ChshResult r = chsh_evaluate(q);
      return CommandOutput{dump(to_json(r)), r.s ? kExitOk : kExitUndefined};
    };
  });

  std::string frame_text;
  std::string outcomes_path;
  auto* sim = chsh->add_subcommand("sim", "sub-ensemble simulation of the four correlations");
  add_n(sim);
  sim->add_option("--M", flags.ensemble_size, "outcomes per sub-ensemble (M = N: exact mode)");
  sim->add_option("--seed", flags.seed, "64-bit seed");
  sim->add_option("--frame", frame_text, "alice0,alice1,bob0,bob1 in units of pi");
  sim->add_option("--outcomes", outcomes_path, "also write raw outcomes CSV here");
  sim->callback([&] {
    action = [&](const RunConfig& cfg) {
      const MeasurementFrame frame = frame_text.empty() ? tsirelson_frame() : parse_frame(frame_text);
      const SimReport r = run_chsh_experiment(frame, cfg.strands, cfg.ensemble_size, cfg.seed);
      if (!outcomes_path.empty()) write_output(outcomes_csv(r), outcomes_path);
      Json j = to_json(r);
      j["frame"] = to_json(frame);
      return CommandOutput{dump(j), kExitOk};
    };
  });

  std::string exact_angles;
  auto* exact = chsh->add_subcommand("exact", "CHSH at exact separations (default textbook)");
  exact->add_option("--angles", exact_angles, "four separations t00,t10,t01,t11 in units of pi");
  exact->callback([&] {
    action = [&](const RunConfig&) {
      std::array<PiAngle, 4> seps = tsirelson_frame().relative_angles();
      if (!exact_angles.empty()) {
        const auto parts = split(exact_angles, ',');
        if (parts.size() != 4) throw std::invalid_argument("--angles needs four values");
        for (std::size_t i = 0; i < 4; ++i) seps[i] = parse_pi_angle(parts[i]);
      }
      const ExactConfiguration e = exact_configuration(seps);
      Json j = to_json(e.result);
      j["correlations"] = to_json(e.quadruple);
      return CommandOutput{dump(j), e.result.s ? kExitOk : kExitUndefined};
    };
  });

  std::string ns_text = "4,12,16,28,36,40,52,112,520";
  auto* table = chsh->add_subcommand("limit-table", "S_max and 2*sqrt(2) - S_max per N");
  table->add_option("--Ns", ns_text, "comma-separated strand counts");
  table->add_option("--grid", flags.grid, "positions are multiples of pi/grid");
  table->add_option("--format", flags.format, "csv (default) or json");
  table->callback([&] {
    action = [&](const RunConfig& cfg) {
      std::vector<std::int64_t> ns;
      for (const auto& part : split(ns_text, ',')) ns.push_back(parse_int(part));
      const auto rows = singular_limit_table(ns, cfg.grid);
      if (!flags.format || *flags.format == "csv") return CommandOutput{limit_table_csv(rows), kExitOk};
      Json arr = Json::array();
      for (const auto& row : rows) {
        arr.push_back(Json{{"N", row.strands},
                           {"S_max", to_string(row.s_max)},
                           {"S_max_float", to_double(row.s_max)},
                           {"gap", row.gap}});
      }
      return CommandOutput{dump(arr), kExitOk};
    };
  });

  // gp
  auto* gp = app.add_subcommand("gp", "p-adic valuations, Cantor embedding and the metric g_p");
  gp->require_subcommand(1);

  std::int64_t prime_arg = 0;
  auto* prime = gp->add_subcommand("prime", "Pythagorean prime test and two-square split");
  prime->add_option("p", prime_arg)->required();
  prime->callback([&] {
    action = [&](const RunConfig&) {
      if (prime_arg < 2) throw std::invalid_argument("p must be >= 2");
      const auto r = is_pythagorean_prime(prime_arg);
      Json j{{"pythagorean", r.has_value()}};
      if (r) {
        j["s"] = r->s;
        j["t"] = r->t;
      }
      return CommandOutput{dump(j), kExitOk};
    };
  });

  std::optional<std::int64_t> gp_p;
  std::vector<std::string> on_points, off_points;
  auto* dist = gp->add_subcommand("dist", "g_p distance between two state-space points");
  dist->add_option("--on", on_points, "on-set point as comma-separated digits");
  dist->add_option("--off", off_points, "off-set point as x,y rationals");
  dist->add_option("--p", gp_p, "Pythagorean prime (default N + 1)");
  dist->add_option("--s", flags.contraction, "contraction ratio (default 1/(2N))");
  add_n(dist);
  dist->callback([&] {
    if (gp_p) flags.strands = *gp_p - 1;
    action = [&](const RunConfig& cfg) {
      std::vector<StateSpacePoint> pts;
      for (const auto& t : on_points) pts.emplace_back(OnSet{parse_digits(t)});
      for (const auto& t : off_points) pts.emplace_back(OffSet{parse_planar(t)});
      if (pts.size() != 2) throw std::invalid_argument("gp dist needs exactly two points");
      const PythagoreanPrime pp = prime_for_strands(cfg.strands);
      const ExactDistance d = gp_distance(pts[0], pts[1], pp, cfg.effective_contraction());
      Json j;
      const SqrtResult root = sqrt_classify(d.squared());
      if (const auto* r = std::get_if<Rational>(&root)) {
        j["distance"] = to_short_string(*r);
      } else {
        j["distance"] = std::get<QuadraticValue>(root).to_string();
      }
      j["distance_squared"] = to_string(d.squared());
      j["distance_float"] = d.approx();
      return CommandOutput{dump(j), kExitOk};
    };
  });

  std::string embed_digits;
  auto* embed = gp->add_subcommand("embed", "planar IFS image of a Cantor point");
  embed->add_option("digits", embed_digits, "comma-separated digits")->required();
  embed->add_option("--p", gp_p, "Pythagorean prime (default N + 1)");
  embed->add_option("--s", flags.contraction, "contraction ratio (default 1/(2N))");
  add_n(embed);
  embed->callback([&] {
    if (gp_p) flags.strands = *gp_p - 1;
    action = [&](const RunConfig& cfg) {
      const CantorPoint pt = parse_digits(embed_digits);
      const PythagoreanPrime pp = prime_for_strands(cfg.strands);
      Json j{{"digits", to_json(pt)}, {"p", pp.p}};
      j["point"] = to_json(cantor_embed(pt, pp, cfg.effective_contraction()));
      return CommandOutput{dump(j), kExitOk};
    };
  });

  auto* sample = gp->add_subcommand("sample", "seeded random Cantor point at the configured depth");
  sample->add_option("--p", gp_p, "Pythagorean prime (default N + 1)");
  sample->add_option("--depth", flags.depth, "fractal depth J");
  sample->add_option("--seed", flags.seed, "64-bit seed");
  add_n(sample);
  sample->callback([&] {
    if (gp_p) flags.strands = *gp_p - 1;
    action = [&](const RunConfig& cfg) {
      const PythagoreanPrime pp = prime_for_strands(cfg.strands);
      std::mt19937_64 rng(cfg.seed);
      std::vector<std::uint32_t> digits;
      for (std::int64_t j = 0; j < cfg.depth; ++j) {
        digits.push_back(static_cast<std::uint32_t>(rng() % static_cast<std::uint64_t>(pp.p)));
      }
      const CantorPoint pt(std::move(digits));
      Json j{{"digits", to_json(pt)}, {"p", pp.p}};
      j["point"] = to_json(cantor_embed(pt, pp, cfg.effective_contraction()));
      return CommandOutput{dump(j), kExitOk};
    };
  });

  std::string norm_arg;
  std::int64_t norm_p = 0;
  auto* norm = gp->add_subcommand("norm", "p-adic valuation and norm of a rational");
  norm->add_option("q", norm_arg)->required();
  norm->add_option("--p", norm_p, "prime")->required();
  norm->callback([&] {
    action = [&](const RunConfig&) {
      const Rational q = parse_rational(norm_arg);
      Json j{{"q", to_string(q)}, {"p", norm_p}, {"norm", to_string(padic_norm(q, norm_p))}};
      if (q != 0) {
        j["valuation"] = static_cast<std::int64_t>(padic_valuation(numerator_of(q), norm_p).value()) -
                         static_cast<std::int64_t>(padic_valuation(denominator_of(q), norm_p).value());
      } else {
        j["valuation"] = "inf";
      }
      return CommandOutput{dump(j), kExitOk};
    };
  });

  // helix
  auto* helix = app.add_subcommand("helix", "descriptor <-> qubit state correspondence");
  helix->require_subcommand(1);
  std::int64_t h_n1 = 0, h_n2 = 0, h_n = 0;
  auto* state = helix->add_subcommand("state", "descriptor (n1, n2, N) to qubit state");
  state->add_option("n1", h_n1)->required();
  state->add_option("n2", h_n2)->required();
  state->add_option("N", h_n)->required();
  state->callback([&] {
    action = [&](const RunConfig&) {
      const Descriptor d(h_n1, h_n2, h_n);
      Json j{{"descriptor", to_json(d)}, {"state", to_json(descriptor_to_state(d))}};
      j["correlation"] = to_string(correlation_from_descriptor(d.n1(), d.strands()));
      return CommandOutput{dump(j), kExitOk};
    };
  });

  auto* labels = helix->add_subcommand("labels", "a/A strand labels for a descriptor");
  labels->add_option("n1", h_n1)->required();
  labels->add_option("n2", h_n2)->required();
  labels->add_option("N", h_n)->required();
  labels->callback([&] {
    action = [&](const RunConfig&) {
      const LabelString l = label_helix(Descriptor(h_n1, h_n2, h_n));
      return CommandOutput{dump(Json{{"labels", l.labels}, {"count_a", l.count_a}}), kExitOk};
    };
  });

  std::string inv_amp, inv_phase;
  auto* invert = helix->add_subcommand("invert", "qubit state to descriptor, or non-ontic");
  invert->add_option("cos_sq_half_theta", inv_amp)->required();
  invert->add_option("phase_fraction", inv_phase)->required();
  invert->add_option("N", h_n)->required();
  invert->callback([&] {
    action = [&](const RunConfig&) {
      const auto r = state_to_descriptor({parse_rational(inv_amp), parse_rational(inv_phase)}, h_n);
      Json j{{"ontic", std::holds_alternative<Descriptor>(r)}};
      if (const auto* d = std::get_if<Descriptor>(&r)) j["descriptor"] = to_json(*d);
      return CommandOutput{dump(j), kExitOk};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    const RunConfig cfg = resolve_config(flags);
    cfg.validate();
    const CommandOutput out = action(cfg);
    write_output(out.text, flags.out_path);
    return out.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
