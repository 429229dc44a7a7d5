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

#include "invset/json_io.hpp"

#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "invset/run_config.hpp"

namespace invset {
namespace {

TEST(RationalStringTest, RoundTrip) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> num(-1'000'000'000, 1'000'000'000);
  std::uniform_int_distribution<std::int64_t> den(1, 1'000'000'000);
  for (int i = 0; i < 500; ++i) {
    const Rational q(num(rng), den(rng));
    EXPECT_EQ(parse_rational(to_string(q)), q);
  }
  EXPECT_EQ(to_string(Rational(-1)), "-1/1");
  EXPECT_EQ(parse_rational("6/8"), Rational(3, 4));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(CosClassJsonTest, Schema) {
  EXPECT_EQ(to_json(niven_classify(PiAngle(1, 3))).dump(), R"({"rational":true,"value":"1/2"})");
  EXPECT_EQ(to_json(niven_classify(PiAngle(1, 4))).dump(),
            R"({"rational":false,"degree":2,"minpoly":[2,0,-1]})");
  const Json bound = to_json(CosClass{IrrationalCos{6, std::nullopt, true}});
  EXPECT_EQ(bound.dump(), R"({"rational":false,"degree":6,"degree_is_bound":true})");
}

TEST(ChshResultJsonTest, Schema) {
  const Json undefined = to_json(bell_exact_configuration().result);
  EXPECT_FALSE(undefined.at("defined").get<bool>());
  EXPECT_FALSE(undefined.contains("S"));
  EXPECT_EQ(undefined.at("witness").at("minpoly"), Json::parse("[2,0,-1]"));

  const Json scan = to_json(chsh_scan(4, 180));
  EXPECT_EQ(scan.at("N"), 4);
  EXPECT_EQ(scan.at("p"), 5);
  EXPECT_EQ(scan.at("S"), "5/2");
  EXPECT_EQ(scan.at("frame").at("unit"), "pi");
  EXPECT_EQ(scan.at("frame").at("dihedral"), Json::parse(R"(["1/1","1/1","1/1"])"));
  EXPECT_TRUE(scan.at("unguarded").contains("S"));
}

TEST(DescriptorJsonTest, RoundTrip) {
  const Descriptor d(444, 17, 520);
  EXPECT_EQ(descriptor_from_json(to_json(d)), d);
  EXPECT_THROW(descriptor_from_json(Json::parse(R"({"n1":1,"n2":1,"N":8})")),
               std::invalid_argument);
}

TEST(CantorPointJsonTest, RoundTrip) {
  const CantorPoint p({0, 3, 1, 4});
  EXPECT_EQ(cantor_point_from_json(to_json(p)), p);
  EXPECT_THROW(cantor_point_from_json(Json::parse("[1,-2]")), std::invalid_argument);
  EXPECT_THROW(cantor_point_from_json(Json::parse("{}")), std::invalid_argument);
}

TEST(SimReportJsonTest, SchemaAndCsv) {
  const SimReport r = run_chsh_experiment(tsirelson_frame(), 4, 4, 1);
  const Json j = to_json(r);
  EXPECT_EQ(j.at("N"), 4);
  EXPECT_EQ(j.at("M"), 4);
  EXPECT_TRUE(j.at("exact_mode").get<bool>());
  EXPECT_EQ(j.at("S_empirical"), j.at("S_exact"));
  EXPECT_EQ(j.at("descriptors").size(), 4U);

  const std::string csv = outcomes_csv(r);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "pairId,alice,bob");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 16);
}

TEST(LimitTableCsvTest, Schema) {
  const std::vector<LimitRow> rows{{4, Rational(5, 2), 0.25}};
  EXPECT_EQ(limit_table_csv(rows), "N,S_max,gap\n4,5/2,0.25\n");
}

TEST(RunConfigTest, ParsesKeysAndComments) {
  std::istringstream in(
      "# run\nN = 52\ndepth=3\ncontraction = 1/200  # small\nseed = 9\nM = 1000\n"
      "grid = 360\nformat = csv\n");
  RunConfig cfg;
  apply_config_text(in, cfg);
  EXPECT_EQ(cfg.strands, 52);
  EXPECT_EQ(cfg.depth, 3);
  EXPECT_EQ(cfg.effective_contraction(), Rational(1, 200));
  EXPECT_EQ(cfg.seed, 9U);
  EXPECT_EQ(cfg.ensemble_size, 1000);
  EXPECT_EQ(cfg.grid, 360);
  EXPECT_EQ(cfg.format, OutputFormat::kCsv);
  EXPECT_NO_THROW(cfg.validate());
}

TEST(RunConfigTest, Defaults) {
  const RunConfig cfg;
  EXPECT_EQ(cfg.strands, 520);
  EXPECT_EQ(cfg.effective_contraction(), Rational(1, 1040));
  EXPECT_NO_THROW(cfg.validate());
}

TEST(RunConfigTest, Rejections) {
  const auto parse = [](const std::string& text) {
    std::istringstream in(text);
    RunConfig cfg;
    apply_config_text(in, cfg);
    return cfg;
  };
  EXPECT_THROW(parse("bogus = 1"), std::invalid_argument);
  EXPECT_THROW(parse("N 4"), std::invalid_argument);
  EXPECT_THROW(parse("N = four"), std::invalid_argument);
  EXPECT_THROW(parse("format = xml"), std::invalid_argument);
  EXPECT_THROW(parse("N = 8").validate(), std::invalid_argument);
  EXPECT_THROW(parse("N = 4\ncontraction = 1/7").validate(), std::invalid_argument);
  EXPECT_THROW(load_config_file("/nonexistent/invset.conf"), std::invalid_argument);
}

}  // namespace
}  // namespace invset
