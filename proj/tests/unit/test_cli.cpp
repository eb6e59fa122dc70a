#include <gtest/gtest.h>

#include "checks.hpp"
#include "json_io.hpp"
#include "presets.hpp"
#include "scenario.hpp"

#include <vbgeo/errors.hpp>

#include <cmath>
#include <fstream>
#include <limits>

using namespace vbgeo;
using namespace vbgeo::cli;

namespace {

const std::string kScenarioDir = VBGEO_SCENARIO_DIR;

Json base_doc() {
  return Json::parse(R"({
    "schema": 1, "name": "t", "base": {"kind": "flat", "dim": 2},
    "bundle": {"kind": "trivial", "rank": 2},
    "weights": {"kind": "constant", "params": {"phi1": 0.1, "phi2": 0.2}}})");
}

}  // namespace

TEST(Scenario, ParsesMinimalDocument) {
  const Scenario s = parse_scenario(base_doc());
  EXPECT_EQ(s.name, "t");
  EXPECT_EQ(s.space.base_dim(), 2);
  EXPECT_EQ(s.space.rank(), 2);
  EXPECT_TRUE(s.space.weights().is_constant());
}

TEST(Scenario, RejectsUnknownKeysAndSchemas) {
  Json d = base_doc();
  d["colour"] = "red";
  EXPECT_THROW(parse_scenario(d), ParseError);
  d = base_doc();
  d["schema"] = 2;
  EXPECT_THROW(parse_scenario(d), ParseError);
  d = base_doc();
  d["weights"]["params"]["c0"] = 1;
  EXPECT_THROW(parse_scenario(d), ParseError);
  d = base_doc();
  d["base"]["kind"] = "torus";
  EXPECT_THROW(parse_scenario(d), ParseError);
}

TEST(Scenario, CustomWeightsAndChart) {
  Json d = base_doc();
  d["base"] = Json::parse(R"j({"kind": "custom", "dim": 2, "metric": [["1", "0"], ["0", "exp(2*x1)"]],
                              "domain": {"lo": [-1, -1], "hi": [1, 1]}})j");
  d["weights"] = Json::parse(R"({"kind": "custom", "phi1": "r/3", "phi2": "-r", "r_max": 4})");
  const Scenario s = parse_scenario(d);
  EXPECT_DOUBLE_EQ(s.space.weights().r_max(), 4.0);
  EXPECT_NEAR(s.space.base().metric(Vec::Constant(2, 0.5))(1, 1), std::exp(1.0), 1e-15);
}

TEST(Scenario, PointAndListSyntax) {
  const TotalPoint p = parse_point("x=0.1:0.2,y=0.3:-0.4:5", 2, 3);
  EXPECT_DOUBLE_EQ(p.x(1), 0.2);
  EXPECT_DOUBLE_EQ(p.y(1), -0.4);
  EXPECT_THROW(parse_point("x=0.1,y=0.3", 2, 1), InvalidArgument);
  EXPECT_THROW(parse_point("x=0.1:abc,y=0", 2, 1), ParseError);
  EXPECT_EQ(parse_list("1:2:3", "v").size(), 3);
}

TEST(Scenario, LoadReportsMissingFile) {
  EXPECT_THROW(load_scenario(kScenarioDir + "/missing.json"), ParseError);
}

TEST(JsonIo, RoundTripPrecisionAndNonFinite) {
  Json j;
  j["x"] = 0.1;
  j["nan"] = std::numeric_limits<double>::quiet_NaN();
  j["v"] = to_json(Vec(Vec::LinSpaced(3, 0, 1)));
  const std::string text = dump(j);
  const Json back = Json::parse(text);
  EXPECT_EQ(back["x"].get<double>(), 0.1);
  EXPECT_TRUE(back["nan"].is_null());
  EXPECT_NE(text.find("[0, 0.5, 1]"), std::string::npos);
}

TEST(Presets, FilesMatchEmbeddedDocuments) {
  ASSERT_EQ(builtin_presets().size(), 5u);
  for (const auto& p : builtin_presets()) {
    std::ifstream in(kScenarioDir + "/" + p.file);
    ASSERT_TRUE(in) << p.file;
    EXPECT_EQ(Json::parse(in), p.doc) << p.file;
    EXPECT_NO_THROW(parse_scenario(p.doc)) << p.file;
  }
  EXPECT_THROW(preset("nope"), InvalidArgument);
}

TEST(Checks, ReportIsDeterministicAcrossThreadCounts) {
  const Json a = run_checks("weights", 11, 1), b = run_checks("weights", 11, 4);
  EXPECT_EQ(dump(a), dump(b));
  EXPECT_THROW(run_checks("nope", 0), ParseError);
}

class SuiteTest : public ::testing::TestWithParam<std::string> {};

TEST_P(SuiteTest, AllCasesPass) {
  const Json r = run_checks(GetParam(), 7, 1);
  for (const auto& c : r["cases"])
    EXPECT_TRUE(c["passed"].get<bool>()) << c["name"].get<std::string>() << ": " << dump(c);
}

INSTANTIATE_TEST_SUITE_P(Checks, SuiteTest, ::testing::ValuesIn(check_suites()),
                         [](const auto& info) { return info.param; });
