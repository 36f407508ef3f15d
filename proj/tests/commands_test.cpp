#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "dkit/cli/commands.hpp"

using namespace dkit::cli;
using nlohmann::json;

namespace {

std::string data(const std::string& name) {
  std::ifstream in(std::string(DKIT_DATA_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kPlanar = R"({"variables": ["x", "y"], "components": ["1", "y"]})";

}  // namespace

TEST(Commands, MeridiansReport) {
  auto r = run_safely("meridians", data("complex_meridian_field.json"), {});
  ASSERT_EQ(r.exit_code, kOk) << r.report.dump();
  const auto& res = r.report["results"];
  EXPECT_EQ(res["meridians"].size(), 3u);
  EXPECT_EQ(res["bound"], 3);
  EXPECT_EQ(res["attained"], true);
  EXPECT_EQ(res["real_count"], 1);
  std::vector<std::string> fs;
  for (const auto& m : res["meridians"]) fs.push_back(m["f"]);
  EXPECT_NE(std::find(fs.begin(), fs.end(), "y + x"), fs.end());
  for (const char* key : {"command", "input_echo", "results", "bounds", "degenerate_flags", "timings"}) {
    EXPECT_TRUE(r.report.contains(key)) << key;
  }
}

TEST(Commands, ParallelsReport) {
  auto r = run_safely("parallels", data("invariant_parallel_field.json"), {});
  ASSERT_EQ(r.exit_code, kOk);
  const auto& res = r.report["results"];
  ASSERT_EQ(res["parallels"].size(), 1u);
  EXPECT_EQ(res["parallels"][0]["surface"]["f"], "z");
  EXPECT_EQ(res["parallels"][0]["surface"]["cofactor"], "-2*y");
  EXPECT_EQ(res["bound"], 1);
  EXPECT_EQ(res["attained"], true);
}

TEST(Commands, BoundsFromDegrees) {
  auto r = run_safely("bounds", R"({"variables": ["x","y","z"], "mode": "sphere", "options": {"degrees": [2,2,2]}})", {});
  ASSERT_EQ(r.exit_code, kOk) << r.report.dump();
  EXPECT_EQ(r.report["bounds"]["thm4"], 3);
  EXPECT_EQ(r.report["bounds"]["thm5"], 2);
}

TEST(Commands, CheckSphere) {
  auto ok = run_safely("check-sphere", data("complex_meridian_field.json"), {});
  EXPECT_EQ(ok.exit_code, kOk);
  EXPECT_EQ(ok.report["results"]["cofactor"], "-2*z");
  auto no = run_safely("check-sphere", R"({"variables": ["x","y","z"], "components": ["1","0","0"], "mode": "sphere"})", {});
  EXPECT_EQ(no.exit_code, kNegative);
  EXPECT_EQ(no.report["results"]["tangent"], false);
}

TEST(Commands, CofactorAndExpfactor) {
  CommandArgs a;
  a.surfaces = {"x + y"};
  EXPECT_EQ(run_safely("cofactor", data("complex_meridian_field.json"), a).exit_code, kOk);
  a.surfaces = {"x - y"};
  EXPECT_EQ(run_safely("cofactor", data("complex_meridian_field.json"), a).exit_code, kNegative);

  CommandArgs e;
  e.g = "x";
  auto r = run_safely("expfactor", kPlanar, e);
  EXPECT_EQ(r.exit_code, kOk);
  EXPECT_EQ(r.report["results"]["cofactor"], "1");
  e.g = "x^2";
  EXPECT_EQ(run_safely("expfactor", kPlanar, e).exit_code, kNegative);
}

TEST(Commands, DarbouxAmbient) {
  auto r = run_safely("darboux", data("complex_meridian_ambient.json"), {});
  ASSERT_EQ(r.exit_code, kOk);
  const auto& fi = r.report["results"]["first_integrals"];
  ASSERT_GE(fi.size(), 1u);
  EXPECT_EQ(fi[0]["verified"], true);
  EXPECT_EQ(fi[0]["quotient_residual"], "0");
  EXPECT_EQ(fi[0]["lambdas"][0]["re"], "1");
  EXPECT_EQ(fi[0]["lambdas"][2]["re"], "-2");
}

TEST(Commands, SampleAndExtactic) {
  CommandArgs a;
  a.count = 3;
  auto s = run_safely("sample", R"({"variables": ["x","y","z"], "mode": "sphere", "options": {"degrees": [2,2,2]}})", a);
  ASSERT_EQ(s.exit_code, kOk) << s.report.dump();
  EXPECT_EQ(s.report["results"]["fields"].size(), 3u);
  for (const auto& f : s.report["results"]["fields"]) EXPECT_FALSE(f["cofactor"].is_null());

  CommandArgs b;
  b.basis = {"1, z"};
  auto e = run_safely("extactic", data("invariant_parallel_field.json"), b);
  ASSERT_EQ(e.exit_code, kOk);
  EXPECT_EQ(e.report["results"]["polynomial"], "-2*y*z");
}

TEST(Commands, VerifyNumeric) {
  auto r = run_safely("verify-numeric", data("invariant_parallel_field.json"), {});
  EXPECT_EQ(r.exit_code, kOk) << r.report.dump();
  EXPECT_EQ(r.report["results"]["passed"], true);
}

TEST(Commands, InputErrorsExitTwo) {
  const std::vector<std::pair<std::string, std::string>> cases{
      {"meridians", "{not json"},
      {"meridians", R"({"variables": ["x","y","z"], "components": ["w","0","0"], "mode": "sphere"})"},
      {"meridians", R"({"variables": ["x","y","z"], "mode": "sphere"})"},
      {"parallels", R"({"variables": ["x","y","z"], "components": ["1","0","0"], "mode": "sphere"})"},
      {"frobnicate", data("complex_meridian_field.json")},
      {"check-sphere", R"({"variables": ["x","y"], "components": ["x","y"], "options": {"stepsize": 0}})"},
      {"check-sphere", R"({"variables": ["x","y"], "components": ["x"]})"},
      {"cofactor", data("complex_meridian_field.json")},
  };
  for (const auto& [cmd, text] : cases) {
    auto r = run_safely(cmd, text, {});
    EXPECT_EQ(r.exit_code, kInputError) << cmd << " " << text;
    EXPECT_TRUE(r.report.contains("error"));
  }
}
