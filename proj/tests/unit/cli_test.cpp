#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "commands.hpp"
#include "render.hpp"
#include "run_cli.hpp"
#include "scene.hpp"

namespace moeblox {
namespace {

using testing::run_cli;
using testing::scene;

const std::string kStandard =
    R"('{"c1":[0,0,1,0],"c2":[1,0,0,-1],"c3":[1,0,0,-7.38905609893065]}')";
const std::string kCircle = R"('{"c1":[0,0,1,0],"c2":[1,0,0,-1],"c3":[1,0,0,-1]}')";

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

TEST(Cli, Lambda) {
  EXPECT_EQ(run_cli("--scene " + scene("standard.json") + " lambda spiral").out,
            "lambda_tilde=1.000000 a=2.718282\n");
  EXPECT_EQ(run_cli("--scene " + scene("circle.json") + " lambda circle").out,
            "lambda_tilde=0 a=1\n");
  EXPECT_EQ(run_cli("--scene " + scene("ray.json") + " lambda ray").out,
            "lambda_tilde=inf a=inf\n");
  const auto json = nlohmann::json::parse(run_cli("--json lambda " + kStandard).out);
  EXPECT_NEAR(json["lambda_tilde"].get<double>(), 1.0, 1e-12);
}

TEST(Cli, MemberExitCodes) {
  const std::string base = "--scene " + scene("standard.json") + " member spiral ";
  auto r = run_cli(base + "1,0");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(nlohmann::json::parse(r.out)["member"].get<bool>());
  r = run_cli(base + "0,1.105171");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_FALSE(nlohmann::json::parse(r.out)["member"].get<bool>());
  EXPECT_EQ(run_cli(base + "1,x").exit_code, 2);
  EXPECT_EQ(run_cli(base + "nonsense").exit_code, 2);
  EXPECT_EQ(run_cli(base + "-1.6487212707,0").exit_code, 0);
  EXPECT_EQ(run_cli(base + "0,0").exit_code, 1);
}

TEST(Cli, MemberModes) {
  // e^{0.75} e^{3 pi i / 2} = (0, -2.117000016612675).
  const std::string base = "--scene " + scene("standard.json") + " member spiral 0,-2.117000016612675";
  EXPECT_EQ(run_cli(base).exit_code, 0);
  EXPECT_EQ(run_cli("--strict-mod1 " + base).exit_code, 1);
  const auto r = run_cli("--oracle " + base);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["flags"][0], "oracle");
}

TEST(Cli, Angle) {
  EXPECT_EQ(run_cli("angle " + kCircle + " " + kStandard + " 1,0").out,
            "angle_rad=0.157831 angle_deg=9.043061\n");
  EXPECT_EQ(run_cli("angle " + kStandard + " " + kStandard + " 1,0").out,
            "angle_rad=0.000000 angle_deg=0.000000\n");
  EXPECT_EQ(run_cli("angle " + kCircle + " " + kStandard + " 0,1").exit_code, 2);
}

TEST(Cli, Tangent) {
  EXPECT_EQ(run_cli("tangent " + kStandard + " '[0,-3.141592653589793,0.5,-6.283185307179586]' 1,0")
                .exit_code,
            0);
  EXPECT_EQ(run_cli("tangent " + kStandard + " '[1,0,0,-1]' 1,0").exit_code, 1);
  EXPECT_EQ(run_cli("tangent " + kStandard + " '[1,1,0,1]' 1,0").exit_code, 2);
}

TEST(Cli, Equiv) {
  EXPECT_EQ(run_cli("equiv " + kStandard + " " + kStandard).exit_code, 0);
  const std::string lambda2 = R"('{"c1":[0,0,1,0],"c2":[1,0,0,-1],"c3":[1,0,0,-54.598150033144236]}')";
  EXPECT_EQ(run_cli("equiv " + kStandard + " " + lambda2).exit_code, 1);
  EXPECT_EQ(run_cli("equiv " + kStandard + " " + kCircle).exit_code, 2);
}

TEST(Cli, NormalizeApplyRoundTrip) {
  const auto tmp = std::filesystem::temp_directory_path() / "moeblox_normalize.json";
  const std::string ref = "--scene " + scene("pencils.json");
  const auto n = run_cli(ref + " --json normalize shifted");
  ASSERT_EQ(n.exit_code, 0);
  std::ofstream(tmp) << n.out;
  const auto applied = run_cli(ref + " --json apply " + tmp.string() + " shifted");
  ASSERT_EQ(applied.exit_code, 0);
  const auto image = nlohmann::json::parse(applied.out);
  const auto standard = nlohmann::json::parse(n.out)["triple"];
  for (const char* key : {"c1", "c2", "c3"}) {
    const Cycle a = io::cycle_from_json(image[key]);
    const Cycle b = io::cycle_from_json(standard[key]);
    EXPECT_LE(projective_distance(a, b), 1e-6) << key;
  }
  EXPECT_EQ(image["sign"], standard["sign"]);
  std::filesystem::remove(tmp);
}

TEST(Cli, Sample) {
  EXPECT_EQ(run_cli("sample " + kStandard + " --t-min 0 --t-max 1 --count 2 --branch plus").out,
            "1.000000,0.000000\n2.718282,0.000000\n");
  EXPECT_EQ(run_cli("sample " + kStandard + " --count 1").exit_code, 2);
}

TEST(Cli, RenderStandardScene) {
  const auto r = run_cli("--scene " + scene("standard.json") + " render");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(count(r.out, "<line "), 1u);
  EXPECT_EQ(count(r.out, "<circle "), 2u);
  EXPECT_EQ(count(r.out, "<polyline "), 2u);
  EXPECT_EQ(r.out, run_cli("--scene " + scene("standard.json") + " render").out);
}

TEST(Cli, RenderPolicies) {
  const auto invalid = run_cli("--scene " + scene("invalid.json") + " render");
  EXPECT_EQ(invalid.exit_code, 0);
  EXPECT_EQ(count(invalid.out, "<polyline "), 0u);
  EXPECT_EQ(count(invalid.out, "<circle "), 3u);
  EXPECT_EQ(run_cli("render").exit_code, 2);
  EXPECT_EQ(run_cli("--scene " + scene("standard.json") + " render --samples 8").exit_code, 2);
  EXPECT_EQ(run_cli("--scene " + scene("standard.json") + " render --svg-precision 13").exit_code, 2);
  EXPECT_EQ(run_cli("--scene /nonexistent.json render").exit_code, 2);
}

TEST(Cli, Usage) {
  EXPECT_EQ(run_cli("").exit_code, 2);
  EXPECT_EQ(run_cli("frobnicate").exit_code, 2);
  EXPECT_EQ(run_cli("--help").exit_code, 0);
  EXPECT_EQ(run_cli("--tol 0.5 lambda " + kStandard).exit_code, 2);
  EXPECT_EQ(run_cli("--tol 1e-8,1e-6 lambda " + kStandard).exit_code, 0);
}

TEST(Cli, EnvironmentTolerance) {
  const std::string command = std::string("MOEBLOX_TOL=0.5 \"") + MOEBLOX_CLI_PATH +
                              "\" lambda " + kStandard + " >/dev/null 2>&1";
  const int status = std::system(command.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 2);
}

TEST(Scene, Diagnostics) {
  const auto message = [](const std::string& text) {
    try {
      cli::Scene::parse(text, "s.json");
    } catch (const cli::SceneError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("{\n  \"objects\": [\n    {,]}").find("s.json:3:"), std::string::npos);
  EXPECT_NE(message(R"({"objects":[{"id":"a","kind":"circle","data":{"center":[0,0],"radius":-1}}]})")
                .find("objects[0].data"),
            std::string::npos);
  EXPECT_NE(message(R"({"objects":[{"id":"a","kind":"point","data":[0,0]},{"id":"a","kind":"point","data":[1,0]}]})")
                .find("duplicate id"),
            std::string::npos);
  EXPECT_NE(message(R"({"objects":[{"id":"t","kind":"triple","data":{"c1":"nope","c2":[1,0,0,-1],"c3":[1,0,0,-2]}}]})")
                .find("unknown id"),
            std::string::npos);
  EXPECT_NE(message(R"({"objects":[{"id":"a","kind":"blob","data":1}]})").find("unknown kind"),
            std::string::npos);
  EXPECT_NE(message(R"({"objects":[],"bbox":[1,1,0,0]})").find("bbox"), std::string::npos);
}

TEST(Scene, ReferencesAndBbox) {
  const auto s = cli::Scene::parse(R"({
    "objects": [
      {"id": "axis", "kind": "line", "data": {"p": [0, 0], "q": [1, 0]}},
      {"id": "unit", "kind": "circle", "data": {"center": [0, 0], "radius": 1}},
      {"id": "t", "kind": "triple", "data": {"c1": "axis", "c2": "unit", "c3": [1, 0, 0, -4]}}
    ]})");
  EXPECT_EQ(s.resolve_triple("t").c2(), (Cycle{1, 0, 0, -1}));
  EXPECT_EQ(s.resolve_cycle("[1,2,3,4]"), (Cycle{1, 2, 3, 4}));
  EXPECT_THROW(s.resolve_triple("axis"), cli::SceneError);

  cli::RenderConfig config;
  const auto svg = cli::render_svg(s, config, {}).svg;
  // Bounds: radius-2 circle padded by 10%; the line spans the full width.
  EXPECT_NE(svg.find("<line x1=\"800.000000\" y1=\"400.000000\" x2=\"0.000000\""), std::string::npos);
  EXPECT_NE(svg.find("r=\"333.333333\""), std::string::npos);
}

TEST(Commands, InProcess) {
  std::ostringstream out, err;
  EXPECT_EQ(cli::run({"lambda", R"({"c1":[0,0,1,0],"c2":[1,0,0,-1],"c3":[1,0,0,-1]})"}, out, err), 0);
  EXPECT_EQ(out.str(), "lambda_tilde=0 a=1\n");
}

}  // namespace
}  // namespace moeblox
