// Copyright 2026 The dpodds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dpodds/cli.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"

namespace dpodds {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path TempDir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("dpodds_cli_" + name);
  fs::remove_all(dir);
  return dir;
}

const std::string kWorkplace =
    (fs::path(DPODDS_SOURCE_DIR) / "scenarios" / "workplace.json").string();

TEST(CliTableTest, DefaultReproducesPublishedTable) {
  CliRun r = Cli({"table"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "epsilon         x      y    p_without       p_with    threshold\n"
            "0.1            48     52     0.475615     0.524385     0.500000\n"
            "0.5            39     61     0.389400     0.610600     0.500000\n"
            "2              18     82     0.183940     0.816060     0.500000\n"
            "4               7     93     0.067668     0.932332     0.500000\n");
}

TEST(CliTableTest, CustomEpsilons) {
  CliRun r = Cli({"table", "--epsilons", "1", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto rows = nlohmann::json::parse(r.out);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0]["x"], 30);
  EXPECT_EQ(rows[0]["y"], 70);

  CliRun tiny = Cli({"table", "--prior", "0.5", "--denominator", "100",
                  "--epsilons", "1e-9", "--json"});
  ASSERT_EQ(tiny.code, 0) << tiny.err;
  auto t = nlohmann::json::parse(tiny.out);
  EXPECT_EQ(t[0]["x"], 50);
  EXPECT_EQ(t[0]["y"], 50);
}

TEST(CliTableTest, Errors) {
  EXPECT_EQ(Cli({"table", "--epsilons", "0.5,-2"}).code, kExitUsage);
  EXPECT_EQ(Cli({"table", "--epsilons", ""}).code, kExitUsage);
  EXPECT_EQ(Cli({"table", "--epsilons", "0.1", "--prior", "0.9"}).code,
            kExitExtremePrior);
}

TEST(CliExplainTest, OddsTextSummaryAndFiles) {
  const fs::path dir = TempDir("odds_text");
  CliRun r = Cli({"explain", "--scenario", kWorkplace, "--epsilon", "0.5",
               "--method", "odds_text", "--out-dir", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("x=39 y=61"), std::string::npos) << r.out;
  const std::string text = Slurp(dir / "odds_text_0.5.txt");
  EXPECT_NE(text.find("39 out of 100"), std::string::npos);
  auto payload = nlohmann::json::parse(Slurp(dir / "odds_text_0.5.json"));
  EXPECT_EQ(payload["odds"]["x"], 39);
  EXPECT_EQ(payload["request"]["scenario_id"], "workplace");
  fs::remove_all(dir);
}

TEST(CliExplainTest, OddsVisWritesSvg) {
  const fs::path dir = TempDir("odds_vis");
  CliRun r = Cli({"explain", "--epsilon", "2", "--method", "odds_vis",
               "--out-dir", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string svg = Slurp(dir / "odds_vis_2.svg");
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  fs::remove_all(dir);
}

TEST(CliExplainTest, ValidationErrors) {
  CliRun neg = Cli({"explain", "--epsilon", "-1"});
  EXPECT_EQ(neg.code, kExitUsage);
  EXPECT_NE(neg.err.find("PrivacyBudget"), std::string::npos) << neg.err;
  auto line = nlohmann::json::parse(neg.err);
  EXPECT_EQ(line["exit_code"], 1);

  EXPECT_EQ(Cli({"explain", "--epsilon", "abc"}).code, kExitUsage);
  EXPECT_EQ(Cli({"explain", "--epsilon", "1", "--method", "bogus"}).code,
            kExitUsage);
  EXPECT_EQ(Cli({"explain", "--epsilon", "1", "--denominator", "1"}).code,
            kExitUsage);
  EXPECT_EQ(Cli({"explain", "--epsilon", "1", "--method", "odds_vis",
                 "--denominator", "1000", "--out-dir",
                 TempDir("unused").string()})
                .code,
            kExitUsage);
  EXPECT_EQ(Cli({"explain"}).code, kExitUsage);
  EXPECT_EQ(Cli({}).code, kExitUsage);
}

TEST(CliExplainTest, ExtremePriorExitCode) {
  CliRun r = Cli({"explain", "--epsilon", "0.1", "--prior", "0.9"});
  EXPECT_EQ(r.code, kExitExtremePrior);
  EXPECT_EQ(nlohmann::json::parse(r.err)["error"], "ExtremePrior");
}

TEST(CliExplainTest, IoErrors) {
  CliRun missing = Cli({"explain", "--epsilon", "1", "--scenario",
                     "/nonexistent/s.json"});
  EXPECT_EQ(missing.code, kExitIo);

  const fs::path file = TempDir("blocker");
  std::ofstream(file) << "x";
  CliRun blocked = Cli({"explain", "--epsilon", "1", "--out-dir",
                     (file / "sub").string()});
  EXPECT_EQ(blocked.code, kExitIo) << blocked.err;
  fs::remove(file);
}

TEST(CliExplainTest, BadScenarioFileIsValidationError) {
  const fs::path path = fs::temp_directory_path() / "dpodds_bad_scenario.json";
  std::ofstream(path) << R"({"question_text": "q"})";
  CliRun r = Cli({"explain", "--epsilon", "1", "--scenario", path.string()});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("dpodds_bad_scenario.json"), std::string::npos);
  fs::remove(path);
}

TEST(CliExplainTest, IdenticalRunsAreByteIdentical) {
  for (const char* method : {"odds_text", "odds_vis", "sample_reports",
                             "control_deterministic", "control_no_epsilon"}) {
    const fs::path a = TempDir("same_a"), b = TempDir("same_b");
    std::vector<std::string> args = {"explain", "--epsilon", "0.5", "--seed",
                                     "99", "--method", method, "--out-dir"};
    CliRun ra = Cli([&] { auto v = args; v.push_back(a.string()); return v; }());
    CliRun rb = Cli([&] { auto v = args; v.push_back(b.string()); return v; }());
    ASSERT_EQ(ra.code, 0) << ra.err;
    // Paths differ, so compare everything but the trailing "wrote" lines.
    EXPECT_EQ(ra.out.substr(0, ra.out.find("wrote")),
              rb.out.substr(0, rb.out.find("wrote")));
    for (const auto& entry : fs::directory_iterator(a)) {
      EXPECT_EQ(Slurp(entry.path()), Slurp(b / entry.path().filename()))
          << entry.path();
    }
    fs::remove_all(a);
    fs::remove_all(b);
  }
}

TEST(CliExplainTest, SettingOverrideKeepsNumbers) {
  const fs::path a = TempDir("opt"), b = TempDir("man");
  ASSERT_EQ(Cli({"explain", "--epsilon", "2", "--method", "sample_reports",
                 "--out-dir", a.string()})
                .code,
            0);
  ASSERT_EQ(Cli({"explain", "--epsilon", "2", "--method", "sample_reports",
                 "--setting", "mandatory", "--out-dir", b.string()})
                .code,
            0);
  auto ja = nlohmann::json::parse(Slurp(a / "sample_reports_2.json"));
  auto jb = nlohmann::json::parse(Slurp(b / "sample_reports_2.json"));
  EXPECT_EQ(ja["odds"], jb["odds"]);
  EXPECT_EQ(ja["artifacts"]["sample_reports"]["draws_share"],
            jb["artifacts"]["sample_reports"]["draws_share"]);
  EXPECT_EQ(jb["request"]["setting"], "mandatory");
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST(CliSimulateTest, PassesAtOneMillionTrials) {
  CliRun r = Cli({"simulate", "--epsilon", "2", "--trials", "1000000", "--seed",
               "7"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("result=PASS"), std::string::npos);
  EXPECT_EQ(r.out.find("elapsed"), std::string::npos);
}

TEST(CliSimulateTest, ClosedFormColumnAtSmallEpsilon) {
  CliRun r = Cli({"simulate", "--epsilon", "0.1", "--trials", "1000000"});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("p_without        0.4756"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("p_with           0.5244"), std::string::npos) << r.out;
}

TEST(CliSimulateTest, Errors) {
  EXPECT_EQ(Cli({"simulate", "--epsilon", "1", "--trials", "0"}).code,
            kExitUsage);
  EXPECT_EQ(Cli({"simulate", "--epsilon", "0.1", "--prior", "0.9"}).code,
            kExitExtremePrior);
}

TEST(CliBinaryTest, RunsAsProcess) {
  const std::string cmd = std::string(DPODDS_CLI_PATH) + " table --epsilons 4";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string out;
  char buf[256];
  while (fgets(buf, sizeof buf, pipe)) out += buf;
  EXPECT_EQ(pclose(pipe), 0);
  EXPECT_NE(out.find("4               7     93"), std::string::npos) << out;
}

}  // namespace
}  // namespace dpodds
