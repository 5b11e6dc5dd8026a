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

#include "dpodds/api_server.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>
#include <vector>

#include "dpodds/cli.h"
#include "gtest/gtest.h"
#include "httplib.h"
#include "json.hpp"

namespace dpodds {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const fs::path kScenarioDir = fs::path(DPODDS_SOURCE_DIR) / "scenarios";

ScenarioRegistry Bundled() {
  return *ScenarioRegistry::LoadDirectory(kScenarioDir);
}

TEST(HandleExplainTest, OddsForEpsilonTwo) {
  ApiResponse r = HandleExplain(Bundled(), {{"epsilon", "2"},
                                            {"method", "odds_text"}});
  ASSERT_EQ(r.status, 200) << r.body;
  json body = json::parse(r.body);
  EXPECT_EQ(body["schema_version"], 1);
  EXPECT_EQ(body["odds"]["x"], 18);
  EXPECT_EQ(body["odds"]["y"], 82);
  EXPECT_EQ(body["odds"]["threshold"], 0.5);
  EXPECT_EQ(body["request"]["epsilon"], 2.0);
  EXPECT_EQ(body["request"]["seed"], kDefaultSeed);
  EXPECT_TRUE(body["artifacts"]["icon_array_svg"].is_string());
  EXPECT_EQ(body["artifacts"]["sample_reports"]["draws_share"].size(), 5u);
  EXPECT_TRUE(body["artifacts"]["control_text"].is_null());
}

TEST(HandleExplainTest, ErrorStatuses) {
  const ScenarioRegistry reg = Bundled();
  ApiResponse zero = HandleExplain(reg, {{"epsilon", "0"}});
  EXPECT_EQ(zero.status, 400);
  EXPECT_NE(json::parse(zero.body)["message"].get<std::string>().find(
                "PrivacyBudget"),
            std::string::npos);
  EXPECT_EQ(HandleExplain(reg, {}).status, 400);
  EXPECT_EQ(HandleExplain(reg, {{"epsilon", "1"}, {"bogus", "1"}}).status, 400);
  EXPECT_EQ(HandleExplain(reg, {{"epsilon", "1"}, {"epsilon", "2"}}).status,
            400);
  EXPECT_EQ(HandleExplain(reg, {{"epsilon", "1"}, {"samples", "0"}}).status,
            400);
  EXPECT_EQ(
      HandleExplain(reg, {{"epsilon", "1"}, {"method", "odds_vis"},
                          {"denominator", "50"}})
          .status,
      400);

  ApiResponse extreme =
      HandleExplain(reg, {{"epsilon", "0.5"}, {"prior", "0.95"}});
  EXPECT_EQ(extreme.status, 422);
  EXPECT_EQ(json::parse(extreme.body)["error"], "ExtremePrior");

  EXPECT_EQ(HandleExplain(reg, {{"epsilon", "1"}, {"scenario_id", "nope"}})
                .status,
            404);
}

TEST(HandleExplainTest, ControlMethodsCarryText) {
  ApiResponse r = HandleExplain(
      Bundled(), {{"epsilon", "1"}, {"method", "control_no_epsilon"}});
  ASSERT_EQ(r.status, 200);
  EXPECT_NE(json::parse(r.body)["artifacts"]["control_text"]
                .get<std::string>()
                .find("adding random noise to aggregated data"),
            std::string::npos);
}

TEST(HandleExplainTest, SettingOverrideOnlyChangesWording) {
  const ScenarioRegistry reg = Bundled();
  json opt = json::parse(
      HandleExplain(reg, {{"epsilon", "0.5"}, {"setting", "optional"}}).body);
  json man = json::parse(
      HandleExplain(reg, {{"epsilon", "0.5"}, {"setting", "mandatory"}}).body);
  EXPECT_EQ(opt["odds"], man["odds"]);
  EXPECT_EQ(opt["artifacts"]["sample_reports"]["draws_withhold"],
            man["artifacts"]["sample_reports"]["draws_withhold"]);
  EXPECT_NE(opt["artifacts"]["odds_text"]["line_share"],
            man["artifacts"]["odds_text"]["line_share"]);
}

TEST(HandleTableTest, DefaultsAndErrors) {
  json body = json::parse(HandleTable({}).body);
  ASSERT_EQ(body["rows"].size(), 4u);
  const int expected[4][2] = {{48, 52}, {39, 61}, {18, 82}, {7, 93}};
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(body["rows"][i]["x"], expected[i][0]);
    EXPECT_EQ(body["rows"][i]["y"], expected[i][1]);
  }
  json one = json::parse(HandleTable({{"epsilons", "1"}}).body);
  EXPECT_EQ(one["rows"][0]["x"], 30);
  EXPECT_EQ(one["rows"][0]["y"], 70);
  EXPECT_EQ(HandleTable({{"epsilons", ""}}).status, 400);
  EXPECT_EQ(HandleTable({{"epsilons", "1,x"}}).status, 400);
  EXPECT_EQ(HandleTable({{"epsilons", "0.1"}, {"prior", "0.9"}}).status, 422);
}

TEST(HandleScenariosTest, ListsBundledIds) {
  json body = json::parse(HandleScenarios(Bundled()).body);
  std::vector<std::string> ids;
  for (const auto& s : body["scenarios"]) ids.push_back(s["id"]);
  EXPECT_NE(std::find(ids.begin(), ids.end(), "workplace"), ids.end());
  EXPECT_NE(std::find(ids.begin(), ids.end(), "workplace_mandatory"),
            ids.end());
}

class LiveServerTest : public ::testing::Test {
 protected:
  void SetUp() override {
    server_ = std::make_unique<ApiServer>(Bundled());
    absl::StatusOr<int> port = server_->Bind("127.0.0.1", 0);
    ASSERT_TRUE(port.ok()) << port.status();
    port_ = *port;
    thread_ = std::thread([this] { server_->ListenAfterBind(); });
  }
  void TearDown() override {
    server_->Stop();
    if (thread_.joinable()) thread_.join();
  }

  std::unique_ptr<ApiServer> server_;
  std::thread thread_;
  int port_ = 0;
};

TEST_F(LiveServerTest, ServesJsonWithCors) {
  httplib::Client client("127.0.0.1", port_);
  auto res = client.Get("/api/v1/explain?epsilon=2&method=odds_vis");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(res->get_header_value("Access-Control-Allow-Origin"), "*");
  EXPECT_NE(res->get_header_value("Content-Type").find("application/json"),
            std::string::npos);
  EXPECT_EQ(json::parse(res->body)["odds"]["x"], 18);

  auto bad = client.Get("/api/v1/explain?epsilon=0");
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->status, 400);

  auto table = client.Get("/api/v1/table?epsilons=");
  ASSERT_TRUE(table);
  EXPECT_EQ(table->status, 400);

  auto scenarios = client.Get("/api/v1/scenarios");
  ASSERT_TRUE(scenarios);
  EXPECT_EQ(scenarios->status, 200);

  auto preflight = client.Options("/api/v1/explain");
  ASSERT_TRUE(preflight);
  EXPECT_EQ(preflight->status, 204);
}

TEST_F(LiveServerTest, ConcurrentIdenticalRequestsAgree) {
  const std::string path =
      "/api/v1/explain?epsilon=0.5&method=sample_reports&seed=4";
  std::vector<std::string> bodies(8);
  std::vector<std::thread> workers;
  for (size_t i = 0; i < bodies.size(); ++i) {
    workers.emplace_back([&, i] {
      httplib::Client client("127.0.0.1", port_);
      for (int k = 0; k < 5; ++k) {
        auto res = client.Get(path);
        if (!res || res->status != 200) return;
        if (k == 0) bodies[i] = res->body;
        if (res->body != bodies[i]) bodies[i] = "mismatch";
      }
    });
  }
  for (auto& w : workers) w.join();
  for (const std::string& body : bodies) {
    ASSERT_FALSE(body.empty());
    EXPECT_EQ(body, bodies[0]);
  }
}

TEST(ServeCommandTest, MalformedFixtureFailsStartup) {
  const fs::path dir = fs::temp_directory_path() / "dpodds_serve_bad";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::ofstream(dir / "oops.json") << "{";
  std::ostringstream out, err;
  const int code = RunCli({"serve", "--port", "0", "--scenarios-dir",
                           dir.string()},
                          out, err);
  EXPECT_EQ(code, kExitUsage);
  EXPECT_NE(err.str().find("oops.json"), std::string::npos) << err.str();
  fs::remove_all(dir);
}

}  // namespace
}  // namespace dpodds
