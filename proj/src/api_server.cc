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

#include <set>
#include <utility>

#include "absl/strings/str_cat.h"
#include "absl/strings/string_view.h"
#include "dpodds/adversary.h"
#include "dpodds/explain.h"
#include "httplib.h"
#include "json.hpp"

namespace dpodds {
namespace {

using nlohmann::ordered_json;

constexpr char kJson[] = "application/json; charset=utf-8";

absl::string_view ErrorName(const absl::Status& status) {
  if (IsExtremePrior(status)) return "ExtremePrior";
  switch (status.code()) {
    case absl::StatusCode::kInvalidArgument:
      return "InvalidArgument";
    case absl::StatusCode::kNotFound:
      return "NotFound";
    default:
      return "Internal";
  }
}

ApiResponse ErrorResponse(const absl::Status& status) {
  ordered_json body;
  body["schema_version"] = kSchemaVersion;
  body["error"] = std::string(ErrorName(status));
  body["message"] = std::string(status.message());
  return ApiResponse{HttpStatusFor(status), body.dump()};
}

const std::string* Param(const QueryParams& params, absl::string_view name) {
  const auto it = params.find(std::string(name));
  return it == params.end() ? nullptr : &it->second;
}

absl::Status CheckKnownParams(const QueryParams& params,
                              const std::set<absl::string_view>& allowed) {
  for (const auto& [key, value] : params) {
    if (!allowed.contains(key)) {
      return absl::InvalidArgumentError(
          absl::StrCat("unknown query parameter '", key, "'"));
    }
    if (params.count(key) > 1) {
      return absl::InvalidArgumentError(
          absl::StrCat("query parameter '", key, "' given more than once"));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<ExplanationRequest> RequestFromParams(
    const ScenarioRegistry& registry, const QueryParams& params,
    std::string* scenario_id) {
  if (absl::Status status = CheckKnownParams(
          params, {"epsilon", "prior", "method", "seed", "scenario_id",
                   "denominator", "samples", "setting"});
      !status.ok()) {
    return status;
  }
  const std::string* eps_text = Param(params, "epsilon");
  if (eps_text == nullptr) {
    return absl::InvalidArgumentError("epsilon: required query parameter");
  }
  absl::StatusOr<double> eps_value = ParseReal("epsilon", *eps_text);
  if (!eps_value.ok()) return eps_value.status();
  absl::StatusOr<PrivacyBudget> eps = PrivacyBudget::Create(*eps_value);
  if (!eps.ok()) return eps.status();

  ExplanationRequest request{.scenario = {}, .epsilon = *eps};
  if (const std::string* v = Param(params, "prior")) {
    absl::StatusOr<double> prior = ParseReal("prior", *v);
    if (!prior.ok()) return prior.status();
    request.prior_no = *prior;
  }
  if (const std::string* v = Param(params, "method")) {
    absl::StatusOr<Method> method = ParseMethod(*v);
    if (!method.ok()) return method.status();
    request.method = *method;
  }
  if (const std::string* v = Param(params, "seed")) {
    absl::StatusOr<uint64_t> seed = ParseSeed(*v);
    if (!seed.ok()) return seed.status();
    request.seed = *seed;
  }
  if (const std::string* v = Param(params, "denominator")) {
    absl::StatusOr<int64_t> denominator = ParseInt("denominator", *v);
    if (!denominator.ok()) return denominator.status();
    request.denominator = *denominator;
  }
  if (const std::string* v = Param(params, "samples")) {
    absl::StatusOr<int64_t> samples = ParseInt("samples", *v);
    if (!samples.ok()) return samples.status();
    request.n_samples = *samples;
  }

  const std::string* id = Param(params, "scenario_id");
  *scenario_id = id != nullptr ? *id : kDefaultScenarioId;
  const Scenario* scenario = registry.Find(*scenario_id);
  if (scenario == nullptr) {
    return absl::NotFoundError(
        absl::StrCat("unknown scenario_id '", *scenario_id, "'"));
  }
  request.scenario = *scenario;
  if (const std::string* v = Param(params, "setting")) {
    absl::StatusOr<Setting> setting = ParseSetting(*v);
    if (!setting.ok()) return setting.status();
    if (*setting != request.scenario.setting) {
      request.scenario = request.scenario.WithSetting(*setting);
    }
  }
  return request;
}

}  // namespace

int HttpStatusFor(const absl::Status& status) {
  if (status.ok()) return 200;
  if (IsExtremePrior(status)) return 422;
  switch (status.code()) {
    case absl::StatusCode::kInvalidArgument:
      return 400;
    case absl::StatusCode::kNotFound:
      return 404;
    default:
      return 500;
  }
}

ApiResponse HandleExplain(const ScenarioRegistry& registry,
                          const QueryParams& params) {
  std::string scenario_id;
  absl::StatusOr<ExplanationRequest> request =
      RequestFromParams(registry, params, &scenario_id);
  if (!request.ok()) return ErrorResponse(request.status());
  absl::StatusOr<Explanation> explanation = Explain(*request);
  if (!explanation.ok()) return ErrorResponse(explanation.status());
  return ApiResponse{200,
                     ExplanationToJson(*explanation, scenario_id).dump()};
}

ApiResponse HandleTable(const QueryParams& params) {
  if (absl::Status status =
          CheckKnownParams(params, {"epsilons", "prior", "denominator"});
      !status.ok()) {
    return ErrorResponse(status);
  }
  std::vector<double> epsilons = DefaultTableEpsilons();
  if (const std::string* v = Param(params, "epsilons")) {
    absl::StatusOr<std::vector<double>> parsed = ParseEpsilonList(*v);
    if (!parsed.ok()) return ErrorResponse(parsed.status());
    epsilons = *std::move(parsed);
  }
  double prior = kDefaultPriorNo;
  if (const std::string* v = Param(params, "prior")) {
    absl::StatusOr<double> parsed = ParseReal("prior", *v);
    if (!parsed.ok()) return ErrorResponse(parsed.status());
    prior = *parsed;
  }
  int64_t denominator = kDefaultDenominator;
  if (const std::string* v = Param(params, "denominator")) {
    absl::StatusOr<int64_t> parsed = ParseInt("denominator", *v);
    if (!parsed.ok()) return ErrorResponse(parsed.status());
    denominator = *parsed;
  }
  if (denominator < 2) {
    return ErrorResponse(absl::InvalidArgumentError(
        absl::StrCat("denominator must be >= 2, got ", denominator)));
  }
  absl::StatusOr<std::vector<TableRow>> rows =
      OddsTable(epsilons, prior, denominator);
  if (!rows.ok()) return ErrorResponse(rows.status());

  ordered_json body;
  body["schema_version"] = kSchemaVersion;
  body["prior"] = prior;
  body["denominator"] = denominator;
  body["rows"] = TableToJson(*rows);
  return ApiResponse{200, body.dump()};
}

ApiResponse HandleScenarios(const ScenarioRegistry& registry) {
  ordered_json list = ordered_json::array();
  for (const auto& [id, s] : registry.scenarios()) {
    list.push_back({{"id", id},
                    {"question_text", s.question_text},
                    {"setting", std::string(SettingName(s.setting))},
                    {"sensitive_answer_label", s.sensitive_answer_label},
                    {"adversary_label", s.adversary_label},
                    {"output_noun", s.output_noun},
                    {"others_sensitive_count", s.others_sensitive_count}});
  }
  ordered_json body;
  body["schema_version"] = kSchemaVersion;
  body["scenarios"] = std::move(list);
  return ApiResponse{200, body.dump()};
}

ApiServer::ApiServer(ScenarioRegistry registry)
    : registry_(std::move(registry)),
      server_(std::make_unique<httplib::Server>()) {
  server_->set_default_headers({
      {"Access-Control-Allow-Origin", "*"},
      {"Access-Control-Allow-Methods", "GET, OPTIONS"},
      {"Access-Control-Allow-Headers", "Content-Type"},
  });
  auto reply = [](httplib::Response& res, const ApiResponse& api) {
    res.status = api.status;
    res.set_content(api.body, kJson);
  };
  server_->Get("/api/v1/explain",
               [this, reply](const httplib::Request& req,
                             httplib::Response& res) {
                 reply(res, HandleExplain(registry_, req.params));
               });
  server_->Get("/api/v1/table",
               [reply](const httplib::Request& req, httplib::Response& res) {
                 reply(res, HandleTable(req.params));
               });
  server_->Get("/api/v1/scenarios",
               [this, reply](const httplib::Request&, httplib::Response& res) {
                 reply(res, HandleScenarios(registry_));
               });
  server_->Options(R"(/api/v1/.*)",
                   [](const httplib::Request&, httplib::Response& res) {
                     res.status = 204;
                   });
}

ApiServer::~ApiServer() { Stop(); }

absl::StatusOr<int> ApiServer::Bind(const std::string& host, int port) {
  if (port < 0 || port > 65535) {
    return absl::InvalidArgumentError(
        absl::StrCat("port must be in [0, 65535], got ", port));
  }
  int bound = port;
  if (port == 0) {
    bound = server_->bind_to_any_port(host);
  } else if (!server_->bind_to_port(host, port)) {
    bound = -1;
  }
  if (bound < 0) {
    return absl::UnavailableError(
        absl::StrCat("cannot bind ", host, ":", port));
  }
  return bound;
}

void ApiServer::ListenAfterBind() { server_->listen_after_bind(); }

void ApiServer::Stop() {
  if (server_ != nullptr && server_->is_running()) server_->stop();
}

}  // namespace dpodds
