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

#include "dpodds/scenario.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>
#include <utility>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "json.hpp"

namespace dpodds {
namespace {

using nlohmann::json;

constexpr std::array<absl::string_view, 9> kScenarioFields = {
    "question_text",      "sensitive_answer_label", "setting",
    "action_share_label", "action_withhold_label",  "adversary_label",
    "output_noun",        "others_sensitive_count", "consequence_text",
};

absl::Status FieldError(absl::string_view field, absl::string_view what) {
  return absl::InvalidArgumentError(
      absl::StrCat("scenario field /", field, ": ", what));
}

absl::StatusOr<std::string> ReadString(const json& doc,
                                       absl::string_view field) {
  const auto it = doc.find(field);
  if (it == doc.end()) return FieldError(field, "missing required field");
  if (!it->is_string()) return FieldError(field, "expected a string");
  return it->get<std::string>();
}

}  // namespace

absl::string_view SettingName(Setting setting) {
  return setting == Setting::kOptional ? "optional" : "mandatory";
}

absl::StatusOr<Setting> ParseSetting(absl::string_view name) {
  if (name == "optional") return Setting::kOptional;
  if (name == "mandatory") return Setting::kMandatory;
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown setting '", name, "' (expected optional or mandatory)"));
}

ActionLabels DefaultActionLabels(Setting setting) {
  if (setting == Setting::kOptional) {
    return {"participate", "do not participate"};
  }
  return {"respond truthfully", "respond untruthfully"};
}

Scenario Scenario::WithSetting(Setting new_setting) const {
  Scenario copy = *this;
  ActionLabels labels = DefaultActionLabels(new_setting);
  copy.setting = new_setting;
  copy.action_share_label = std::move(labels.share);
  copy.action_withhold_label = std::move(labels.withhold);
  return copy;
}

Scenario WorkplaceScenario() {
  Scenario s;
  s.question_text = "Do you feel adequately supported by your manager?";
  s.sensitive_answer_label = "NO";
  s.setting = Setting::kOptional;
  s.action_share_label = "participate";
  s.action_withhold_label = "do not participate";
  s.adversary_label = "your manager";
  s.output_noun = "reports";
  s.others_sensitive_count = 0;
  s.consequence_text =
      "Your manager may retaliate if they believe you responded NO, for "
      "example with a poor performance review or extra work.";
  return s;
}

absl::Status ValidateScenario(const Scenario& s) {
  const std::array<std::pair<absl::string_view, const std::string*>, 7> labels =
      {{{"question_text", &s.question_text},
        {"sensitive_answer_label", &s.sensitive_answer_label},
        {"action_share_label", &s.action_share_label},
        {"action_withhold_label", &s.action_withhold_label},
        {"adversary_label", &s.adversary_label},
        {"output_noun", &s.output_noun},
        {"consequence_text", &s.consequence_text}}};
  for (const auto& [name, value] : labels) {
    if (value->empty()) return FieldError(name, "must be nonempty");
  }
  if (s.others_sensitive_count < 0) {
    return FieldError("others_sensitive_count", "must be >= 0");
  }
  return absl::OkStatus();
}

absl::StatusOr<Scenario> ParseScenario(absl::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("scenario parse error: ", e.what()));
  }
  if (!doc.is_object()) {
    return absl::InvalidArgumentError(
        "scenario parse error: top-level value must be an object");
  }
  for (const auto& [key, value] : doc.items()) {
    bool known = false;
    for (absl::string_view field : kScenarioFields) known |= (key == field);
    if (!known) return FieldError(key, "unknown field");
  }

  Scenario s;
  const std::array<std::pair<absl::string_view, std::string*>, 7> strings = {{
      {"question_text", &s.question_text},
      {"sensitive_answer_label", &s.sensitive_answer_label},
      {"action_share_label", &s.action_share_label},
      {"action_withhold_label", &s.action_withhold_label},
      {"adversary_label", &s.adversary_label},
      {"output_noun", &s.output_noun},
      {"consequence_text", &s.consequence_text},
  }};
  for (const auto& [name, target] : strings) {
    absl::StatusOr<std::string> value = ReadString(doc, name);
    if (!value.ok()) return value.status();
    *target = *std::move(value);
  }

  absl::StatusOr<std::string> setting_name = ReadString(doc, "setting");
  if (!setting_name.ok()) return setting_name.status();
  absl::StatusOr<Setting> setting = ParseSetting(*setting_name);
  if (!setting.ok()) return FieldError("setting", setting.status().message());
  s.setting = *setting;

  const auto count = doc.find("others_sensitive_count");
  if (count == doc.end()) {
    return FieldError("others_sensitive_count", "missing required field");
  }
  if (!count->is_number_integer()) {
    return FieldError("others_sensitive_count", "expected an integer");
  }
  s.others_sensitive_count = count->get<int64_t>();

  if (absl::Status status = ValidateScenario(s); !status.ok()) return status;
  return s;
}

std::string SerializeScenario(const Scenario& s) {
  // ordered_json keeps the documented field order in the output.
  nlohmann::ordered_json doc;
  doc["question_text"] = s.question_text;
  doc["sensitive_answer_label"] = s.sensitive_answer_label;
  doc["setting"] = std::string(SettingName(s.setting));
  doc["action_share_label"] = s.action_share_label;
  doc["action_withhold_label"] = s.action_withhold_label;
  doc["adversary_label"] = s.adversary_label;
  doc["output_noun"] = s.output_noun;
  doc["others_sensitive_count"] = s.others_sensitive_count;
  doc["consequence_text"] = s.consequence_text;
  return doc.dump(2) + "\n";
}

absl::StatusOr<Scenario> LoadScenarioFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return absl::NotFoundError(
        absl::StrCat("cannot read scenario file ", path.string()));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  absl::StatusOr<Scenario> scenario = ParseScenario(buffer.str());
  if (!scenario.ok()) {
    return absl::InvalidArgumentError(
        absl::StrCat(path.string(), ": ", scenario.status().message()));
  }
  return scenario;
}

absl::string_view MethodName(Method method) {
  switch (method) {
    case Method::kOddsText:
      return "odds_text";
    case Method::kOddsVis:
      return "odds_vis";
    case Method::kSampleReports:
      return "sample_reports";
    case Method::kControlDeterministic:
      return "control_deterministic";
    case Method::kControlNoEpsilon:
      return "control_no_epsilon";
  }
  return "unknown";
}

const std::vector<Method>& AllMethods() {
  static const auto* methods = new std::vector<Method>{
      Method::kOddsText, Method::kOddsVis, Method::kSampleReports,
      Method::kControlDeterministic, Method::kControlNoEpsilon};
  return *methods;
}

absl::StatusOr<Method> ParseMethod(absl::string_view name) {
  std::vector<absl::string_view> names;
  for (Method method : AllMethods()) {
    if (MethodName(method) == name) return method;
    names.push_back(MethodName(method));
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown method '", name, "' (expected one of ",
      absl::StrJoin(names, ", "), ")"));
}

absl::Status ValidateRequest(const ExplanationRequest& request) {
  if (absl::Status status = ValidateScenario(request.scenario); !status.ok()) {
    return status;
  }
  if (!(request.prior_no > 0 && request.prior_no < 1)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "ExplanationRequest: prior_no must be in (0, 1), got ",
        request.prior_no));
  }
  if (request.denominator < 2) {
    return absl::InvalidArgumentError(absl::StrCat(
        "ExplanationRequest: denominator must be >= 2, got ",
        request.denominator));
  }
  if (request.n_samples < 1) {
    return absl::InvalidArgumentError(absl::StrCat(
        "ExplanationRequest: n_samples must be >= 1, got ",
        request.n_samples));
  }
  return absl::OkStatus();
}

absl::StatusOr<ScenarioRegistry> ScenarioRegistry::LoadDirectory(
    const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    return absl::NotFoundError(
        absl::StrCat("scenario directory not found: ", dir.string()));
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  ScenarioRegistry registry;
  for (const auto& file : files) {
    absl::StatusOr<Scenario> scenario = LoadScenarioFile(file);
    if (!scenario.ok()) return scenario.status();
    registry.Add(file.stem().string(), *std::move(scenario));
  }
  return registry;
}

void ScenarioRegistry::Add(std::string id, Scenario scenario) {
  scenarios_.insert_or_assign(std::move(id), std::move(scenario));
}

const Scenario* ScenarioRegistry::Find(absl::string_view id) const {
  const auto it = scenarios_.find(id);
  return it == scenarios_.end() ? nullptr : &it->second;
}

}  // namespace dpodds
