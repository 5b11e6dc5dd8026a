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

#include "dpodds/explain.h"

#include <charconv>
#include <cmath>
#include <utility>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"

namespace dpodds {
namespace {

bool IsControl(Method method) {
  return method == Method::kControlDeterministic ||
         method == Method::kControlNoEpsilon;
}

}  // namespace

std::string Explanation::PrimaryArtifact() const {
  switch (request.method) {
    case Method::kOddsText:
      return odds_text.Text();
    case Method::kOddsVis:
      return icon_array->svg;
    case Method::kSampleReports:
      return sample_reports.Text();
    case Method::kControlDeterministic:
    case Method::kControlNoEpsilon:
      return *control_text;
  }
  return "";
}

std::string Explanation::PrimaryExtension() const {
  return request.method == Method::kOddsVis ? "svg" : "txt";
}

absl::StatusOr<Explanation> Explain(const ExplanationRequest& request) {
  if (absl::Status status = ValidateRequest(request); !status.ok()) {
    return status;
  }
  Explanation out{.request = request,
                  .odds = {},
                  .odds_text = {},
                  .icon_array = std::nullopt,
                  .sample_reports = {},
                  .control_text = std::nullopt};

  absl::StatusOr<OddsTextExplanation> text = RenderOddsText(request);
  if (!text.ok()) return text.status();
  out.odds = text->odds;
  out.odds_text = *std::move(text);

  if (request.denominator == 100) {
    absl::StatusOr<IconArray> icons = RenderIconArray(request);
    if (!icons.ok()) return icons.status();
    out.icon_array = *std::move(icons);
  } else if (request.method == Method::kOddsVis) {
    return RenderIconArray(request).status();
  }

  absl::StatusOr<SampleReportsExplanation> samples =
      RenderSampleReports(request);
  if (!samples.ok()) return samples.status();
  out.sample_reports = *std::move(samples);

  if (IsControl(request.method)) {
    absl::StatusOr<std::string> control = RenderControl(request);
    if (!control.ok()) return control.status();
    out.control_text = *std::move(control);
  }
  return out;
}

nlohmann::ordered_json ExplanationToJson(const Explanation& e,
                                         absl::string_view scenario_id) {
  using nlohmann::ordered_json;
  const ExplanationRequest& r = e.request;
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["request"] = {
      {"scenario_id", std::string(scenario_id)},
      {"setting", std::string(SettingName(r.scenario.setting))},
      {"epsilon", r.epsilon.epsilon()},
      {"prior", r.prior_no},
      {"method", std::string(MethodName(r.method))},
      {"denominator", r.denominator},
      {"samples", r.n_samples},
      {"seed", r.seed},
  };
  doc["odds"] = {
      {"x", e.odds.x},
      {"y", e.odds.y},
      {"denominator", e.odds.denominator},
      {"p_without", e.odds.p_without},
      {"p_with", e.odds.p_with},
      {"threshold", e.odds.threshold},
  };
  ordered_json artifacts;
  artifacts["odds_text"] = {
      {"preamble", e.odds_text.preamble},
      {"line_withhold", e.odds_text.line_withhold},
      {"line_share", e.odds_text.line_share},
  };
  if (e.icon_array.has_value()) {
    artifacts["icon_array_svg"] = e.icon_array->svg;
    artifacts["icon_array"] = {
        {"rows", e.icon_array->spec.rows},
        {"cols", e.icon_array->spec.cols},
        {"highlighted_withhold", e.icon_array->spec.highlighted_withhold},
        {"highlighted_share", e.icon_array->spec.highlighted_share},
    };
  } else {
    artifacts["icon_array_svg"] = nullptr;
    artifacts["icon_array"] = nullptr;
  }
  const SampleReportsExplanation& s = e.sample_reports;
  artifacts["sample_reports"] = {
      {"disclaimer", s.disclaimer},
      {"seed", s.seed},
      {"draws_withhold", s.draws_withhold},
      {"draws_share", s.draws_share},
      {"display_withhold", s.DisplayWithhold()},
      {"display_share", s.DisplayShare()},
  };
  artifacts["control_text"] =
      e.control_text.has_value() ? ordered_json(*e.control_text) : nullptr;
  doc["artifacts"] = std::move(artifacts);
  return doc;
}

absl::StatusOr<std::vector<TableRow>> OddsTable(
    const std::vector<double>& epsilons, double prior_no,
    int64_t denominator) {
  if (epsilons.empty()) {
    return absl::InvalidArgumentError("epsilons: list must be nonempty");
  }
  std::vector<TableRow> rows;
  for (double value : epsilons) {
    absl::StatusOr<PrivacyBudget> eps = PrivacyBudget::Create(value);
    if (!eps.ok()) return eps.status();
    absl::StatusOr<AdversaryModel> model = AdversaryModel::Create(prior_no, *eps);
    if (!model.ok()) return model.status();
    absl::StatusOr<OddsPair> odds = ComputeOdds(*model, denominator);
    if (!odds.ok()) return odds.status();
    rows.push_back(TableRow{value, *odds});
  }
  return rows;
}

nlohmann::ordered_json TableToJson(const std::vector<TableRow>& rows) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const TableRow& row : rows) {
    out.push_back({{"epsilon", row.epsilon},
                   {"x", row.odds.x},
                   {"y", row.odds.y},
                   {"p_without", row.odds.p_without},
                   {"p_with", row.odds.p_with},
                   {"threshold", row.odds.threshold}});
  }
  return out;
}

absl::StatusOr<double> ParseReal(absl::string_view name, absl::string_view text) {
  text = absl::StripAsciiWhitespace(text);
  double value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat(name, ": expected a real number, got '", text, "'"));
  }
  return value;
}

absl::StatusOr<int64_t> ParseInt(absl::string_view name, absl::string_view text) {
  text = absl::StripAsciiWhitespace(text);
  int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat(name, ": expected an integer, got '", text, "'"));
  }
  return value;
}

absl::StatusOr<uint64_t> ParseSeed(absl::string_view text) {
  text = absl::StripAsciiWhitespace(text);
  uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "seed: expected an unsigned 64-bit integer, got '", text, "'"));
  }
  return value;
}

absl::StatusOr<std::vector<double>> ParseEpsilonList(absl::string_view text) {
  std::vector<double> out;
  for (absl::string_view part :
       absl::StrSplit(text, ',', absl::SkipWhitespace())) {
    absl::StatusOr<double> value = ParseReal("epsilons", part);
    if (!value.ok()) return value.status();
    out.push_back(*value);
  }
  if (out.empty()) {
    return absl::InvalidArgumentError("epsilons: list must be nonempty");
  }
  return out;
}

std::string EpsilonTag(double epsilon) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), epsilon);
  return std::string(buffer, ptr);
}

}  // namespace dpodds
