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

#ifndef DPODDS_SCENARIO_H_
#define DPODDS_SCENARIO_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "dpodds/privacy_budget.h"

namespace dpodds {

// Whether providing data is voluntary (share = participate) or required
// (share = answer truthfully).
enum class Setting { kOptional, kMandatory };

absl::string_view SettingName(Setting setting);
absl::StatusOr<Setting> ParseSetting(absl::string_view name);

// Describes one data-collection deployment. Labels are substituted verbatim
// into rendered explanations; numbers depend only on
// others_sensitive_count.
struct Scenario {
  std::string question_text;
  std::string sensitive_answer_label;
  Setting setting = Setting::kOptional;
  std::string action_share_label;
  std::string action_withhold_label;
  std::string adversary_label;
  std::string output_noun;
  int64_t others_sensitive_count = 0;
  std::string consequence_text;

  double mu_without() const {
    return static_cast<double>(others_sensitive_count);
  }
  double mu_with() const { return mu_without() + 1.0; }

  // Copy switched to `setting`, with the action labels replaced by that
  // setting's default verb pair.
  Scenario WithSetting(Setting setting) const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

struct ActionLabels {
  std::string share;
  std::string withhold;
};
ActionLabels DefaultActionLabels(Setting setting);

// The workplace evaluation scenario shipped as scenarios/workplace.json:
// nobody else answers NO and participation is optional.
Scenario WorkplaceScenario();

// Checks every label is nonempty and the count is nonnegative.
absl::Status ValidateScenario(const Scenario& scenario);

// Strict JSON parse: unknown or missing fields and wrong types are errors.
// Syntax errors report line and column; field errors report a JSON pointer.
absl::StatusOr<Scenario> ParseScenario(absl::string_view document);
std::string SerializeScenario(const Scenario& scenario);

// Reads and parses a scenario file. I/O failures are NotFound; content
// errors are InvalidArgument prefixed with the file name.
absl::StatusOr<Scenario> LoadScenarioFile(const std::filesystem::path& path);

enum class Method {
  kOddsText,
  kOddsVis,
  kSampleReports,
  kControlDeterministic,
  kControlNoEpsilon,
};

absl::string_view MethodName(Method method);
absl::StatusOr<Method> ParseMethod(absl::string_view name);
const std::vector<Method>& AllMethods();

inline constexpr double kDefaultPriorNo = 0.5;
inline constexpr int64_t kDefaultDenominator = 100;
inline constexpr int64_t kDefaultSamples = 5;
inline constexpr uint64_t kDefaultSeed = 20220131;

struct ExplanationRequest {
  Scenario scenario;
  PrivacyBudget epsilon;
  Method method = Method::kOddsText;
  double prior_no = kDefaultPriorNo;
  int64_t denominator = kDefaultDenominator;
  int64_t n_samples = kDefaultSamples;
  uint64_t seed = kDefaultSeed;
};

absl::Status ValidateRequest(const ExplanationRequest& request);

// Scenarios loaded from `<dir>/*.json`, keyed by file stem. Immutable once
// built; any malformed file fails the whole load, naming the file.
class ScenarioRegistry {
 public:
  static absl::StatusOr<ScenarioRegistry> LoadDirectory(
      const std::filesystem::path& dir);

  ScenarioRegistry() = default;
  void Add(std::string id, Scenario scenario);

  const Scenario* Find(absl::string_view id) const;
  const std::map<std::string, Scenario, std::less<>>& scenarios() const {
    return scenarios_;
  }

 private:
  std::map<std::string, Scenario, std::less<>> scenarios_;
};

}  // namespace dpodds

#endif  // DPODDS_SCENARIO_H_
