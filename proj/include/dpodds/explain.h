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

#ifndef DPODDS_EXPLAIN_H_
#define DPODDS_EXPLAIN_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "dpodds/adversary.h"
#include "dpodds/render.h"
#include "dpodds/scenario.h"
#include "json.hpp"

namespace dpodds {

inline constexpr int kSchemaVersion = 1;

// Every artifact for one request. The icon array is absent when the
// denominator is not 100; the control text only for control methods.
struct Explanation {
  ExplanationRequest request;
  OddsPair odds;
  OddsTextExplanation odds_text;
  std::optional<IconArray> icon_array;
  SampleReportsExplanation sample_reports;
  std::optional<std::string> control_text;

  // Text or SVG for the requested method, as written by the CLI.
  std::string PrimaryArtifact() const;
  // "svg" for odds_vis, "txt" otherwise.
  std::string PrimaryExtension() const;
};

// Fails with ExtremePrior when the prior is out of range for epsilon, and
// with InvalidArgument for odds_vis requests whose denominator is not 100.
absl::StatusOr<Explanation> Explain(const ExplanationRequest& request);

// The wire form shared by `dpodds explain` output files and
// GET /api/v1/explain.
nlohmann::ordered_json ExplanationToJson(const Explanation& explanation,
                                         absl::string_view scenario_id);

struct TableRow {
  double epsilon;
  OddsPair odds;
};

inline const std::vector<double>& DefaultTableEpsilons() {
  static const auto* eps = new std::vector<double>{0.1, 0.5, 2, 4};
  return *eps;
}

absl::StatusOr<std::vector<TableRow>> OddsTable(
    const std::vector<double>& epsilons, double prior_no,
    int64_t denominator);

nlohmann::ordered_json TableToJson(const std::vector<TableRow>& rows);

// Parses a comma-separated list of epsilons; empty lists are rejected.
absl::StatusOr<std::vector<double>> ParseEpsilonList(absl::string_view text);

// Strict numeric parsing for flags and query strings: the whole string must
// be consumed.
absl::StatusOr<double> ParseReal(absl::string_view name, absl::string_view text);
absl::StatusOr<int64_t> ParseInt(absl::string_view name, absl::string_view text);
absl::StatusOr<uint64_t> ParseSeed(absl::string_view text);

// Shortest decimal form of epsilon used in artifact file names.
std::string EpsilonTag(double epsilon);

}  // namespace dpodds

#endif  // DPODDS_EXPLAIN_H_
