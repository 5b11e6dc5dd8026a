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

#include "dpodds/mechanism.h"

#include <cmath>

#include "absl/strings/str_cat.h"
#include "dpodds/laplace.h"

namespace dpodds {

absl::string_view BranchName(Branch branch) {
  return branch == Branch::kWithSubject ? "with_subject" : "without_subject";
}

absl::StatusOr<CountQuery> CountQuery::Create(int64_t true_count_without) {
  if (true_count_without < 0) {
    return absl::InvalidArgumentError(absl::StrCat(
        "CountQuery: true_count_without must be >= 0, got ",
        true_count_without));
  }
  return CountQuery(true_count_without);
}

MechanismOutput ReleaseCount(const CountQuery& query, Branch branch,
                             PrivacyBudget epsilon, SeededRng& rng) {
  const LaplaceDistribution noise =
      LaplaceDistribution::ForBudget(query.TrueCount(branch), epsilon);
  return MechanismOutput{noise.Sample(rng), epsilon, branch};
}

absl::StatusOr<bool> DpRatioCheck(PrivacyBudget epsilon, double mu0, double mu1,
                                  std::span<const double> points) {
  if (!std::isfinite(mu0) || !std::isfinite(mu1) ||
      std::abs(mu0 - mu1) > static_cast<double>(CountQuery::kSensitivity)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "DpRatioCheck: |mu0 - mu1| must be <= sensitivity ",
        CountQuery::kSensitivity, ", got mu0=", mu0, " mu1=", mu1));
  }
  const LaplaceDistribution d0 = LaplaceDistribution::ForBudget(mu0, epsilon);
  const LaplaceDistribution d1 = LaplaceDistribution::ForBudget(mu1, epsilon);
  constexpr double kSlack = 1e-9;
  const double eps = epsilon.epsilon();
  const double upper = std::exp(eps) * (1 + kSlack);
  const double lower = std::exp(-eps) * (1 - kSlack);
  for (double r : points) {
    absl::StatusOr<double> log0 = d0.LogPdf(r);
    if (!log0.ok()) return log0.status();
    absl::StatusOr<double> log1 = d1.LogPdf(r);
    if (!log1.ok()) return log1.status();
    const double ratio = std::exp(*log1 - *log0);
    if (ratio > upper || ratio < lower) return false;
  }
  return true;
}

}  // namespace dpodds
