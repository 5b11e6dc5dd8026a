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

#include "dpodds/adversary.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "dpodds/laplace.h"

namespace dpodds {
namespace {

constexpr char kExtremePriorTag[] = "ExtremePrior";
constexpr double kValiditySlack = 1e-12;

// Log of the unnormalised posterior weights for each answer.
struct LogWeights {
  double no;
  double not_no;
};

LogWeights PosteriorLogWeights(const AdversaryModel& model, double r) {
  const double eps = model.epsilon().epsilon();
  return LogWeights{
      -eps * std::abs(r - model.mu_with()) + std::log(model.prior_no()),
      -eps * std::abs(r - model.mu_without()) +
          std::log1p(-model.prior_no())};
}

}  // namespace

absl::StatusOr<AdversaryModel> AdversaryModel::Create(double prior_no,
                                                      PrivacyBudget epsilon,
                                                      double mu_without) {
  if (!(prior_no > 0 && prior_no < 1)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "AdversaryModel: prior_no must be in (0, 1), got ", prior_no));
  }
  if (!std::isfinite(mu_without)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "AdversaryModel: mu_without must be finite, got ", mu_without));
  }
  return AdversaryModel(prior_no, epsilon, mu_without);
}

absl::Status ExtremePriorError(double prior_no, double epsilon) {
  return absl::FailedPreconditionError(absl::StrCat(
      kExtremePriorTag, ": prior_no=", prior_no,
      " has odds beyond e^epsilon (epsilon=", epsilon,
      "); the posterior favours the same answer for every release"));
}

bool IsExtremePrior(const absl::Status& status) {
  return status.code() == absl::StatusCode::kFailedPrecondition &&
         absl::StartsWith(status.message(), kExtremePriorTag);
}

int64_t RoundHalfAwayFromZero(double value) {
  return static_cast<int64_t>(std::round(value));
}

absl::StatusOr<double> DecisionThreshold(const AdversaryModel& model) {
  const double p = model.prior_no();
  const double eps = model.epsilon().epsilon();
  const double max_odds = std::max((1 - p) / p, p / (1 - p));
  if (max_odds > std::exp(eps) * (1 + kValiditySlack)) {
    return ExtremePriorError(p, eps);
  }
  const double shift = (std::log1p(-p) - std::log(p)) / (2 * eps);
  return model.mu_without() + 0.5 + shift;
}

double PosteriorNo(const AdversaryModel& model, double r) {
  const LogWeights w = PosteriorLogWeights(model, r);
  return 1.0 / (1.0 + std::exp(w.not_no - w.no));
}

double PosteriorNotNo(const AdversaryModel& model, double r) {
  const LogWeights w = PosteriorLogWeights(model, r);
  return 1.0 / (1.0 + std::exp(w.no - w.not_no));
}

absl::StatusOr<OddsPair> ComputeOdds(const AdversaryModel& model,
                                     int64_t denominator) {
  if (denominator < 1) {
    return absl::InvalidArgumentError(absl::StrCat(
        "ComputeOdds: denominator must be >= 1, got ", denominator));
  }
  absl::StatusOr<double> threshold = DecisionThreshold(model);
  if (!threshold.ok()) return threshold.status();

  const auto without =
      LaplaceDistribution::ForBudget(model.mu_without(), model.epsilon());
  const auto with =
      LaplaceDistribution::ForBudget(model.mu_with(), model.epsilon());
  OddsPair odds;
  odds.threshold = *threshold;
  odds.p_without = *without.Survival(*threshold);
  odds.p_with = *with.Survival(*threshold);
  odds.denominator = denominator;
  odds.x = RoundHalfAwayFromZero(odds.p_without * denominator);
  odds.y = RoundHalfAwayFromZero(odds.p_with * denominator);
  return odds;
}

absl::StatusOr<OddsPair> MonteCarloOdds(const AdversaryModel& model,
                                        int64_t trials, SeededRng& rng,
                                        int64_t denominator) {
  if (trials < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("MonteCarloOdds: trials must be >= 1, got ", trials));
  }
  if (denominator < 1) {
    return absl::InvalidArgumentError(absl::StrCat(
        "MonteCarloOdds: denominator must be >= 1, got ", denominator));
  }
  absl::StatusOr<double> threshold = DecisionThreshold(model);
  if (!threshold.ok()) return threshold.status();

  auto concluded_no_rate = [&](double mu) {
    const auto d = LaplaceDistribution::ForBudget(mu, model.epsilon());
    int64_t hits = 0;
    for (int64_t i = 0; i < trials; ++i) {
      // A release exactly at the threshold is classified as "not NO".
      if (d.Sample(rng) > *threshold) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(trials);
  };

  OddsPair odds;
  odds.threshold = *threshold;
  odds.p_without = concluded_no_rate(model.mu_without());
  odds.p_with = concluded_no_rate(model.mu_with());
  odds.denominator = denominator;
  odds.x = RoundHalfAwayFromZero(odds.p_without * denominator);
  odds.y = RoundHalfAwayFromZero(odds.p_with * denominator);
  return odds;
}

absl::StatusOr<double> OutcomeThresholdOdds(PrivacyBudget epsilon, double mu,
                                            double outcome_threshold) {
  if (std::isnan(mu)) {
    return absl::InvalidArgumentError("OutcomeThresholdOdds: mu is NaN");
  }
  return LaplaceDistribution::ForBudget(mu, epsilon)
      .Survival(outcome_threshold);
}

}  // namespace dpodds
