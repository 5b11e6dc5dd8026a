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

#ifndef DPODDS_ADVERSARY_H_
#define DPODDS_ADVERSARY_H_

#include <cstdint>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "dpodds/privacy_budget.h"
#include "dpodds/rng.h"

namespace dpodds {

// An observer who knows every other respondent's answer, holds a prior
// `prior_no` that the subject gave the sensitive answer, sees one release and
// concludes "sensitive" iff its posterior for that answer exceeds 1/2.
class AdversaryModel {
 public:
  static absl::StatusOr<AdversaryModel> Create(double prior_no,
                                               PrivacyBudget epsilon,
                                               double mu_without = 0.0);

  double prior_no() const { return prior_no_; }
  PrivacyBudget epsilon() const { return epsilon_; }
  double mu_without() const { return mu_without_; }
  double mu_with() const { return mu_without_ + 1.0; }

 private:
  AdversaryModel(double prior_no, PrivacyBudget epsilon, double mu_without)
      : prior_no_(prior_no), epsilon_(epsilon), mu_without_(mu_without) {}

  double prior_no_;
  PrivacyBudget epsilon_;
  double mu_without_;
};

// Probabilities that the adversary concludes the sensitive answer, when the
// subject withholds it (p_without) and when the subject shares it (p_with),
// plus their frequency-framed display integers out of `denominator`.
struct OddsPair {
  double p_without = 0;
  double p_with = 0;
  // Release value at which the posterior is indifferent.
  double threshold = 0;
  int64_t denominator = 100;
  int64_t x = 0;
  int64_t y = 0;
};

// Error returned when the prior is too extreme for any release to move the
// posterior across 1/2.
absl::Status ExtremePriorError(double prior_no, double epsilon);
bool IsExtremePrior(const absl::Status& status);

// Half-way cases round away from zero, so 47.5 -> 48.
int64_t RoundHalfAwayFromZero(double value);

// Closed-form decision threshold
//   t = mu_without + 1/2 + (ln(1 - P) - ln P) / (2 eps),
// valid while max{(1-P)/P, P/(1-P)} <= e^eps (checked with 1e-12 slack).
// Exactly mu_without + 1/2 at P = 1/2.
absl::StatusOr<double> DecisionThreshold(const AdversaryModel& model);

// Bayesian posterior that the subject gave the sensitive answer after seeing
// release r.
double PosteriorNo(const AdversaryModel& model, double r);
double PosteriorNotNo(const AdversaryModel& model, double r);

// Exceedance probabilities Pr[r > t] under each branch.
absl::StatusOr<OddsPair> ComputeOdds(const AdversaryModel& model,
                                     int64_t denominator = 100);

// Monte Carlo estimate of the same probabilities: `trials` releases per
// branch, drawn sequentially from `rng` (withheld branch first), each
// classified by r > t. Standard error is at most 0.5 / sqrt(trials).
absl::StatusOr<OddsPair> MonteCarloOdds(const AdversaryModel& model,
                                        int64_t trials, SeededRng& rng,
                                        int64_t denominator = 100);

// Pr[release > outcome_threshold] for a release distributed Lap(mu, 1/eps):
// the chance that an outcome triggered at that count actually fires.
// NaN inputs are rejected.
absl::StatusOr<double> OutcomeThresholdOdds(PrivacyBudget epsilon, double mu,
                                            double outcome_threshold);

}  // namespace dpodds

#endif  // DPODDS_ADVERSARY_H_
