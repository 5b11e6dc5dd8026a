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

#ifndef DPODDS_LAPLACE_H_
#define DPODDS_LAPLACE_H_

#include "absl/status/statusor.h"
#include "dpodds/privacy_budget.h"
#include "dpodds/rng.h"

namespace dpodds {

// Laplace distribution with location `location` and scale `scale` > 0.
class LaplaceDistribution {
 public:
  static absl::StatusOr<LaplaceDistribution> Create(double location,
                                                    double scale);

  // Lap(location, 1/epsilon), the noise distribution of a sensitivity-1
  // release.
  static LaplaceDistribution ForBudget(double location, PrivacyBudget budget);

  double location() const { return location_; }
  double scale() const { return scale_; }

  // Density at r. Returns InvalidArgument for non-finite r.
  absl::StatusOr<double> Pdf(double r) const;
  // Natural log of the density; finite for every finite r, even where the
  // density itself underflows.
  absl::StatusOr<double> LogPdf(double r) const;
  // Pr[X <= r]. Infinite r maps to 0 or 1; NaN is rejected.
  absl::StatusOr<double> Cdf(double r) const;
  // Pr[X > r], evaluated without the cancellation of 1 - Cdf(r) in the
  // upper tail.
  absl::StatusOr<double> Survival(double r) const;

  // One inverse-CDF draw: u ~ U(-1/2, 1/2), x = mu - b sgn(u) ln(1 - 2|u|).
  double Sample(SeededRng& rng) const;

 private:
  LaplaceDistribution(double location, double scale)
      : location_(location), scale_(scale) {}

  double location_;
  double scale_;
};

}  // namespace dpodds

#endif  // DPODDS_LAPLACE_H_
