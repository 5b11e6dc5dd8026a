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

#include "dpodds/laplace.h"

#include <cmath>

#include "absl/strings/str_cat.h"

namespace dpodds {

absl::StatusOr<LaplaceDistribution> LaplaceDistribution::Create(double location,
                                                                double scale) {
  if (!std::isfinite(location)) {
    return absl::InvalidArgumentError(
        absl::StrCat("LaplaceDistribution: location must be finite, got ",
                     location));
  }
  if (!std::isfinite(scale) || scale <= 0) {
    return absl::InvalidArgumentError(absl::StrCat(
        "LaplaceDistribution: scale must be finite and > 0, got ", scale));
  }
  return LaplaceDistribution(location, scale);
}

LaplaceDistribution LaplaceDistribution::ForBudget(double location,
                                                   PrivacyBudget budget) {
  return LaplaceDistribution(location, budget.laplace_scale());
}

absl::StatusOr<double> LaplaceDistribution::Pdf(double r) const {
  if (!std::isfinite(r)) {
    return absl::InvalidArgumentError(
        absl::StrCat("Laplace pdf: r must be finite, got ", r));
  }
  return std::exp(-std::abs(r - location_) / scale_) / (2.0 * scale_);
}

absl::StatusOr<double> LaplaceDistribution::LogPdf(double r) const {
  if (!std::isfinite(r)) {
    return absl::InvalidArgumentError(
        absl::StrCat("Laplace log-pdf: r must be finite, got ", r));
  }
  return -std::abs(r - location_) / scale_ - std::log(2.0 * scale_);
}

absl::StatusOr<double> LaplaceDistribution::Cdf(double r) const {
  if (std::isnan(r)) {
    return absl::InvalidArgumentError("Laplace cdf: r is NaN");
  }
  const double z = (r - location_) / scale_;
  if (z < 0) return 0.5 * std::exp(z);
  return 1.0 - 0.5 * std::exp(-z);
}

absl::StatusOr<double> LaplaceDistribution::Survival(double r) const {
  if (std::isnan(r)) {
    return absl::InvalidArgumentError("Laplace survival: r is NaN");
  }
  const double z = (r - location_) / scale_;
  if (z < 0) return 1.0 - 0.5 * std::exp(z);
  return 0.5 * std::exp(-z);
}

double LaplaceDistribution::Sample(SeededRng& rng) const {
  const double u = rng.NextOpenUnit() - 0.5;
  const double magnitude = -scale_ * std::log1p(-2.0 * std::abs(u));
  return u < 0 ? location_ - magnitude : location_ + magnitude;
}

}  // namespace dpodds
