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

#ifndef DPODDS_PRIVACY_BUDGET_H_
#define DPODDS_PRIVACY_BUDGET_H_

#include <cmath>

#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"

namespace dpodds {

// A validated privacy budget epsilon. Always finite and strictly positive.
class PrivacyBudget {
 public:
  static absl::StatusOr<PrivacyBudget> Create(double epsilon) {
    if (!std::isfinite(epsilon) || epsilon <= 0) {
      return absl::InvalidArgumentError(absl::StrCat(
          "PrivacyBudget: epsilon must be finite and > 0, got ", epsilon));
    }
    return PrivacyBudget(epsilon);
  }

  double epsilon() const { return epsilon_; }

  // Scale of the Laplace noise for a sensitivity-1 query.
  double laplace_scale() const { return 1.0 / epsilon_; }

  friend bool operator==(PrivacyBudget a, PrivacyBudget b) {
    return a.epsilon_ == b.epsilon_;
  }

 private:
  explicit PrivacyBudget(double epsilon) : epsilon_(epsilon) {}

  double epsilon_;
};

}  // namespace dpodds

#endif  // DPODDS_PRIVACY_BUDGET_H_
