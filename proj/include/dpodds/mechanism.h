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

#ifndef DPODDS_MECHANISM_H_
#define DPODDS_MECHANISM_H_

#include <cstdint>
#include <span>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "dpodds/privacy_budget.h"
#include "dpodds/rng.h"

namespace dpodds {

// Which of the two neighbouring databases a release is drawn from.
enum class Branch { kWithoutSubject, kWithSubject };

absl::string_view BranchName(Branch branch);

// A count of sensitive answers among everyone except the subject. Adding the
// subject's sensitive answer moves the count by exactly one.
class CountQuery {
 public:
  static constexpr int64_t kSensitivity = 1;

  static absl::StatusOr<CountQuery> Create(int64_t true_count_without);

  int64_t true_count_without() const { return true_count_without_; }
  int64_t true_count_with() const { return true_count_without_ + kSensitivity; }
  int64_t sensitivity() const { return kSensitivity; }
  double TrueCount(Branch branch) const {
    return static_cast<double>(branch == Branch::kWithSubject
                                   ? true_count_with()
                                   : true_count_without());
  }

 private:
  explicit CountQuery(int64_t count) : true_count_without_(count) {}

  int64_t true_count_without_;
};

struct MechanismOutput {
  double value;
  PrivacyBudget epsilon;
  Branch branch;
};

// Central-model Laplace release: true count plus Lap(0, 1/epsilon). The value
// is returned as drawn; it may be negative or fractional.
MechanismOutput ReleaseCount(const CountQuery& query, Branch branch,
                             PrivacyBudget epsilon, SeededRng& rng);

// Checks pdf(r; mu1) / pdf(r; mu0) lies in [e^-eps, e^eps] at every point,
// allowing 1e-9 relative slack. The ratio is taken in log space so it stays
// defined where both densities underflow. Returns InvalidArgument when
// |mu0 - mu1| exceeds the count sensitivity or a point is not finite.
absl::StatusOr<bool> DpRatioCheck(PrivacyBudget epsilon, double mu0, double mu1,
                                  std::span<const double> points);

}  // namespace dpodds

#endif  // DPODDS_MECHANISM_H_
