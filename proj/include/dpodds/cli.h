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

#ifndef DPODDS_CLI_H_
#define DPODDS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

#include "absl/status/status.h"

namespace dpodds {

// Process exit codes; a stable contract for scripts.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,         // parse or validation failure
  kExitExtremePrior = 2,  // prior too extreme for the budget
  kExitIo = 3,            // file or socket failure
  kExitOracleGap = 4,     // `simulate` gap above 4 standard errors
};

int ExitCodeFor(const absl::Status& status);

// Runs one invocation. `args` excludes the program name. Errors are printed
// to `err` as a single JSON line: {"error":..., "exit_code":..., "message":...}.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace dpodds

#endif  // DPODDS_CLI_H_
