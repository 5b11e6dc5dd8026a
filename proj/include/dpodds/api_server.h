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

#ifndef DPODDS_API_SERVER_H_
#define DPODDS_API_SERVER_H_

#include <map>
#include <memory>
#include <string>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "dpodds/scenario.h"

namespace httplib {
class Server;
}

namespace dpodds {

inline constexpr char kDefaultScenarioId[] = "workplace";

using QueryParams = std::multimap<std::string, std::string>;

struct ApiResponse {
  int status = 200;
  std::string body;
};

// HTTP status for a library error: 400 validation, 404 unknown resource,
// 422 ExtremePrior, 500 anything else.
int HttpStatusFor(const absl::Status& status);

// Stateless request handlers. Each returns a JSON body; errors carry
// {"error", "message", "schema_version"}.
ApiResponse HandleExplain(const ScenarioRegistry& registry,
                          const QueryParams& params);
ApiResponse HandleTable(const QueryParams& params);
ApiResponse HandleScenarios(const ScenarioRegistry& registry);

// HTTP/1.1 front end over the handlers. The registry is fixed at
// construction, so concurrent requests share only immutable state.
class ApiServer {
 public:
  explicit ApiServer(ScenarioRegistry registry);
  ~ApiServer();

  ApiServer(const ApiServer&) = delete;
  ApiServer& operator=(const ApiServer&) = delete;

  // Binds host:port; port 0 picks a free port. Returns the bound port.
  absl::StatusOr<int> Bind(const std::string& host, int port);
  // Serves until Stop(). Must follow a successful Bind().
  void ListenAfterBind();
  void Stop();

  const ScenarioRegistry& registry() const { return registry_; }

 private:
  const ScenarioRegistry registry_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace dpodds

#endif  // DPODDS_API_SERVER_H_
