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

#include "dpodds/cli.h"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "dpodds/adversary.h"
#include "dpodds/api_server.h"
#include "dpodds/explain.h"
#include "dpodds/scenario.h"
#include "json.hpp"

#ifndef DPODDS_SCENARIO_DIR
#define DPODDS_SCENARIO_DIR "scenarios"
#endif

namespace dpodds {
namespace {

namespace fs = std::filesystem;

struct ExplainFlags {
  std::string scenario;
  std::string epsilon;
  std::string prior = "0.5";
  std::string method = "odds_text";
  std::string denominator = "100";
  std::string samples = "5";
  std::string seed = std::to_string(kDefaultSeed);
  std::string out_dir = ".";
  std::string setting;
};

struct TableFlags {
  std::string epsilons = "0.1,0.5,2,4";
  std::string prior = "0.5";
  std::string denominator = "100";
  bool json = false;
};

struct SimulateFlags {
  std::string epsilon;
  std::string prior = "0.5";
  std::string trials = "1000000";
  std::string seed = std::to_string(kDefaultSeed);
  bool timing = false;
};

struct ServeFlags {
  std::string port = "8080";
  std::string host = "127.0.0.1";
  std::string scenarios_dir = DPODDS_SCENARIO_DIR;
};

absl::string_view ErrorName(const absl::Status& status) {
  if (IsExtremePrior(status)) return "ExtremePrior";
  switch (ExitCodeFor(status)) {
    case kExitUsage:
      return "InvalidArgument";
    case kExitIo:
      return "IoError";
    default:
      return "Internal";
  }
}

int ReportError(const absl::Status& status, std::ostream& err) {
  const int code = ExitCodeFor(status);
  nlohmann::ordered_json line;
  line["error"] = std::string(ErrorName(status));
  line["exit_code"] = code;
  line["message"] = std::string(status.message());
  err << line.dump() << "\n";
  return code;
}

absl::Status WriteFile(const fs::path& path, absl::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return absl::UnavailableError(
        absl::StrCat("cannot open ", path.string(), " for writing"));
  }
  out << content;
  out.close();
  if (!out) {
    return absl::UnavailableError(
        absl::StrCat("failed writing ", path.string()));
  }
  return absl::OkStatus();
}

absl::StatusOr<ExplanationRequest> BuildRequest(const ExplainFlags& f,
                                                std::string* scenario_id) {
  // Every numeric flag is checked before the scenario file is touched.
  absl::StatusOr<double> eps_value = ParseReal("epsilon", f.epsilon);
  if (!eps_value.ok()) return eps_value.status();
  absl::StatusOr<PrivacyBudget> eps = PrivacyBudget::Create(*eps_value);
  if (!eps.ok()) return eps.status();
  absl::StatusOr<double> prior = ParseReal("prior", f.prior);
  if (!prior.ok()) return prior.status();
  if (!(*prior > 0 && *prior < 1)) {
    return absl::InvalidArgumentError(
        absl::StrCat("prior: must be in (0, 1), got ", *prior));
  }
  absl::StatusOr<Method> method = ParseMethod(f.method);
  if (!method.ok()) return method.status();
  absl::StatusOr<int64_t> denominator = ParseInt("denominator", f.denominator);
  if (!denominator.ok()) return denominator.status();
  absl::StatusOr<int64_t> samples = ParseInt("samples", f.samples);
  if (!samples.ok()) return samples.status();
  absl::StatusOr<uint64_t> seed = ParseSeed(f.seed);
  if (!seed.ok()) return seed.status();
  std::optional<Setting> setting;
  if (!f.setting.empty()) {
    absl::StatusOr<Setting> parsed = ParseSetting(f.setting);
    if (!parsed.ok()) return parsed.status();
    setting = *parsed;
  }

  ExplanationRequest request{.scenario = WorkplaceScenario(),
                             .epsilon = *eps,
                             .method = *method,
                             .prior_no = *prior,
                             .denominator = *denominator,
                             .n_samples = *samples,
                             .seed = *seed};
  if (absl::Status status = ValidateRequest(request); !status.ok()) {
    return status;
  }

  *scenario_id = kDefaultScenarioId;
  if (!f.scenario.empty()) {
    absl::StatusOr<Scenario> scenario = LoadScenarioFile(f.scenario);
    if (!scenario.ok()) return scenario.status();
    request.scenario = *std::move(scenario);
    *scenario_id = fs::path(f.scenario).stem().string();
  }
  if (setting.has_value() && *setting != request.scenario.setting) {
    request.scenario = request.scenario.WithSetting(*setting);
  }
  return request;
}

int RunExplain(const ExplainFlags& flags, std::ostream& out,
               std::ostream& err) {
  std::string scenario_id;
  absl::StatusOr<ExplanationRequest> request = BuildRequest(flags, &scenario_id);
  if (!request.ok()) return ReportError(request.status(), err);
  absl::StatusOr<Explanation> explanation = Explain(*request);
  if (!explanation.ok()) return ReportError(explanation.status(), err);

  std::error_code ec;
  fs::create_directories(flags.out_dir, ec);
  if (ec) {
    return ReportError(absl::UnavailableError(absl::StrCat(
                           "cannot create ", flags.out_dir, ": ", ec.message())),
                       err);
  }
  const std::string stem =
      absl::StrCat(MethodName(request->method), "_",
                   EpsilonTag(request->epsilon.epsilon()));
  const fs::path artifact_path =
      fs::path(flags.out_dir) /
      absl::StrCat(stem, ".", explanation->PrimaryExtension());
  const fs::path json_path = fs::path(flags.out_dir) / (stem + ".json");
  if (absl::Status s =
          WriteFile(artifact_path, explanation->PrimaryArtifact());
      !s.ok()) {
    return ReportError(s, err);
  }
  if (absl::Status s = WriteFile(
          json_path,
          ExplanationToJson(*explanation, scenario_id).dump(2) + "\n");
      !s.ok()) {
    return ReportError(s, err);
  }

  const OddsPair& o = explanation->odds;
  out << absl::StrFormat(
      "method=%s scenario=%s setting=%s epsilon=%s prior=%s denominator=%d "
      "x=%d y=%d p_without=%.6f p_with=%.6f threshold=%.6f\n",
      MethodName(request->method), scenario_id,
      SettingName(request->scenario.setting),
      EpsilonTag(request->epsilon.epsilon()), EpsilonTag(request->prior_no),
      o.denominator, o.x, o.y, o.p_without, o.p_with, o.threshold);
  if (request->method == Method::kSampleReports) {
    out << explanation->sample_reports.Text();
  }
  out << "wrote " << artifact_path.string() << "\n";
  out << "wrote " << json_path.string() << "\n";
  return kExitOk;
}

int RunTable(const TableFlags& flags, std::ostream& out, std::ostream& err) {
  absl::StatusOr<std::vector<double>> epsilons =
      ParseEpsilonList(flags.epsilons);
  if (!epsilons.ok()) return ReportError(epsilons.status(), err);
  absl::StatusOr<double> prior = ParseReal("prior", flags.prior);
  if (!prior.ok()) return ReportError(prior.status(), err);
  absl::StatusOr<int64_t> denominator =
      ParseInt("denominator", flags.denominator);
  if (!denominator.ok()) return ReportError(denominator.status(), err);
  if (*denominator < 2) {
    return ReportError(absl::InvalidArgumentError(absl::StrCat(
                           "denominator: must be >= 2, got ", *denominator)),
                       err);
  }
  absl::StatusOr<std::vector<TableRow>> rows =
      OddsTable(*epsilons, *prior, *denominator);
  if (!rows.ok()) return ReportError(rows.status(), err);

  if (flags.json) {
    out << TableToJson(*rows).dump(2) << "\n";
    return kExitOk;
  }
  out << absl::StrFormat("%-10s %6s %6s %12s %12s %12s\n", "epsilon", "x", "y",
                         "p_without", "p_with", "threshold");
  for (const TableRow& row : *rows) {
    out << absl::StrFormat("%-10s %6d %6d %12.6f %12.6f %12.6f\n",
                           EpsilonTag(row.epsilon), row.odds.x, row.odds.y,
                           row.odds.p_without, row.odds.p_with,
                           row.odds.threshold);
  }
  return kExitOk;
}

int RunSimulate(const SimulateFlags& flags, std::ostream& out,
                std::ostream& err) {
  absl::StatusOr<double> eps_value = ParseReal("epsilon", flags.epsilon);
  if (!eps_value.ok()) return ReportError(eps_value.status(), err);
  absl::StatusOr<PrivacyBudget> eps = PrivacyBudget::Create(*eps_value);
  if (!eps.ok()) return ReportError(eps.status(), err);
  absl::StatusOr<double> prior = ParseReal("prior", flags.prior);
  if (!prior.ok()) return ReportError(prior.status(), err);
  absl::StatusOr<int64_t> trials = ParseInt("trials", flags.trials);
  if (!trials.ok()) return ReportError(trials.status(), err);
  if (*trials < 1) {
    return ReportError(absl::InvalidArgumentError(absl::StrCat(
                           "trials: must be >= 1, got ", *trials)),
                       err);
  }
  absl::StatusOr<uint64_t> seed = ParseSeed(flags.seed);
  if (!seed.ok()) return ReportError(seed.status(), err);
  absl::StatusOr<AdversaryModel> model = AdversaryModel::Create(*prior, *eps);
  if (!model.ok()) return ReportError(model.status(), err);

  absl::StatusOr<OddsPair> exact = ComputeOdds(*model);
  if (!exact.ok()) return ReportError(exact.status(), err);
  const auto start = std::chrono::steady_clock::now();
  SeededRng rng(*seed);
  absl::StatusOr<OddsPair> empirical = MonteCarloOdds(*model, *trials, rng);
  if (!empirical.ok()) return ReportError(empirical.status(), err);
  const auto elapsed = std::chrono::steady_clock::now() - start;

  // 0.5 / sqrt(n) bounds the binomial standard error for any p.
  const double bound = 4 * 0.5 / std::sqrt(static_cast<double>(*trials));
  const double gap_without = std::abs(empirical->p_without - exact->p_without);
  const double gap_with = std::abs(empirical->p_with - exact->p_with);
  out << absl::StrFormat("epsilon=%s prior=%s trials=%d seed=%d threshold=%.6f\n",
                         EpsilonTag(eps->epsilon()), EpsilonTag(*prior),
                         *trials, *seed, exact->threshold);
  out << absl::StrFormat("%-10s %12s %12s %12s %12s\n", "quantity",
                         "closed_form", "empirical", "abs_gap", "bound_4se");
  out << absl::StrFormat("%-10s %12.4f %12.4f %12.6f %12.6f\n", "p_without",
                         exact->p_without, empirical->p_without, gap_without,
                         bound);
  out << absl::StrFormat("%-10s %12.4f %12.4f %12.6f %12.6f\n", "p_with",
                         exact->p_with, empirical->p_with, gap_with, bound);
  const bool pass = gap_without <= bound && gap_with <= bound;
  out << (pass ? "result=PASS\n" : "result=FAIL\n");
  if (flags.timing) {
    out << absl::StrFormat(
        "elapsed_ms=%d\n",
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count());
  }
  return pass ? kExitOk : kExitOracleGap;
}

int RunServe(const ServeFlags& flags, std::ostream& out, std::ostream& err) {
  absl::StatusOr<int64_t> port = ParseInt("port", flags.port);
  if (!port.ok()) return ReportError(port.status(), err);
  absl::StatusOr<ScenarioRegistry> registry =
      ScenarioRegistry::LoadDirectory(flags.scenarios_dir);
  if (!registry.ok()) return ReportError(registry.status(), err);
  ApiServer server(*std::move(registry));
  absl::StatusOr<int> bound = server.Bind(flags.host, static_cast<int>(*port));
  if (!bound.ok()) return ReportError(bound.status(), err);
  out << "listening on http://" << flags.host << ":" << *bound << "\n"
      << std::flush;
  server.ListenAfterBind();
  return kExitOk;
}

}  // namespace

int ExitCodeFor(const absl::Status& status) {
  if (status.ok()) return kExitOk;
  if (IsExtremePrior(status)) return kExitExtremePrior;
  switch (status.code()) {
    case absl::StatusCode::kInvalidArgument:
      return kExitUsage;
    case absl::StatusCode::kNotFound:
    case absl::StatusCode::kUnavailable:
    case absl::StatusCode::kPermissionDenied:
    case absl::StatusCode::kDataLoss:
      return kExitIo;
    default:
      return kExitUsage;
  }
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Odds-based explanations of the Laplace mechanism's epsilon",
               "dpodds"};
  app.require_subcommand(1, 1);

  ExplainFlags explain;
  CLI::App* explain_cmd =
      app.add_subcommand("explain", "Render one explanation artifact");
  explain_cmd->add_option("--scenario", explain.scenario,
                          "Scenario JSON file (default: built-in workplace)");
  explain_cmd->add_option("--epsilon", explain.epsilon, "Privacy budget")
      ->required();
  explain_cmd->add_option("--prior", explain.prior,
                          "Adversary prior that the answer is sensitive");
  explain_cmd->add_option("--method", explain.method,
                          "odds_text|odds_vis|sample_reports|"
                          "control_deterministic|control_no_epsilon");
  explain_cmd->add_option("--denominator", explain.denominator,
                          "Frequency denominator (default 100)");
  explain_cmd->add_option("--samples", explain.samples,
                          "Sample reports per branch (default 5)");
  explain_cmd->add_option("--seed", explain.seed, "Sample report seed");
  explain_cmd->add_option("--out-dir", explain.out_dir,
                          "Output directory (default .)");
  explain_cmd->add_option("--setting", explain.setting,
                          "Override the scenario setting (optional|mandatory)");

  TableFlags table;
  CLI::App* table_cmd =
      app.add_subcommand("table", "Print odds for a list of epsilons");
  table_cmd->add_option("--epsilons", table.epsilons,
                        "Comma-separated list (default 0.1,0.5,2,4)");
  table_cmd->add_option("--prior", table.prior, "Adversary prior");
  table_cmd->add_option("--denominator", table.denominator,
                        "Frequency denominator");
  table_cmd->add_flag("--json", table.json, "Emit JSON rows");

  SimulateFlags simulate;
  CLI::App* simulate_cmd = app.add_subcommand(
      "simulate", "Compare closed-form odds with a Monte Carlo estimate");
  simulate_cmd->add_option("--epsilon", simulate.epsilon, "Privacy budget")
      ->required();
  simulate_cmd->add_option("--prior", simulate.prior, "Adversary prior");
  simulate_cmd->add_option("--trials", simulate.trials,
                           "Trials per branch (default 1000000)");
  simulate_cmd->add_option("--seed", simulate.seed, "Generator seed");
  simulate_cmd->add_flag("--timing", simulate.timing, "Print elapsed time");

  ServeFlags serve;
  CLI::App* serve_cmd = app.add_subcommand("serve", "Run the JSON API");
  serve_cmd->add_option("--port", serve.port, "TCP port (default 8080)");
  serve_cmd->add_option("--host", serve.host,
                        "Bind address (default 127.0.0.1)");
  serve_cmd->add_option("--scenarios-dir", serve.scenarios_dir,
                        "Directory of scenario JSON files");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return ReportError(absl::InvalidArgumentError(e.what()), err);
  }

  if (explain_cmd->parsed()) return RunExplain(explain, out, err);
  if (table_cmd->parsed()) return RunTable(table, out, err);
  if (simulate_cmd->parsed()) return RunSimulate(simulate, out, err);
  return RunServe(serve, out, err);
}

}  // namespace dpodds
