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

// Python bindings for the dpodds core.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "dpodds/adversary.h"
#include "dpodds/api_server.h"
#include "dpodds/explain.h"
#include "dpodds/laplace.h"
#include "dpodds/mechanism.h"
#include "dpodds/privacy_budget.h"
#include "dpodds/rng.h"
#include "dpodds/scenario.h"

namespace py = pybind11;

namespace dpodds {
namespace {

py::object* extreme_prior_error = nullptr;

void Raise(const absl::Status& status) {
  const std::string message(status.message());
  if (IsExtremePrior(status)) {
    PyErr_SetString(extreme_prior_error->ptr(), message.c_str());
    throw py::error_already_set();
  }
  if (status.code() == absl::StatusCode::kNotFound) {
    PyErr_SetString(PyExc_OSError, message.c_str());
    throw py::error_already_set();
  }
  throw py::value_error(message);
}

template <typename T>
T Unwrap(absl::StatusOr<T> value) {
  if (!value.ok()) Raise(value.status());
  return *std::move(value);
}

void Check(const absl::Status& status) {
  if (!status.ok()) Raise(status);
}

AdversaryModel Model(double prior_no, double epsilon, double mu_without) {
  return Unwrap(AdversaryModel::Create(
      prior_no, Unwrap(PrivacyBudget::Create(epsilon)), mu_without));
}

py::dict OddsDict(const OddsPair& odds) {
  py::dict d;
  d["x"] = odds.x;
  d["y"] = odds.y;
  d["denominator"] = odds.denominator;
  d["p_without"] = odds.p_without;
  d["p_with"] = odds.p_with;
  d["threshold"] = odds.threshold;
  return d;
}

std::string ExplainJson(double epsilon, const std::string& method,
                        double prior_no, int64_t denominator,
                        int64_t n_samples, uint64_t seed,
                        const std::optional<std::string>& scenario_json,
                        const std::optional<std::string>& setting,
                        const std::string& scenario_id) {
  ExplanationRequest request{
      .scenario = scenario_json ? Unwrap(ParseScenario(*scenario_json))
                                : WorkplaceScenario(),
      .epsilon = Unwrap(PrivacyBudget::Create(epsilon)),
      .method = Unwrap(ParseMethod(method)),
      .prior_no = prior_no,
      .denominator = denominator,
      .n_samples = n_samples,
      .seed = seed};
  if (setting) {
    request.scenario =
        request.scenario.WithSetting(Unwrap(ParseSetting(*setting)));
  }
  return ExplanationToJson(Unwrap(Explain(request)), scenario_id).dump();
}

}  // namespace
}  // namespace dpodds

PYBIND11_MODULE(_core, m) {
  using namespace dpodds;
  m.doc() = "Frequency-framed odds explanations for Laplace count releases.";

  static py::object error = py::reinterpret_borrow<py::object>(
      PyErr_NewException("dpodds.ExtremePriorError", PyExc_ValueError,
                         nullptr));
  extreme_prior_error = &error;
  m.attr("ExtremePriorError") = error;

  m.attr("SCHEMA_VERSION") = kSchemaVersion;
  m.attr("DEFAULT_SEED") = kDefaultSeed;
  m.attr("METHODS") = [] {
    std::vector<std::string> names;
    for (Method method : AllMethods()) names.emplace_back(MethodName(method));
    return names;
  }();

  m.def(
      "decision_threshold",
      [](double prior_no, double epsilon, double mu_without) {
        return Unwrap(DecisionThreshold(Model(prior_no, epsilon, mu_without)));
      },
      py::arg("prior_no"), py::arg("epsilon"), py::arg("mu_without") = 0.0);

  m.def(
      "posterior_no",
      [](double r, double prior_no, double epsilon, double mu_without) {
        return PosteriorNo(Model(prior_no, epsilon, mu_without), r);
      },
      py::arg("r"), py::arg("prior_no"), py::arg("epsilon"),
      py::arg("mu_without") = 0.0);

  m.def(
      "compute_odds",
      [](double prior_no, double epsilon, int64_t denominator,
         double mu_without) {
        return OddsDict(Unwrap(
            ComputeOdds(Model(prior_no, epsilon, mu_without), denominator)));
      },
      py::arg("prior_no"), py::arg("epsilon"), py::arg("denominator") = 100,
      py::arg("mu_without") = 0.0);

  m.def(
      "monte_carlo_odds",
      [](double prior_no, double epsilon, int64_t trials, uint64_t seed) {
        SeededRng rng(seed);
        AdversaryModel model = Model(prior_no, epsilon, 0.0);
        py::gil_scoped_release release;
        OddsPair odds = Unwrap(MonteCarloOdds(model, trials, rng));
        py::gil_scoped_acquire acquire;
        return OddsDict(odds);
      },
      py::arg("prior_no"), py::arg("epsilon"), py::arg("trials"),
      py::arg("seed") = kDefaultSeed);

  m.def(
      "odds_table",
      [](std::optional<std::vector<double>> epsilons, double prior_no,
         int64_t denominator) {
        std::vector<TableRow> rows = Unwrap(OddsTable(
            epsilons.value_or(DefaultTableEpsilons()), prior_no, denominator));
        py::list out;
        for (const TableRow& row : rows) {
          py::dict d = OddsDict(row.odds);
          d["epsilon"] = row.epsilon;
          out.append(d);
        }
        return out;
      },
      py::arg("epsilons") = py::none(), py::arg("prior_no") = kDefaultPriorNo,
      py::arg("denominator") = kDefaultDenominator);

  m.def(
      "laplace_pdf",
      [](double x, double location, double scale) {
        return Unwrap(Unwrap(LaplaceDistribution::Create(location, scale)).Pdf(x));
      },
      py::arg("x"), py::arg("location"), py::arg("scale"));

  m.def(
      "laplace_cdf",
      [](double x, double location, double scale) {
        return Unwrap(Unwrap(LaplaceDistribution::Create(location, scale)).Cdf(x));
      },
      py::arg("x"), py::arg("location"), py::arg("scale"));

  m.def(
      "release_counts",
      [](int64_t true_count_without, bool with_subject, double epsilon,
         int64_t n, uint64_t seed) {
        if (n < 0) throw py::value_error("n must be non-negative");
        CountQuery query = Unwrap(CountQuery::Create(true_count_without));
        PrivacyBudget budget = Unwrap(PrivacyBudget::Create(epsilon));
        Branch branch =
            with_subject ? Branch::kWithSubject : Branch::kWithoutSubject;
        SeededRng rng(seed);
        std::vector<double> values;
        values.reserve(n);
        for (int64_t i = 0; i < n; ++i) {
          values.push_back(ReleaseCount(query, branch, budget, rng).value);
        }
        return values;
      },
      py::arg("true_count_without"), py::arg("with_subject"),
      py::arg("epsilon"), py::arg("n"), py::arg("seed") = kDefaultSeed);

  m.def(
      "dp_ratio_check",
      [](double epsilon, double mu0, double mu1, std::vector<double> points) {
        return Unwrap(DpRatioCheck(Unwrap(PrivacyBudget::Create(epsilon)), mu0,
                                   mu1, points));
      },
      py::arg("epsilon"), py::arg("mu0"), py::arg("mu1"), py::arg("points"));

  m.def(
      "normalize_scenario",
      [](const std::string& document) {
        return SerializeScenario(Unwrap(ParseScenario(document)));
      },
      py::arg("document"));

  m.def("workplace_scenario",
        [] { return SerializeScenario(WorkplaceScenario()); });

  m.def("explain_json", &ExplainJson, py::arg("epsilon"),
        py::arg("method") = "odds_text", py::arg("prior_no") = kDefaultPriorNo,
        py::arg("denominator") = kDefaultDenominator,
        py::arg("n_samples") = kDefaultSamples,
        py::arg("seed") = kDefaultSeed, py::arg("scenario_json") = py::none(),
        py::arg("setting") = py::none(),
        py::arg("scenario_id") = std::string(kDefaultScenarioId));
}
