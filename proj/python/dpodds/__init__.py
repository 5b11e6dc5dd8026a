# Copyright 2026 The dpodds Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Frequency-framed odds explanations for Laplace count releases."""

import json

from dpodds._core import (
    DEFAULT_SEED,
    METHODS,
    SCHEMA_VERSION,
    ExtremePriorError,
    compute_odds,
    decision_threshold,
    dp_ratio_check,
    laplace_cdf,
    laplace_pdf,
    monte_carlo_odds,
    odds_table,
    posterior_no,
    release_counts,
)
from dpodds import _core


def workplace_scenario():
  """Returns the built-in scenario as a dict."""
  return json.loads(_core.workplace_scenario())


def load_scenario(path):
  """Reads and validates a scenario file, returning it as a dict."""
  with open(path, encoding="utf-8") as f:
    return json.loads(_core.normalize_scenario(f.read()))


def explain(epsilon, method="odds_text", prior_no=0.5, denominator=100,
            n_samples=5, seed=DEFAULT_SEED, scenario=None, setting=None,
            scenario_id="workplace"):
  """Builds every explanation artifact; same payload as the CLI and API."""
  scenario_json = None if scenario is None else json.dumps(scenario)
  return json.loads(
      _core.explain_json(epsilon, method, prior_no, denominator, n_samples,
                         seed, scenario_json, setting, scenario_id))


__all__ = [
    "DEFAULT_SEED",
    "METHODS",
    "SCHEMA_VERSION",
    "ExtremePriorError",
    "compute_odds",
    "decision_threshold",
    "dp_ratio_check",
    "explain",
    "laplace_cdf",
    "laplace_pdf",
    "load_scenario",
    "monte_carlo_odds",
    "odds_table",
    "posterior_no",
    "release_counts",
    "workplace_scenario",
]
