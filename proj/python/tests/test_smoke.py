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
"""Smoke tests for the dpodds Python module."""

import math
import pathlib

import pytest

import dpodds

SCENARIOS = pathlib.Path(__file__).resolve().parents[2] / "scenarios"


def test_default_table():
  rows = dpodds.odds_table()
  assert [(r["epsilon"], r["x"], r["y"]) for r in rows] == [
      (0.1, 48, 52), (0.5, 39, 61), (2.0, 18, 82), (4.0, 7, 93)]


def test_threshold_at_even_prior():
  assert dpodds.decision_threshold(0.5, 1.7) == 0.5


def test_threshold_closed_form():
  p, eps = 0.3, 2.0
  expected = 0.5 + (math.log(1 - p) - math.log(p)) / (2 * eps)
  assert dpodds.decision_threshold(p, eps) == pytest.approx(expected, abs=1e-12)


def test_extreme_prior_raises():
  with pytest.raises(dpodds.ExtremePriorError, match="ExtremePrior"):
    dpodds.compute_odds(0.9, 0.1)
  assert issubclass(dpodds.ExtremePriorError, ValueError)


def test_invalid_epsilon_raises_value_error():
  with pytest.raises(ValueError):
    dpodds.compute_odds(0.5, -1.0)


def test_exceedance_values():
  odds = dpodds.compute_odds(0.5, 2.0)
  assert odds["p_without"] == pytest.approx(0.5 * math.exp(-1), abs=1e-15)
  assert odds["p_with"] == pytest.approx(1 - 0.5 * math.exp(-1), abs=1e-15)


def test_posterior_at_threshold_is_half():
  t = dpodds.decision_threshold(0.4, 1.0)
  assert dpodds.posterior_no(t, 0.4, 1.0) == pytest.approx(0.5, abs=1e-12)


def test_laplace_functions():
  assert dpodds.laplace_pdf(0.0, 0.0, 1.0) == 0.5
  assert dpodds.laplace_cdf(1.0, 0.0, 1.0) == pytest.approx(
      1 - 0.5 * math.exp(-1), abs=1e-15)


def test_release_counts_are_seeded():
  a = dpodds.release_counts(0, True, 0.5, 100, seed=7)
  b = dpodds.release_counts(0, True, 0.5, 100, seed=7)
  c = dpodds.release_counts(0, True, 0.5, 100, seed=8)
  assert a == b
  assert a != c
  assert any(v < 0 for v in a)


def test_monte_carlo_close_to_closed_form():
  mc = dpodds.monte_carlo_odds(0.5, 1.0, 200_000, seed=3)
  exact = dpodds.compute_odds(0.5, 1.0)
  assert abs(mc["p_with"] - exact["p_with"]) < 0.005
  assert abs(mc["p_without"] - exact["p_without"]) < 0.005


def test_dp_ratio_check():
  points = [i / 10 for i in range(-500, 500)]
  assert dpodds.dp_ratio_check(1.0, 0.0, 1.0, points)


def test_explain_payload():
  result = dpodds.explain(0.5, method="odds_vis", seed=11)
  assert result["schema_version"] == dpodds.SCHEMA_VERSION
  assert (result["odds"]["x"], result["odds"]["y"]) == (39, 61)
  assert "<svg" in result["artifacts"]["icon_array_svg"]
  assert len(result["artifacts"]["sample_reports"]["draws_share"]) == 5


def test_explain_setting_changes_only_wording():
  optional = dpodds.explain(2.0, seed=5)
  mandatory = dpodds.explain(2.0, seed=5, setting="mandatory")
  assert optional["odds"] == mandatory["odds"]
  assert (optional["artifacts"]["odds_text"]["line_share"]
          != mandatory["artifacts"]["odds_text"]["line_share"])


def test_scenario_files():
  workplace = dpodds.load_scenario(SCENARIOS / "workplace.json")
  assert workplace == dpodds.workplace_scenario()
  custom = dict(workplace, adversary_label="the agency")
  text = dpodds.explain(1.0, method="control_no_epsilon", scenario=custom)
  assert "shared with the agency" in text["artifacts"]["control_text"]


def test_bad_scenario_rejected():
  with pytest.raises(ValueError, match="question_text"):
    dpodds.explain(1.0, scenario={"question_text": 3})


def test_methods_listed():
  assert "odds_text" in dpodds.METHODS
  assert "sample_reports" in dpodds.METHODS
