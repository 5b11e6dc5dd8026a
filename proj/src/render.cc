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

#include "dpodds/render.h"

#include <cctype>
#include <utility>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "dpodds/mechanism.h"

namespace dpodds {
namespace {

constexpr int kCell = 22;
constexpr int kRadius = 9;
constexpr int kMargin = 20;
constexpr int kCaptionHeight = 28;
constexpr int kPanelGap = 24;
constexpr int kSvgWidth = 720;

std::string Capitalize(absl::string_view text) {
  std::string out(text);
  if (!out.empty()) {
    out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  }
  return out;
}

std::string XmlEscape(absl::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string OddsLine(const Scenario& s, absl::string_view action, int64_t count,
                     int64_t denominator) {
  return absl::StrCat("If you ", action, ", ", count, " out of ", denominator,
                      " potential ", s.output_noun, " will lead ",
                      s.adversary_label, " to believe you responded ",
                      s.sensitive_answer_label, ".");
}

std::string NoisyReleasePreamble(const Scenario& s) {
  return absl::StrCat(
      "A privacy protection method is applied before ", s.adversary_label,
      " sees the results. The exact number of ", s.sensitive_answer_label,
      " responses is never reported. Instead, many potential ", s.output_noun,
      " are generated, each showing a number that may be somewhat lower or "
      "higher than the actual number of ",
      s.sensitive_answer_label, " responses. Only ONE of these potential ",
      s.output_noun, " is randomly chosen and sent to ", s.adversary_label,
      ".");
}

void AppendPanel(std::string& svg, const IconArraySpec& spec,
                 absl::string_view id, absl::string_view caption, int top,
                 int64_t highlighted) {
  absl::StrAppend(&svg, "  <g id=\"", id, "\">\n");
  absl::StrAppend(&svg, "    <text x=\"", kMargin, "\" y=\"", top + 18,
                  "\" font-family=\"sans-serif\" font-size=\"13\">",
                  XmlEscape(caption), "</text>\n");
  const int grid_top = top + kCaptionHeight;
  const int total = spec.rows * spec.cols;
  for (int k = 0; k < total; ++k) {
    const int col = k / spec.rows;
    const int row = k % spec.rows;
    const int cx = kMargin + kCell / 2 + col * kCell;
    const int cy = grid_top + kCell / 2 + row * kCell;
    const std::string& fill =
        k < highlighted ? spec.highlight_color : spec.base_color;
    if (spec.glyph == IconGlyph::kCircle) {
      absl::StrAppend(&svg, "    <circle cx=\"", cx, "\" cy=\"", cy,
                      "\" r=\"", kRadius, "\" fill=\"", fill, "\"/>\n");
    } else {
      absl::StrAppend(&svg, "    <rect x=\"", cx - kRadius, "\" y=\"",
                      cy - kRadius, "\" width=\"", 2 * kRadius,
                      "\" height=\"", 2 * kRadius, "\" fill=\"", fill,
                      "\"/>\n");
    }
  }
  absl::StrAppend(&svg, "  </g>\n");
}

}  // namespace

std::string OddsTextExplanation::Text() const {
  return absl::StrCat(preamble, "\n\n", line_withhold, "\n", line_share, "\n");
}

std::string FormatDraw(double value, int precision) {
  std::string out = absl::StrFormat("%.*f", precision, value);
  if (out[0] == '-' && out.find_first_not_of("-0.") == std::string::npos) {
    out.erase(0, 1);
  }
  return out;
}

std::vector<std::string> SampleReportsExplanation::DisplayWithhold() const {
  std::vector<std::string> out;
  for (double v : draws_withhold) out.push_back(FormatDraw(v, display_precision));
  return out;
}

std::vector<std::string> SampleReportsExplanation::DisplayShare() const {
  std::vector<std::string> out;
  for (double v : draws_share) out.push_back(FormatDraw(v, display_precision));
  return out;
}

std::string SampleReportsExplanation::Text() const {
  return absl::StrCat(disclaimer, "\n\n", label_withhold, ": ",
                      absl::StrJoin(DisplayWithhold(), ", "), "\n",
                      label_share, ": ", absl::StrJoin(DisplayShare(), ", "),
                      "\n");
}

std::string ScenarioText(const Scenario& s) {
  const absl::string_view participation =
      s.setting == Setting::kOptional ? "optional" : "required";
  return absl::StrCat(
      "You are asked to answer the following question. Participation is ",
      participation, ".\n\n", s.question_text, "\n\n", s.consequence_text,
      "\n\n", Capitalize(s.adversary_label),
      " will receive a report with the total number of ",
      s.sensitive_answer_label, " responses. ", Capitalize(s.adversary_label),
      " knows how everyone else will respond, so a count that differs from "
      "what ",
      s.adversary_label,
      " expects points to your answer.\n");
}

absl::StatusOr<OddsTextExplanation> RenderOddsText(
    const ExplanationRequest& request) {
  if (absl::Status status = ValidateRequest(request); !status.ok()) {
    return status;
  }
  const Scenario& s = request.scenario;
  absl::StatusOr<AdversaryModel> model =
      AdversaryModel::Create(request.prior_no, request.epsilon, s.mu_without());
  if (!model.ok()) return model.status();
  absl::StatusOr<OddsPair> odds = ComputeOdds(*model, request.denominator);
  if (!odds.ok()) return odds.status();

  OddsTextExplanation out;
  out.preamble = NoisyReleasePreamble(s);
  out.line_withhold =
      OddsLine(s, s.action_withhold_label, odds->x, odds->denominator);
  out.line_share = OddsLine(s, s.action_share_label, odds->y, odds->denominator);
  out.odds = *odds;
  return out;
}

std::string IconArraySvg(const IconArraySpec& spec,
                         absl::string_view caption_withhold,
                         absl::string_view caption_share) {
  const int panel_height = kCaptionHeight + spec.rows * kCell;
  const int height = 2 * panel_height + kPanelGap + kMargin;
  std::string svg = absl::StrCat(
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"",
      kSvgWidth, "\" height=\"", height, "\" viewBox=\"0 0 ", kSvgWidth, " ",
      height, "\">\n");
  AppendPanel(svg, spec, "panel-withhold", caption_withhold, 0,
              spec.highlighted_withhold);
  AppendPanel(svg, spec, "panel-share", caption_share,
              panel_height + kPanelGap, spec.highlighted_share);
  svg += "</svg>\n";
  return svg;
}

absl::StatusOr<IconArray> RenderIconArray(const ExplanationRequest& request,
                                          IconGlyph glyph) {
  if (request.denominator != 100) {
    return absl::InvalidArgumentError(absl::StrCat(
        "unsupported denominator ", request.denominator,
        " for icon arrays (the 10x10 grid requires 100)"));
  }
  absl::StatusOr<OddsTextExplanation> text = RenderOddsText(request);
  if (!text.ok()) return text.status();

  IconArray out;
  out.spec.highlighted_withhold = text->odds.x;
  out.spec.highlighted_share = text->odds.y;
  out.spec.glyph = glyph;
  out.svg = IconArraySvg(out.spec, text->line_withhold, text->line_share);
  out.text = *std::move(text);
  return out;
}

absl::StatusOr<SampleReportsExplanation> RenderSampleReports(
    const ExplanationRequest& request) {
  if (absl::Status status = ValidateRequest(request); !status.ok()) {
    return status;
  }
  const Scenario& s = request.scenario;
  absl::StatusOr<CountQuery> query = CountQuery::Create(s.others_sensitive_count);
  if (!query.ok()) return query.status();

  SampleReportsExplanation out;
  out.seed = request.seed;
  out.disclaimer = absl::StrCat("The total number of ", s.sensitive_answer_label,
                                " responses may be fractional or negative due "
                                "to the privacy method.");
  out.label_withhold = absl::StrCat("If you ", s.action_withhold_label);
  out.label_share = absl::StrCat("If you ", s.action_share_label);
  SeededRng rng(request.seed);
  for (int64_t i = 0; i < request.n_samples; ++i) {
    out.draws_withhold.push_back(
        ReleaseCount(*query, Branch::kWithoutSubject, request.epsilon, rng)
            .value);
  }
  for (int64_t i = 0; i < request.n_samples; ++i) {
    out.draws_share.push_back(
        ReleaseCount(*query, Branch::kWithSubject, request.epsilon, rng).value);
  }
  return out;
}

absl::StatusOr<std::string> RenderControl(const ExplanationRequest& request) {
  if (absl::Status status = ValidateScenario(request.scenario); !status.ok()) {
    return status;
  }
  const Scenario& s = request.scenario;
  switch (request.method) {
    case Method::kControlDeterministic:
      return ScenarioText(s);
    case Method::kControlNoEpsilon:
      return absl::StrCat(
          ScenarioText(s), "\n",
          "However, to respect your personal information privacy, the report "
          "shared with ",
          s.adversary_label, " will include the total number of ",
          s.sensitive_answer_label,
          " responses processed using a privacy protection method. This "
          "method protects employees' privacy by adding random noise to "
          "aggregated data, for example, the total number of ",
          s.sensitive_answer_label,
          " responses, such that the probability that ", s.adversary_label,
          " can infer your response on the survey is lower than without the "
          "privacy protection.\n");
    default:
      return absl::InvalidArgumentError(absl::StrCat(
          "RenderControl: method ", MethodName(request.method),
          " is not a control"));
  }
}

}  // namespace dpodds
