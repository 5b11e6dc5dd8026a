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

#ifndef DPODDS_RENDER_H_
#define DPODDS_RENDER_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "dpodds/adversary.h"
#include "dpodds/scenario.h"

namespace dpodds {

// Frequency-framed text: "If you <action>, x out of N potential <outputs>
// will lead <adversary> to believe you responded <label>."
struct OddsTextExplanation {
  std::string preamble;
  std::string line_withhold;
  std::string line_share;
  OddsPair odds;

  std::string Text() const;
};

enum class IconGlyph { kCircle, kSquare };

inline constexpr char kHighlightColor[] = "#4E79A7";
inline constexpr char kBaseColor[] = "#BAB0AC";

// Two 10x10 panels. Icon k (0-based) sits at column k / rows, row k % rows,
// so the fill runs top to bottom within a column, columns left to right.
struct IconArraySpec {
  int rows = 10;
  int cols = 10;
  int64_t highlighted_withhold = 0;
  int64_t highlighted_share = 0;
  IconGlyph glyph = IconGlyph::kCircle;
  std::string highlight_color = kHighlightColor;
  std::string base_color = kBaseColor;
};

struct IconArray {
  std::string svg;
  IconArraySpec spec;
  OddsTextExplanation text;
};

struct SampleReportsExplanation {
  std::vector<double> draws_withhold;
  std::vector<double> draws_share;
  std::string disclaimer;
  std::string label_withhold;
  std::string label_share;
  uint64_t seed = 0;
  int display_precision = 1;

  std::vector<std::string> DisplayWithhold() const;
  std::vector<std::string> DisplayShare() const;
  std::string Text() const;
};

// Fixed-point with `precision` decimals; negative zero prints as "0.0".
std::string FormatDraw(double value, int precision = 1);

// Scenario description shared by every artifact: question, consequences
// and the fact that the adversary sees a count.
std::string ScenarioText(const Scenario& scenario);

absl::StatusOr<OddsTextExplanation> RenderOddsText(
    const ExplanationRequest& request);

// Requires denominator == 100.
absl::StatusOr<IconArray> RenderIconArray(const ExplanationRequest& request,
                                          IconGlyph glyph = IconGlyph::kCircle);

// Emits the SVG for a spec with panel captions. Pure and byte-stable.
std::string IconArraySvg(const IconArraySpec& spec,
                         absl::string_view caption_withhold,
                         absl::string_view caption_share);

// n draws per branch through ReleaseCount with one SeededRng(seed): the
// withheld-branch draws come first, then the shared-branch draws.
absl::StatusOr<SampleReportsExplanation> RenderSampleReports(
    const ExplanationRequest& request);

// The two epsilon-free comparison texts. Other methods are rejected.
absl::StatusOr<std::string> RenderControl(const ExplanationRequest& request);

}  // namespace dpodds

#endif  // DPODDS_RENDER_H_
