/*
 * Copyright 2026 The EOGM Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef EOGM_EVAL_HPP
#define EOGM_EVAL_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eogm/grid.hpp"

namespace eogm {

/// Evaluated states: the three singletons plus the composite "occupied
/// either way", which treats any occupied label as positive.
enum class EvalState : int {
  kFree = 0,
  kStaticOccupied = 1,
  kDynamicOccupied = 2,
  kAnyOccupied = 3,
};

inline constexpr int kNumEvalStates = 4;

inline constexpr std::array<EvalState, kNumEvalStates> kAllEvalStates = {
    EvalState::kFree, EvalState::kStaticOccupied, EvalState::kDynamicOccupied,
    EvalState::kAnyOccupied};

const char* eval_state_name(EvalState state);

struct StateCounts {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;
};

/// Per-pair confusion counts. Cells whose ground truth is unknown (high
/// unknown mass, or no label clearing the threshold) are masked and do
/// not enter any count; evaluated + masked always covers the whole grid.
struct ConfusionCounts {
  std::array<StateCounts, kNumEvalStates> states;
  std::int64_t evaluated_cells = 0;
  std::int64_t masked_cells = 0;

  StateCounts& operator[](EvalState s) { return states[static_cast<int>(s)]; }
  const StateCounts& operator[](EvalState s) const { return states[static_cast<int>(s)]; }
};

enum class AverageMode { kMicro, kMacro };

/// Aggregated metrics. Precision/recall are empty when their denominator
/// is zero; they are never coerced to a number.
struct EvalReport {
  std::array<StateCounts, kNumEvalStates> totals;
  std::array<std::optional<double>, kNumEvalStates> precision;
  std::array<std::optional<double>, kNumEvalStates> recall;
  std::int64_t evaluated_cells = 0;
  std::int64_t masked_cells = 0;
  std::size_t samples = 0;
  AverageMode mode = AverageMode::kMicro;
};

/// Confusion counts for one prediction/truth pair sharing a GridSpec.
/// Truth cells with unknown mass >= mask_level are masked; both grids are
/// labeled via classify_cell at the threshold.
ConfusionCounts evaluate_pair(const EvidentialGridd& pred, const EvidentialGridd& truth,
                              double threshold = 0.5, double mask_level = 0.5);

/// Micro averaging sums counts across samples before dividing; macro
/// averages the per-sample ratios over the samples where they are
/// defined.
EvalReport aggregate(const std::vector<ConfusionCounts>& reports,
                     AverageMode mode = AverageMode::kMicro);

std::string report_to_text(const EvalReport& report);
std::string report_to_json(const EvalReport& report);

}  // namespace eogm

#endif  // EOGM_EVAL_HPP
